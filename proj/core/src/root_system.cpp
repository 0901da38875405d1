#include "lierep/root_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "lierep/dynkin.hpp"

namespace lierep {

namespace {

__extension__ using Wide = __int128;
using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

// Positive roots by alpha-string closure: for a root beta and simple alpha_i
// with alpha_i-string beta - p alpha_i, ..., beta + q alpha_i we have
// p - q = <beta, alpha_i^vee>, so beta + alpha_i is a root iff q > 0.
std::vector<RootVector> close_positive_roots(const Matrix<int>& a) {
  const int n = static_cast<int>(a.rows());
  std::set<RootVector> all;
  std::vector<RootVector> level;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    level.push_back(e);
    all.insert(e);
  }
  while (!level.empty()) {
    std::set<RootVector> next;
    for (const auto& beta : level) {
      for (int i = 0; i < n; ++i) {
        std::int64_t p = 0;
        RootVector down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!all.contains(down)) break;
          ++p;
        }
        std::int64_t pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * a(j, i);
        if (p - pairing > 0) {
          RootVector up = beta;
          ++up[i];
          if (!all.contains(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    all.insert(next.begin(), next.end());
  }
  std::vector<RootVector> roots(all.begin(), all.end());
  std::sort(roots.begin(), roots.end(), [](const RootVector& x, const RootVector& y) {
    const auto hx = height(x), hy = height(y);
    return hx != hy ? hx < hy : x < y;
  });
  return roots;
}

Integer lcm_of_denominators(const Matrix<Rational>& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) l = boost::multiprecision::lcm(l, denominator(m(i, j)));
  return l;
}

Matrix<std::int64_t> scale_to_integers(const Matrix<Rational>& m, const Integer& scale) {
  Matrix<std::int64_t> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = to_int64(to_integer(m(i, j) * Rational(scale), "scaled matrix entry"));
  return out;
}

}  // namespace

std::int64_t height(std::span<const std::int64_t> c) {
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

RootSystem::RootSystem(LieType type) : type_(type), cartan_(cartan_matrix(type)) {
  const int n = rank();

  // Relative root lengths: a_ij |alpha_j|^2 = a_ji |alpha_i|^2 along edges.
  root_length2_.assign(n, Rational(0));
  root_length2_[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan_(i, j) == 0 || root_length2_[j] != 0) continue;
      root_length2_[j] = root_length2_[i] * (Rational(cartan_(j, i)) / cartan_(i, j));
      stack.push_back(j);
    }
  }
  const Rational longest = *std::max_element(root_length2_.begin(), root_length2_.end());
  for (auto& len : root_length2_) len = len * 2 / longest;

  symmetrizer_.resize(n);
  for (int i = 0; i < n; ++i) {
    symmetrizer_[i] = static_cast<int>(to_int64(to_integer(Rational(2) / root_length2_[i], "symmetrizer")));
  }

  simple_root_form_ = Matrix<Rational>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) simple_root_form_(i, j) = Rational(cartan_(i, j)) * root_length2_[j] / 2;

  inverse_cartan_ = inverse(to_rational(cartan_));
  gram_ = Matrix<Rational>(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_(i, j) = inverse_cartan_(i, j) * root_length2_[j] / 2;

  const Integer gram_scale = lcm_of_denominators(gram_);
  form_scale_ = to_int64(gram_scale);
  scaled_gram_ = scale_to_integers(gram_, gram_scale);
  const Integer inv_scale = lcm_of_denominators(inverse_cartan_);
  inverse_scale_ = to_int64(inv_scale);
  scaled_inverse_cartan_ = scale_to_integers(inverse_cartan_, inv_scale);

  simple_roots_.reserve(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::int64_t> row(n);
    for (int j = 0; j < n; ++j) row[j] = cartan_(i, j);
    simple_roots_.emplace_back(std::move(row));
  }

  positive_roots_ = close_positive_roots(cartan_);
  positive_weights_.reserve(positive_roots_.size());
  for (const auto& beta : positive_roots_) positive_weights_.push_back(from_root_coordinates(beta));

  weyl_order_ = ::lierep::weyl_group_order(type_);
  parabolic_orders_.resize(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < parabolic_orders_.size(); ++mask) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) nodes.push_back(i);
    Matrix<int> sub(nodes.size(), nodes.size());
    for (std::size_t x = 0; x < nodes.size(); ++x)
      for (std::size_t y = 0; y < nodes.size(); ++y) sub(x, y) = cartan_(nodes[x], nodes[y]);
    const auto components = recognize_cartan(sub);
    if (!components) throw ConsistencyError("parabolic subdiagram of " + type_.name() + " not recognized");
    std::uint64_t order = 1;
    for (const auto& c : *components) order *= lierep::weyl_group_order(c.type);
    parabolic_orders_[mask] = order;
  }
}

void RootSystem::check_rank(const Weight& w) const {
  if (w.rank() != rank()) {
    throw InvalidArgument("weight " + w.to_string() + " has rank " + std::to_string(w.rank()) +
                          ", expected " + std::to_string(rank()) + " for " + type_.name());
  }
}

std::int64_t RootSystem::coroot_pairing(const Weight& w, int i) const {
  check_rank(w);
  if (i < 0 || i >= rank()) {
    throw InvalidArgument("simple root index " + std::to_string(i) + " out of range for " + type_.name());
  }
  return w[i];
}

Rational RootSystem::inner_product(const Weight& v, const Weight& w) const {
  check_rank(v);
  check_rank(w);
  Rational sum = 0;
  for (int i = 0; i < rank(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (w[j] != 0) sum += gram_(i, j) * v[i] * w[j];
    }
  }
  return sum;
}

std::int64_t RootSystem::scaled_inner_product(const Weight& v, const Weight& w) const {
  Wide sum = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    Wide row = 0;
    for (int j = 0; j < n; ++j) row += static_cast<Wide>(scaled_gram_(i, j)) * w[j];
    sum += row * v[i];
  }
  if (sum > std::numeric_limits<std::int64_t>::max() || sum < std::numeric_limits<std::int64_t>::min()) {
    throw ConsistencyError("int64 overflow in scaled inner product");
  }
  return static_cast<std::int64_t>(sum);
}

std::vector<Rational> RootSystem::root_coordinates(const Weight& w) const {
  check_rank(w);
  std::vector<Rational> c(rank(), Rational(0));
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) c[i] += inverse_cartan_(j, i) * w[j];
  return c;
}

std::optional<RootVector> RootSystem::integral_root_coordinates(const Weight& w) const {
  check_rank(w);
  const int n = rank();
  RootVector c(n);
  for (int i = 0; i < n; ++i) {
    Wide acc = 0;
    for (int j = 0; j < n; ++j) acc += static_cast<Wide>(scaled_inverse_cartan_(j, i)) * w[j];
    if (acc % inverse_scale_ != 0) return std::nullopt;
    c[i] = static_cast<std::int64_t>(acc / inverse_scale_);
  }
  return c;
}

Weight RootSystem::from_root_coordinates(std::span<const std::int64_t> c) const {
  if (static_cast<int>(c.size()) != rank()) throw InvalidArgument("root vector rank mismatch");
  std::vector<std::int64_t> w(rank(), 0);
  for (int i = 0; i < rank(); ++i) {
    if (c[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) w[j] += c[i] * cartan_(i, j);
  }
  return Weight(std::move(w));
}

Rational RootSystem::root_inner_product(std::span<const std::int64_t> beta,
                                        std::span<const std::int64_t> gamma) const {
  if (static_cast<int>(beta.size()) != rank() || static_cast<int>(gamma.size()) != rank()) {
    throw InvalidArgument("root vector rank mismatch");
  }
  Rational sum = 0;
  for (int i = 0; i < rank(); ++i) {
    if (beta[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (gamma[j] != 0) sum += simple_root_form_(i, j) * beta[i] * gamma[j];
    }
  }
  return sum;
}

std::vector<std::int64_t> a_type_orthogonal_coords(const RootSystem& rs, const Weight& w) {
  if (rs.type().family() != Family::A) {
    throw InvalidArgument("orthogonal coordinates are defined for type A only, got " + rs.type().name());
  }
  if (w.rank() != rs.rank()) throw InvalidArgument("weight rank mismatch for " + rs.type().name());
  const int n = rs.rank();
  std::vector<std::int64_t> l(n + 1, 0);
  for (int i = n - 1; i >= 0; --i) l[i] = l[i + 1] + w[i];
  return l;
}

}  // namespace lierep
