#include "lierep/kostant.hpp"

#include <deque>
#include <map>
#include <string>

#include "lierep/errors.hpp"
#include "lierep/matrix.hpp"

namespace lierep {

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct WeylElement {
  IntMatrix action;  // acts on fundamental coordinates (column vectors)
  int length;
};

std::vector<std::int64_t> apply_matrix(const IntMatrix& m, std::span<const std::int64_t> v) {
  std::vector<std::int64_t> out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

// Breadth-first closure of the identity under left multiplication by simple
// reflections. Elements are told apart by their image of rho (rho is regular),
// and BFS depth is the length.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& rs) {
  const int n = rs.rank();
  std::vector<IntMatrix> reflections;
  for (int i = 0; i < n; ++i) {
    // s_i(v)_j = v_j - v_i a_ij
    IntMatrix s(n, std::vector<std::int64_t>(n, 0));
    for (int j = 0; j < n; ++j) {
      s[j][j] = 1;
      s[j][i] -= rs.cartan()(i, j);
    }
    reflections.push_back(std::move(s));
  }
  IntMatrix identity(n, std::vector<std::int64_t>(n, 0));
  for (int i = 0; i < n; ++i) identity[i][i] = 1;

  const std::vector<std::int64_t> rho(n, 1);
  std::map<std::vector<std::int64_t>, bool> seen;
  std::vector<WeylElement> elements;
  std::deque<WeylElement> queue{{identity, 0}};
  seen[rho] = true;
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : reflections) {
      IntMatrix next(n, std::vector<std::int64_t>(n, 0));
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int j = 0; j < n; ++j) next[i][j] += s[i][k] * w.action[k][j];
      const auto image = apply_matrix(next, rho);
      if (seen.emplace(image, true).second) queue.push_back({std::move(next), w.length + 1});
    }
    elements.push_back(std::move(w));
  }
  return elements;
}

// Number of ways to write beta as a non-negative integer combination of the
// positive roots roots[from..].
class PartitionCounter {
 public:
  explicit PartitionCounter(std::span<const RootVector> roots) : roots_(roots) {}

  std::int64_t count(const RootVector& beta, std::size_t from = 0) {
    bool zero = true;
    for (auto b : beta) {
      if (b < 0) return 0;
      zero = zero && b == 0;
    }
    if (zero) return 1;
    if (from == roots_.size()) return 0;
    const auto key = std::make_pair(beta, from);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::int64_t total = 0;
    RootVector rest = beta;
    for (;;) {
      total += count(rest, from + 1);
      bool fits = true;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        rest[i] -= roots_[from][i];
        fits = fits && rest[i] >= 0;
      }
      if (!fits) break;
    }
    memo_.emplace(key, total);
    return total;
  }

 private:
  std::span<const RootVector> roots_;
  std::map<std::pair<RootVector, std::size_t>, std::int64_t> memo_;
};

}  // namespace

std::int64_t kostant_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  if (rs.rank() > kKostantMaxRank) {
    throw InvalidArgument("Kostant oracle is limited to rank <= 3, got " + rs.type().name());
  }
  if (lam.rank() != rs.rank() || mu.rank() != rs.rank()) throw InvalidArgument("weight rank mismatch");
  if (!lam.is_dominant()) throw InvalidArgument("highest weight " + lam.to_string() + " is not dominant");
  if (lam.coordinate_sum() > kKostantMaxSum) {
    throw InvalidArgument("Kostant oracle is limited to highest weights with coordinate sum <= 4");
  }

  const Weight rho = rs.rho();
  const Weight top = lam + rho;
  const Weight target = mu + rho;
  PartitionCounter partitions(rs.positive_roots());
  std::int64_t total = 0;
  for (const auto& w : enumerate_weyl_group(rs)) {
    const Weight image(apply_matrix(w.action, top.coords()));
    const auto c = rs.root_coordinates(image - target);
    RootVector beta;
    bool integral = true;
    for (const auto& x : c) {
      if (!is_integral(x)) {
        integral = false;
        break;
      }
      beta.push_back(static_cast<std::int64_t>(boost::multiprecision::numerator(x)));
    }
    if (!integral) continue;
    const std::int64_t p = partitions.count(beta);
    total += (w.length % 2 == 0) ? p : -p;
  }
  return total;
}

}  // namespace lierep
