#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace lierep::oracle {

std::set<RootVector> roots_by_reflection(const Matrix<int>& a) {
  const int n = a.rows();
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const RootVector beta = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      // <beta, alpha_i^vee> = sum_j beta_j a_ji
      std::int64_t pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * a(j, i);
      RootVector next = beta;
      next[i] -= pairing;
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::set<RootVector> positive;
  for (const auto& r : seen)
    if (std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x >= 0; })) positive.insert(r);
  return positive;
}

std::set<Weight> weyl_orbit(const Matrix<int>& a, const Weight& w) {
  const int n = a.rows();
  std::set<Weight> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    const Weight v = queue.front();
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      if (v[i] == 0) continue;
      Weight next = v;
      for (int j = 0; j < n; ++j) next[j] -= v[i] * a(i, j);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

std::uint64_t weyl_order_by_orbit(const Matrix<int>& a) {
  return weyl_orbit(a, Weight(std::vector<std::int64_t>(a.rows(), 1))).size();
}

std::vector<Weight> subdominants_by_box(const RootSystem& rs, const Weight& lam) {
  const auto coords = rs.root_coordinates(lam);
  const int n = rs.rank();
  std::vector<std::int64_t> cap(n);
  for (int i = 0; i < n; ++i) {
    const Rational& q = coords[i];
    cap[i] = static_cast<std::int64_t>(boost::multiprecision::numerator(q) / boost::multiprecision::denominator(q));
  }
  std::vector<Weight> out;
  std::vector<std::int64_t> c(n, 0);
  for (;;) {
    if (std::any_of(c.begin(), c.end(), [](std::int64_t x) { return x != 0; })) {
      const Weight mu = lam - rs.from_root_coordinates(c);
      if (mu.is_dominant()) out.push_back(mu);
    }
    int i = 0;
    while (i < n && c[i] == cap[i]) c[i++] = 0;
    if (i == n) break;
    ++c[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Weight, std::int64_t>> all_weight_multiplicities(const RootSystem& rs, const Weight& lam) {
  std::vector<Weight> dominant = subdominants_by_box(rs, lam);
  dominant.push_back(lam);
  std::vector<std::pair<std::int64_t, Weight>> order;  // (depth below lam, weight)
  for (const auto& d : dominant) {
    for (const auto& w : weyl_orbit(rs.cartan(), d)) {
      const auto c = rs.root_coordinates(lam - w);
      Rational depth = 0;
      for (const auto& x : c) depth += x;
      order.emplace_back(static_cast<std::int64_t>(boost::multiprecision::numerator(depth)), w);
    }
  }
  std::sort(order.begin(), order.end());
  std::map<Weight, std::int64_t> m;
  const Weight rho = rs.rho();
  const Rational top = rs.inner_product(lam + rho, lam + rho);
  for (const auto& [depth, mu] : order) {
    if (depth == 0) {
      m[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const Weight& alpha : rs.positive_roots_fundamental()) {
      for (std::int64_t k = 1;; ++k) {
        const Weight up = mu + k * alpha;
        const auto it = m.find(up);
        if (it == m.end()) break;
        sum += it->second * rs.inner_product(up, alpha);
      }
    }
    const Rational value = 2 * sum / (top - rs.inner_product(mu + rho, mu + rho));
    m[mu] = static_cast<std::int64_t>(boost::multiprecision::numerator(value));
  }
  return {m.begin(), m.end()};
}

std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace lierep::oracle
