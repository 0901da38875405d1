#include "lierep/weight_lattice.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "lierep/dynkin.hpp"
#include "lierep/errors.hpp"

namespace lierep {

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  if (w.rank() != rs.rank()) {
    throw InvalidArgument(std::string(what) + " " + w.to_string() + " has rank " +
                          std::to_string(w.rank()) + ", expected " + std::to_string(rs.rank()) +
                          " for " + rs.type().name());
  }
  if (!w.is_dominant()) {
    throw InvalidArgument(std::string(what) + " " + w.to_string() + " is not dominant");
  }
}

std::optional<RootVector> root_coordinates(const RootSystem& rs, const Weight& v, const Weight& w) {
  if (v.rank() != rs.rank() || w.rank() != rs.rank()) {
    throw InvalidArgument("rank mismatch in root_coordinates for " + rs.type().name());
  }
  auto c = rs.integral_root_coordinates(v - w);
  if (!c) return std::nullopt;
  if (std::any_of(c->begin(), c->end(), [](std::int64_t x) { return x < 0; })) return std::nullopt;
  return c;
}

bool dominates(const RootSystem& rs, const Weight& v, const Weight& w) {
  return root_coordinates(rs, v, w).has_value();
}

std::vector<Weight> subdominant_weights(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "highest weight");
  std::unordered_set<Weight, WeightHash> seen{lam};
  std::deque<Weight> queue{lam};
  while (!queue.empty()) {
    const Weight nu = std::move(queue.front());
    queue.pop_front();
    for (const Weight& alpha : rs.positive_roots_fundamental()) {
      Weight next = nu - alpha;
      if (next.is_dominant() && seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  seen.erase(lam);
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

Weight simple_reflection(const RootSystem& rs, const Weight& w, int i) {
  const std::int64_t c = rs.coroot_pairing(w, i);
  return w - c * rs.simple_root(i);
}

Weight dominant_representative(const RootSystem& rs, Weight w) {
  if (w.rank() != rs.rank()) throw InvalidArgument("rank mismatch in dominant_representative");
  const int n = rs.rank();
  for (;;) {
    int i = 0;
    while (i < n && w[i] >= 0) ++i;
    if (i == n) return w;
    const std::int64_t c = w[i];
    const Weight& alpha = rs.simple_root(i);
    for (int j = 0; j < n; ++j) w[j] -= c * alpha[j];
  }
}

std::uint64_t weyl_orbit_size(const RootSystem& rs, const Weight& w) {
  require_dominant(rs, w, "orbit representative");
  std::uint32_t mask = 0;
  for (int i = 0; i < rs.rank(); ++i)
    if (w[i] == 0) mask |= 1u << i;
  return rs.weyl_group_order() / rs.parabolic_order(mask);
}

std::vector<Weight> dominant_weights_up_to(int rank, int bound) {
  std::vector<Weight> out;
  for (int total = 0; total <= bound; ++total) {
    // Compositions of `total` into `rank` non-negative parts, lexicographic.
    std::vector<std::int64_t> c(rank, 0);
    std::vector<Weight> layer;
    auto fill = [&](auto&& self, int index, int remaining) -> void {
      if (index == rank - 1) {
        c[index] = remaining;
        layer.emplace_back(c);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        c[index] = v;
        self(self, index + 1, remaining - v);
      }
    };
    fill(fill, 0, total);
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace lierep
