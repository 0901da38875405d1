#include "lierep/multiplicity.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "lierep/errors.hpp"
#include "lierep/weight_lattice.hpp"

namespace lierep {

MultiplicityTable::MultiplicityTable(Weight highest,
                                     std::vector<std::pair<Weight, std::int64_t>> entries)
    : highest_(std::move(highest)), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end());
  index_.reserve(entries_.size());
  for (const auto& [w, m] : entries_) index_.emplace(w, m);
}

std::int64_t MultiplicityTable::at(const Weight& dominant_mu) const {
  const auto it = index_.find(dominant_mu);
  return it == index_.end() ? 0 : it->second;
}

std::int64_t MultiplicityTable::multiplicity(const RootSystem& rs, const Weight& mu) const {
  return at(dominant_representative(rs, mu));
}

std::int64_t MultiplicityTable::max() const {
  std::int64_t best = 0;
  for (const auto& [w, m] : entries_) best = std::max(best, m);
  return best;
}

Integer WeightProfile::count(std::int64_t m) const {
  const auto it = counts.find(m);
  return it == counts.end() ? Integer(0) : it->second;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "highest weight");
  const Weight shifted = lam + rs.rho();
  const Weight rho = rs.rho();
  Rational product = 1;
  for (const Weight& alpha : rs.positive_roots_fundamental()) {
    product *= rs.inner_product(shifted, alpha) / rs.inner_product(rho, alpha);
  }
  return to_integer(product, "Weyl dimension");
}

Integer a_type_dimension_product(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "highest weight");
  const auto l = a_type_orthogonal_coords(rs, lam);
  const auto size = static_cast<std::int64_t>(l.size());
  Integer num = 1, den = 1;
  for (std::int64_t i = 0; i < size; ++i)
    for (std::int64_t j = i + 1; j < size; ++j) {
      num *= l[i] - l[j] + (j - i);
      den *= j - i;
    }
  if (num % den != 0) throw ConsistencyError("type-A dimension product is not integral");
  return num / den;
}

MultiplicityTable multiplicity_table(const RootSystem& rs, const Weight& lam) {
  require_dominant(rs, lam, "highest weight");

  struct Node {
    std::int64_t depth;
    Weight weight;
  };
  std::vector<Node> order;
  order.push_back({0, lam});
  for (Weight& mu : subdominant_weights(rs, lam)) {
    const auto c = root_coordinates(rs, lam, mu);
    if (!c) throw ConsistencyError("subdominant weight " + mu.to_string() + " not below " + lam.to_string());
    order.push_back({height(*c), std::move(mu)});
  }
  std::sort(order.begin(), order.end(), [](const Node& a, const Node& b) {
    return std::tie(a.depth, a.weight) < std::tie(b.depth, b.weight);
  });

  const auto roots = rs.positive_roots_fundamental();
  std::vector<std::int64_t> root_norms;
  root_norms.reserve(roots.size());
  for (const Weight& alpha : roots) root_norms.push_back(rs.scaled_inner_product(alpha, alpha));

  const Weight rho = rs.rho();
  const Weight top = lam + rho;
  const std::int64_t top_norm = rs.scaled_inner_product(top, top);

  // -1 marks "dominant and below lam, not yet computed".
  std::unordered_map<Weight, std::int64_t, WeightHash> mult;
  mult.reserve(order.size() * 2);
  for (const auto& node : order) mult.emplace(node.weight, -1);
  mult[lam] = 1;

  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx].weight;
    const Weight mu_rho = mu + rho;
    const std::int64_t lhs = checked::sub(top_norm, rs.scaled_inner_product(mu_rho, mu_rho));
    if (lhs <= 0) throw ConsistencyError("non-positive norm gap at " + mu.to_string());

    std::int64_t rhs = 0;
    for (std::size_t r = 0; r < roots.size(); ++r) {
      const Weight& alpha = roots[r];
      std::int64_t pairing = rs.scaled_inner_product(mu, alpha);
      Weight nu = mu;
      for (;;) {
        nu += alpha;
        pairing = checked::add(pairing, root_norms[r]);
        const auto it = mult.find(dominant_representative(rs, nu));
        if (it == mult.end()) break;  // left the weights of V_lam; strings are unbroken
        if (it->second < 0) {
          throw ConsistencyError("Freudenthal order violated at " + mu.to_string());
        }
        rhs = checked::add(rhs, checked::mul(it->second, pairing));
      }
    }
    rhs = checked::mul(rhs, 2);
    if (rhs % lhs != 0) {
      throw ConsistencyError("non-integral Freudenthal quotient " + std::to_string(rhs) + "/" +
                             std::to_string(lhs) + " at " + mu.to_string() + " in V" + lam.to_string());
    }
    const std::int64_t m = rhs / lhs;
    if (m <= 0) {
      throw ConsistencyError("dominant weight " + mu.to_string() + " below " + lam.to_string() +
                             " got multiplicity " + std::to_string(m));
    }
    mult[mu] = m;
  }

  std::vector<std::pair<Weight, std::int64_t>> entries;
  entries.reserve(order.size());
  for (auto& node : order) entries.emplace_back(node.weight, mult.at(node.weight));
  return MultiplicityTable(lam, std::move(entries));
}

std::int64_t freudenthal_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu) {
  require_dominant(rs, lam, "highest weight");
  if (mu.rank() != rs.rank()) throw InvalidArgument("weight rank mismatch for " + rs.type().name());
  // Outside the root-lattice coset of lam nothing is a weight.
  if (!rs.integral_root_coordinates(lam - mu)) return 0;
  const Weight dom = dominant_representative(rs, mu);
  if (!dominates(rs, lam, dom)) return 0;
  return multiplicity_table(rs, lam).at(dom);
}

WeightProfile weight_count_profile(const RootSystem& rs, const MultiplicityTable& table) {
  WeightProfile profile;
  profile.dim = weyl_dimension(rs, table.highest());
  Integer total = 0;
  for (const auto& [mu, m] : table.entries()) {
    const Integer orbit = weyl_orbit_size(rs, mu);
    profile.counts[m] += orbit;
    total += orbit * m;
  }
  if (total != profile.dim) {
    throw ConsistencyError("profile of " + table.highest().to_string() + " sums to " + total.str() +
                           " but the Weyl dimension is " + profile.dim.str());
  }
  return profile;
}

WeightProfile weight_count_profile(const RootSystem& rs, const Weight& lam) {
  return weight_count_profile(rs, multiplicity_table(rs, lam));
}

std::int64_t max_multiplicity(const RootSystem& rs, const Weight& lam) {
  return multiplicity_table(rs, lam).max();
}

const RootSystem& MultiplicityCache::root_system(const LieType& type) {
  auto& slot = systems_[type];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

const MultiplicityTable& MultiplicityCache::table(const LieType& type, const Weight& lam) {
  auto key = std::make_pair(type, lam);
  if (const auto it = tables_.find(key); it != tables_.end()) return it->second;
  return tables_.emplace(std::move(key), multiplicity_table(root_system(type), lam)).first->second;
}

std::int64_t MultiplicityCache::multiplicity(const LieType& type, const Weight& lam, const Weight& mu) {
  const RootSystem& rs = root_system(type);
  if (!rs.integral_root_coordinates(lam - mu)) return 0;
  return table(type, lam).multiplicity(rs, mu);
}

std::int64_t MultiplicityCache::max_multiplicity(const LieType& type, const Weight& lam) {
  return table(type, lam).max();
}

}  // namespace lierep
