#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lierep/exact.hpp"
#include "lierep/root_system.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Multiplicities of all dominant weights of V_lam.
///
/// Every dominant mu below lam is present with a positive multiplicity;
/// entries are sorted lexicographically by weight.
class MultiplicityTable {
 public:
  MultiplicityTable(Weight highest, std::vector<std::pair<Weight, std::int64_t>> entries);

  const Weight& highest() const noexcept { return highest_; }
  const std::vector<std::pair<Weight, std::int64_t>>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  /// m_lam(mu) for dominant mu; 0 if mu is not a weight.
  std::int64_t at(const Weight& dominant_mu) const;
  /// m_lam(mu) for any integral mu (looked up at its dominant representative).
  std::int64_t multiplicity(const RootSystem& rs, const Weight& mu) const;
  std::int64_t max() const;

 private:
  Weight highest_;
  std::vector<std::pair<Weight, std::int64_t>> entries_;
  std::unordered_map<Weight, std::int64_t, WeightHash> index_;
};

/// n_m: number of weights (counted over whole Weyl orbits) of multiplicity m.
struct WeightProfile {
  Integer dim;
  std::map<std::int64_t, Integer> counts;

  /// n_m, zero when absent.
  Integer count(std::int64_t m) const;
  friend bool operator==(const WeightProfile&, const WeightProfile&) = default;
};

/// Weyl's dimension formula prod_{alpha > 0} (lam + rho, alpha) / (rho, alpha),
/// evaluated exactly.
Integer weyl_dimension(const RootSystem& rs, const Weight& lam);

/// Type A only: prod_{i<j} (l_i - l_j + j - i) / (j - i) over the orthogonal
/// coordinates of lam.
Integer a_type_dimension_product(const RootSystem& rs, const Weight& lam);

/// Freudenthal's recursion over the dominant weights of V_lam:
///
///   (|lam+rho|^2 - |mu+rho|^2) m(mu) = 2 sum_{alpha>0} sum_{k>=1} m(mu+k alpha) (mu+k alpha, alpha)
///
/// evaluated top-down in order of depth below lam, with every lookup done at
/// the dominant representative. The quotient is checked to be integral.
MultiplicityTable multiplicity_table(const RootSystem& rs, const Weight& lam);

/// m_lam(mu) for any integral mu; 0 when mu is not a weight of V_lam.
std::int64_t freudenthal_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu);

/// Profile from a table: n_m sums Weyl orbit sizes; checks sum m n_m = dim.
WeightProfile weight_count_profile(const RootSystem& rs, const MultiplicityTable& table);
WeightProfile weight_count_profile(const RootSystem& rs, const Weight& lam);

std::int64_t max_multiplicity(const RootSystem& rs, const Weight& lam);

/// Memoizes root systems and multiplicity tables across many queries, e.g.
/// sweeps that revisit the same highest weights or restrict to subtypes.
/// Not thread-safe; use one per thread. Returned references stay valid for
/// the cache's lifetime.
class MultiplicityCache {
 public:
  const RootSystem& root_system(const LieType& type);
  const MultiplicityTable& table(const LieType& type, const Weight& lam);
  /// m_lam(mu) for any integral mu.
  std::int64_t multiplicity(const LieType& type, const Weight& lam, const Weight& mu);
  std::int64_t max_multiplicity(const LieType& type, const Weight& lam);

 private:
  std::map<LieType, std::unique_ptr<RootSystem>> systems_;
  std::map<std::pair<LieType, Weight>, MultiplicityTable> tables_;
};

}  // namespace lierep
