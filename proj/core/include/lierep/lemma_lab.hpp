#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lierep/lie_type.hpp"
#include "lierep/matrix.hpp"
#include "lierep/multiplicity.hpp"
#include "lierep/root_system.hpp"
#include "lierep/weight.hpp"

// Executable forms of the standard comparison results on weight
// multiplicities. Each check returns the values it compared, so a failure
// carries its own witness.

namespace lierep {

/// m_omega(nu) >= m_mu(nu) whenever mu < omega are dominant, omega >= mu
/// coordinatewise and nu < mu.
struct HighestWeightMonotonicity {
  bool applicable = false;
  std::string skip_reason;
  std::int64_t m_omega_nu = 0;
  std::int64_t m_mu_nu = 0;
  bool holds = true;
};
HighestWeightMonotonicity check_highest_weight_monotonicity(const RootSystem& rs, const Weight& omega,
                                                            const Weight& mu, const Weight& nu,
                                                            MultiplicityCache& cache);
HighestWeightMonotonicity check_highest_weight_monotonicity(const RootSystem& rs, const Weight& omega,
                                                            const Weight& mu, const Weight& nu);

/// m_lam(mu) >= m_lam(nu) for all dominant mu < nu <= lam.
struct DominanceViolation {
  Weight lower;
  Weight upper;
  std::int64_t m_lower;
  std::int64_t m_upper;
};
struct DominanceMonotonicity {
  Weight highest;
  std::size_t pairs_checked = 0;
  std::vector<DominanceViolation> violations;
  bool holds() const noexcept { return violations.empty(); }
};
DominanceMonotonicity check_dominance_monotonicity(const RootSystem& rs, const MultiplicityTable& table);
DominanceMonotonicity check_dominance_monotonicity(const RootSystem& rs, const Weight& lam);

/// Shift of a pair (omega, mu) by the fundamental weights in J: with
/// mu = omega - sum c_i alpha_i and c_j <= a_j for j in J,
///   omega' = omega - sum_{j in J} (a_j - c_j) omega_j,  mu' = mu - (same),
/// and m_omega(mu) = m_omega'(mu'). mu' need not be dominant.
struct SupportReduction {
  Weight omega_prime;
  Weight mu_prime;
  std::int64_t m_original = 0;
  std::int64_t m_reduced = 0;
  bool equal() const noexcept { return m_original == m_reduced; }
};
/// J holds 0-based indices. Throws InvalidArgument if mu is not dominant and
/// below omega, or if some j in J has c_j > a_j.
SupportReduction reduce_by_support(const RootSystem& rs, const Weight& omega, const Weight& mu,
                                   std::span<const int> J, MultiplicityCache& cache);
SupportReduction reduce_by_support(const RootSystem& rs, const Weight& omega, const Weight& mu,
                                   std::span<const int> J);

/// A set of positive roots of the ambient system whose mutual pairings form
/// a finite-type Cartan matrix; the simple system of a subsystem subgroup.
struct SubsystemComponent {
  LieType type;
  /// members[k] indexes roots(): the base root playing Bourbaki node k.
  std::vector<int> members;
};

class SubsystemBase {
 public:
  /// Validates: every root is a distinct positive root of rs and the induced
  /// Cartan matrix is of finite type. Throws InvalidArgument otherwise.
  static SubsystemBase from_roots(const RootSystem& rs, std::vector<RootVector> roots);
  /// The base made of the simple roots with the given 0-based indices.
  static SubsystemBase from_simple_roots(const RootSystem& rs, std::span<const int> indices);

  const std::vector<RootVector>& roots() const noexcept { return roots_; }
  const Matrix<int>& induced_cartan() const noexcept { return induced_cartan_; }
  const std::vector<SubsystemComponent>& components() const noexcept { return components_; }
  std::vector<LieType> induced_types() const;

  /// <w, beta^vee> for each base root, grouped by component in Bourbaki order.
  std::vector<Weight> restrict(const Weight& w) const;

 private:
  std::vector<RootVector> roots_;
  Matrix<int> induced_cartan_;
  std::vector<SubsystemComponent> components_;
  // <w, beta_r^vee> = sum_k coroot_coeffs_[r][k] w_k
  std::vector<std::vector<std::int64_t>> coroot_coeffs_;
};

struct RestrictedComponent {
  LieType type;
  /// Base-root indices (for a Levi subsystem, ambient simple-root indices)
  /// in Bourbaki order of the component.
  std::vector<int> nodes;
  Weight weight;
};

struct Restriction {
  std::vector<RestrictedComponent> components;
};

/// Restriction of omega to the Levi subsystem on the simple roots S
/// (0-based, non-empty, proper).
Restriction levi_restriction(const RootSystem& rs, const Weight& omega, std::span<const int> S);

/// Restriction of omega to an arbitrary subsystem base.
Restriction subsystem_restrict(const RootSystem& rs, const Weight& omega, const SubsystemBase& base);

/// m_V(mu) = m_V'(mu|_X) for the Levi subsystem X on S, when
/// mu = omega - sum_{alpha in S} c_alpha alpha is dominant. V' is the
/// irreducible X-module with highest weight omega|_X (a product over
/// components, so its multiplicities multiply).
struct LeviEquality {
  bool applicable = false;
  std::string skip_reason;
  std::vector<Weight> mu_restricted;
  std::int64_t m_ambient = 0;
  std::int64_t m_restricted = 0;
  bool equal() const noexcept { return m_ambient == m_restricted; }
};
LeviEquality check_levi_equality(const RootSystem& rs, const Weight& omega, std::span<const int> S,
                                 const Weight& mu, MultiplicityCache& cache);
LeviEquality check_levi_equality(const RootSystem& rs, const Weight& omega, std::span<const int> S,
                                 const Weight& mu);

/// The module of the restricted highest weight has maximum multiplicity at
/// most that of V_omega.
struct SubsystemBound {
  std::int64_t ambient_max = 0;
  std::int64_t restricted_max = 0;
  Restriction restriction;
  bool holds() const noexcept { return restricted_max <= ambient_max; }
};
SubsystemBound check_subsystem_bound(const RootSystem& rs, const Weight& omega, const SubsystemBase& base,
                                     MultiplicityCache& cache);

/// Type A: omega supported on [j, k] with a_j a_k != 0 and j < k has a
/// weight of multiplicity at least k - j.
struct TypeALowerBound {
  bool applicable = false;
  std::string skip_reason;
  int j = 0;  // 1-based, as in the weight string
  int k = 0;
  std::int64_t bound = 0;
  std::int64_t max_multiplicity = 0;
  bool holds = true;
};
TypeALowerBound check_type_a_lower_bound(const RootSystem& rs, const Weight& omega, MultiplicityCache& cache);
TypeALowerBound check_type_a_lower_bound(const RootSystem& rs, const Weight& omega);

/// Subsystem bases used by the case analyses, beyond Levi subsystems.
/// Each is validated; invalid candidates are not returned.
std::vector<SubsystemBase> named_subsystem_bases(const RootSystem& rs);

/// Exhaustive sweeps of every check above.
struct LemmaSuiteConfig {
  int monotonicity_max_rank = 4;  ///< dominance and highest-weight monotonicity
  int monotonicity_max_sum = 4;
  int reduction_max_rank = 4;     ///< support reduction
  int reduction_max_sum = 4;
  int levi_max_rank = 5;          ///< Levi equality and subsystem bound
  int levi_max_sum = 3;
  int type_a_max_rank = 5;        ///< type-A lower bound
  int type_a_max_sum = 3;
};

struct LemmaStats {
  std::string name;
  std::size_t cases = 0;
  std::size_t skipped = 0;
  std::vector<nlohmann::json> failures;
  bool passed() const noexcept { return failures.empty(); }
};

struct LemmaSuiteReport {
  LemmaSuiteConfig config;
  std::vector<LemmaStats> lemmas;
  bool passed() const noexcept;
  const LemmaStats& find(const std::string& name) const;
};

/// All simple types of rank <= max_rank that the sweeps visit.
std::vector<LieType> types_up_to_rank(int max_rank);

LemmaStats sweep_dominance_monotonicity(const LemmaSuiteConfig& config, MultiplicityCache& cache);
LemmaStats sweep_highest_weight_monotonicity(const LemmaSuiteConfig& config, MultiplicityCache& cache);
LemmaStats sweep_support_reduction(const LemmaSuiteConfig& config, MultiplicityCache& cache);
LemmaStats sweep_levi_equality(const LemmaSuiteConfig& config, MultiplicityCache& cache);
LemmaStats sweep_subsystem_bound(const LemmaSuiteConfig& config, MultiplicityCache& cache);
LemmaStats sweep_type_a_lower_bound(const LemmaSuiteConfig& config, MultiplicityCache& cache);

LemmaSuiteReport run_lemma_suite(const LemmaSuiteConfig& config = {});

nlohmann::json to_json(const LemmaSuiteReport& report);

}  // namespace lierep
