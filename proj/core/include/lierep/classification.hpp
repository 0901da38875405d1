#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lierep/golden_tables.hpp"
#include "lierep/lie_type.hpp"
#include "lierep/multiplicity.hpp"
#include "lierep/root_system.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Omega_1, ..., Omega_k restricted to dominant weights with coordinate sum
/// <= bound. Omega_j holds the weights whose module has no weight of
/// multiplicity greater than j.
struct OmegaSearchResult {
  LieType type;
  int k = 0;
  int bound = 0;
  bool pruned = false;
  std::vector<std::vector<Weight>> omega;  ///< omega[j-1] = Omega_j, sorted
  std::size_t candidates = 0;
  std::size_t evaluated = 0;  ///< candidates whose table was computed

  const std::vector<Weight>& at(int j) const { return omega.at(j - 1); }
  /// Omega'_j = Omega_j \ Omega_{j-1}.
  std::vector<Weight> prime(int j) const;
};

/// Exhaustive search. With prune set, a candidate is skipped (classified as
/// exceeding k) when some already-failed weight lies below it and is
/// coordinatewise no larger: its multiplicities bound the candidate's from
/// below. Throws InvalidArgument unless k is 1 or 2 and bound >= 1.
OmegaSearchResult omega_search(const RootSystem& rs, int k, int bound, bool prune = true);
OmegaSearchResult omega_search(const RootSystem& rs, int k, int bound, bool prune, MultiplicityCache& cache);

struct TableDiff {
  Weight weight;
  std::string entry;  ///< table label, or the weight when the table omits it
  std::string field;  ///< "n1", "n2", "dim" or "membership"
  nlohmann::json table_value;
  nlohmann::json computed_value;
  bool annotated = false;
  std::string note;
};

struct ClassificationReport {
  LieType type;
  int bound = 0;
  std::vector<Weight> omega1;
  std::vector<Weight> omega2_prime;
  std::map<Weight, WeightProfile> profiles;  ///< for omega2_prime and every table entry
  std::vector<TableDiff> diffs;
  std::vector<std::string> notes;

  std::size_t unannotated_diffs() const;
};

struct TypeBound {
  LieType type;
  int bound;
};

struct VerifyConfig {
  std::vector<TypeBound> targets;
  bool prune = true;
};

/// A2-A6, B2-B5, C2-C6, D4-D6, G2, F4 at the given bound.
VerifyConfig default_config(int bound = 4);
/// The default types at bound 6 plus E6, E7 and E8 at bound 3.
VerifyConfig extended_config();

struct Table1Verification {
  std::vector<ClassificationReport> reports;
  std::size_t unannotated_diffs() const;
  bool passed() const { return unannotated_diffs() == 0; }
};

/// Searches each target with k = 2 and compares Omega'_2 and the profiles of
/// its weights with the embedded table.
Table1Verification verify_table1(const VerifyConfig& config);
ClassificationReport classify_type(const RootSystem& rs, int bound, bool prune, MultiplicityCache& cache);

struct Table2TypeReport {
  LieType type;
  int bound = 0;
  /// Table weights with the computed maximum multiplicity.
  std::vector<std::pair<Table2Entry, std::int64_t>> listed;
  /// Multiplicity-free weights found by the search but absent from the table.
  std::vector<Weight> missing;
  bool passed() const;
};

struct Table2Verification {
  std::vector<Table2TypeReport> reports;
  bool passed() const;
};

/// Characteristic-0 rows only. Adds A1 to the targets if absent.
Table2Verification verify_table2(const VerifyConfig& config);

struct A2FamilyCase {
  Weight weight;
  std::int64_t max_multiplicity = 0;
  WeightProfile computed;
  WeightProfile expected;  ///< (3a+3, a(a+1)/2, (a+1)(a+3))
  bool passed() const;
};

struct A2TripleCase {
  Weight weight;
  Weight mu;  ///< weight - 2(alpha_1 + alpha_2)
  std::int64_t multiplicity = 0;
  bool passed() const { return multiplicity == 3; }
};

struct A2FamilyReport {
  int a_max = 0;
  int ab_max = 0;
  std::vector<A2FamilyCase> family;  ///< (1,a) and (a,1), 1 <= a <= a_max
  std::vector<A2TripleCase> triples;  ///< (a,b), 2 <= a,b <= ab_max
  bool passed() const;
};

/// Throws InvalidArgument unless a_max >= 3 and ab_max >= 2.
A2FamilyReport a2_family_check(int a_max = 20, int ab_max = 6);

}  // namespace lierep
