#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lierep/exact.hpp"
#include "lierep/lie_type.hpp"
#include "lierep/weight.hpp"

// The embedded reference tables: modules with maximum weight multiplicity 2
// (with their profiles) and multiplicity-free modules in characteristic 0.
// Parametric rows are expanded per type and search bound.

namespace lierep {

/// A known defect of one table field.
struct Annotation {
  std::string note;
  /// The value the field should have, when it is determined.
  std::optional<Integer> alternative;
  /// Long-standing, widely noted defect (as opposed to one found by
  /// recomputation).
  bool known = false;
};

struct Table1Entry {
  LieType type;
  Weight weight;
  std::string label;  ///< row label, e.g. "(1,a)" or "(020...0)"
  Integer n1;
  Integer n2;
  Integer dim;
  std::map<std::string, Annotation> annotations;  ///< keyed by "n1", "n2", "dim"

  const Integer& field(const std::string& name) const;
};

struct Table2Entry {
  LieType type;
  Weight weight;
  std::string label;
};

int golden_tables_version();

/// Table 1 entries for the type with coordinate sum <= bound, sorted by
/// weight, duplicates (e.g. (1,1) from both A2 families) removed.
std::vector<Table1Entry> table1_entries(const LieType& type, int bound);

/// Row notes attached to the type, e.g. conflicts with a case analysis.
std::vector<std::string> table1_notes(const LieType& type);

/// Characteristic-0 multiplicity-free weights (0 excluded) with coordinate
/// sum <= bound, sorted.
std::vector<Table2Entry> table2_entries(const LieType& type, int bound);

}  // namespace lierep
