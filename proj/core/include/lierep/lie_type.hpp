#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace lierep {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple type: family letter plus rank. Construction validates the rank
/// (A>=1, B>=2, C>=2, D>=4, E in {6,7,8}, F=4, G=2).
class LieType {
 public:
  LieType(Family family, int rank);

  /// Parses "C3", "E8", "G2" (case-insensitive letter).
  static LieType parse(std::string_view text);

  Family family() const noexcept { return family_; }
  int rank() const noexcept { return rank_; }
  std::string name() const;

  friend auto operator<=>(const LieType&, const LieType&) = default;

 private:
  Family family_;
  int rank_;
};

/// True iff (family, rank) names a supported simple type.
bool is_valid_type(Family family, int rank);

}  // namespace lierep
