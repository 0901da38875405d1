#pragma once

#include <cstdint>

#include "lierep/root_system.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Largest rank and highest-weight coordinate sum the oracle accepts.
inline constexpr int kKostantMaxRank = 3;
inline constexpr int kKostantMaxSum = 4;

/// Weight multiplicity by Kostant's formula
///
///   m_lam(mu) = sum_{w in W} (-1)^{l(w)} P(w(lam+rho) - (mu+rho))
///
/// with W enumerated by closure over simple reflections and the partition
/// function P counted by exhaustive enumeration. Independent of the
/// Freudenthal engine; deliberately slow, so restricted to small inputs
/// (throws InvalidArgument beyond rank 3 or coordinate sum 4).
std::int64_t kostant_multiplicity(const RootSystem& rs, const Weight& lam, const Weight& mu);

}  // namespace lierep
