#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lierep/root_system.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// (b_i) with v - w = sum b_i alpha_i when every b_i is a non-negative
/// integer (w is below v in the dominance order); nullopt otherwise.
std::optional<RootVector> root_coordinates(const RootSystem& rs, const Weight& v, const Weight& w);

/// w is below or equal to v in the dominance order.
bool dominates(const RootSystem& rs, const Weight& v, const Weight& w);

/// All dominant weights strictly below the dominant weight lam, sorted
/// lexicographically.
///
/// Descends from lam by subtracting positive roots and keeping dominant
/// results. This reaches every dominant mu below lam because each covering
/// relation in the dominance order on dominant weights is a positive root.
std::vector<Weight> subdominant_weights(const RootSystem& rs, const Weight& lam);

/// The dominant weight in the Weyl orbit of w. Reflects at the lowest
/// negative coordinate until none is left.
Weight dominant_representative(const RootSystem& rs, Weight w);

/// s_i(w) = w - w_i alpha_i (i is 0-based).
Weight simple_reflection(const RootSystem& rs, const Weight& w, int i);

/// |W| / |W_J| with J = {i : w_i = 0}; w must be dominant.
std::uint64_t weyl_orbit_size(const RootSystem& rs, const Weight& w);

/// All dominant weights of the given rank with coordinate sum <= bound,
/// in (sum, lexicographic) order.
std::vector<Weight> dominant_weights_up_to(int rank, int bound);

/// Throws InvalidArgument unless w has the right rank and is dominant.
void require_dominant(const RootSystem& rs, const Weight& w, const char* what);

}  // namespace lierep
