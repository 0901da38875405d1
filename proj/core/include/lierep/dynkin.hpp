#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lierep/lie_type.hpp"
#include "lierep/matrix.hpp"

namespace lierep {

/// Bourbaki Cartan matrix a_ij = <alpha_i, alpha_j^vee> of a simple type.
Matrix<int> cartan_matrix(const LieType& type);

/// |W| by the classical product formulas.
std::uint64_t weyl_group_order(const LieType& type);

/// One connected component of a Cartan matrix, identified with a simple
/// type. nodes[k] is the row of the input matrix playing the role of the
/// Bourbaki simple root alpha_{k+1}.
struct DynkinComponent {
  LieType type;
  std::vector<int> nodes;
};

/// Splits a Cartan matrix into connected components and identifies each
/// with a simple type by permutation search against the Bourbaki matrices.
/// Among isomorphisms the lexicographically first node assignment wins, so
/// an already-Bourbaki-ordered diagram keeps its order (C2 stays C2, it is
/// not reported as a relabeled B2). Components are ordered by their
/// smallest node. Returns nullopt if some component is not of finite type.
std::optional<std::vector<DynkinComponent>> recognize_cartan(const Matrix<int>& cartan);

}  // namespace lierep
