#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lierep/exact.hpp"
#include "lierep/lie_type.hpp"
#include "lierep/matrix.hpp"
#include "lierep/weight.hpp"

namespace lierep {

/// Integer coordinates over the simple roots.
using RootVector = std::vector<std::int64_t>;

/// Root datum of a simple type with Bourbaki numbering. Immutable after
/// construction.
///
/// Conventions: cartan(i, j) = <alpha_i, alpha_j^vee>; weights live in
/// fundamental coordinates, roots in simple-root coordinates; the invariant
/// form is normalized so long roots have squared length 2.
class RootSystem {
 public:
  explicit RootSystem(LieType type);

  const LieType& type() const noexcept { return type_; }
  int rank() const noexcept { return type_.rank(); }

  const Matrix<int>& cartan() const noexcept { return cartan_; }
  /// d_i with d_i * a_ij symmetric (1 on long roots).
  std::span<const int> symmetrizer() const noexcept { return symmetrizer_; }
  /// (alpha_i, alpha_i) under the normalized form.
  const Rational& root_length2(int i) const { return root_length2_.at(i); }

  /// Positive roots in simple-root coordinates, sorted by height then
  /// lexicographically.
  std::span<const RootVector> positive_roots() const noexcept { return positive_roots_; }
  /// The same roots in fundamental coordinates (index-aligned).
  std::span<const Weight> positive_roots_fundamental() const noexcept { return positive_weights_; }
  /// alpha_i in fundamental coordinates: row i of the Cartan matrix.
  const Weight& simple_root(int i) const { return simple_roots_.at(i); }

  /// rho = sum of fundamental weights.
  Weight rho() const { return Weight(std::vector<std::int64_t>(rank(), 1)); }

  /// (omega_i, omega_j): inverse Cartan symmetrized by the root lengths.
  const Matrix<Rational>& gram() const noexcept { return gram_; }
  const Matrix<Rational>& inverse_cartan() const noexcept { return inverse_cartan_; }

  /// <w, alpha_i^vee> = w_i. Throws InvalidArgument on a bad index or rank.
  std::int64_t coroot_pairing(const Weight& w, int i) const;

  /// The normalized invariant form (v, w).
  Rational inner_product(const Weight& v, const Weight& w) const;

  /// (v, w) * form_scale(), always an integer; used by the hot loops.
  std::int64_t scaled_inner_product(const Weight& v, const Weight& w) const;
  std::int64_t form_scale() const noexcept { return form_scale_; }

  /// Coordinates of w over the simple roots (rational in general).
  std::vector<Rational> root_coordinates(const Weight& w) const;
  /// The same, when they are all integers.
  std::optional<RootVector> integral_root_coordinates(const Weight& w) const;
  /// sum c_i alpha_i in fundamental coordinates.
  Weight from_root_coordinates(std::span<const std::int64_t> c) const;

  /// (beta, gamma) for vectors in simple-root coordinates.
  Rational root_inner_product(std::span<const std::int64_t> beta,
                              std::span<const std::int64_t> gamma) const;

  std::uint64_t weyl_group_order() const noexcept { return weyl_order_; }
  /// Order of the parabolic subgroup generated by s_i for the bits i of mask.
  std::uint64_t parabolic_order(std::uint32_t mask) const { return parabolic_orders_.at(mask); }

 private:
  void check_rank(const Weight& w) const;

  LieType type_;
  Matrix<int> cartan_;
  std::vector<int> symmetrizer_;
  std::vector<Rational> root_length2_;
  std::vector<RootVector> positive_roots_;
  std::vector<Weight> positive_weights_;
  std::vector<Weight> simple_roots_;
  Matrix<Rational> gram_;
  Matrix<Rational> inverse_cartan_;
  Matrix<std::int64_t> scaled_gram_;
  std::int64_t form_scale_ = 1;
  Matrix<std::int64_t> scaled_inverse_cartan_;
  std::int64_t inverse_scale_ = 1;
  Matrix<Rational> simple_root_form_;
  std::uint64_t weyl_order_ = 1;
  std::vector<std::uint64_t> parabolic_orders_;
};

/// Height of a root-coordinate vector.
std::int64_t height(std::span<const std::int64_t> c);

/// Type A_n only: orthogonal ("epsilon") coordinates (l_1, ..., l_{n+1}) with
/// l_{n+1} = 0 and l_i - l_{i+1} = w_i.
std::vector<std::int64_t> a_type_orthogonal_coords(const RootSystem& rs, const Weight& w);

}  // namespace lierep
