#pragma once

#include <cstddef>

#include "hompois/matrix.hpp"
#include "hompois/report.hpp"
#include "hompois/tensor3.hpp"

namespace hompois {

/// Algebra with one bilinear product and a twist map, given by structure
/// constants over the rationals: product[i][j][k] = coefficient of e_k in
/// e_i * e_j, alpha = matrix of the twist.
struct HomAlgebra {
  std::size_t dim = 0;
  Tensor3 product;
  Matrix alpha;

  HomAlgebra() = default;
  HomAlgebra(std::size_t dim, Tensor3 product, Matrix alpha);

  static HomAlgebra zero(std::size_t dim);

  friend bool operator==(const HomAlgebra& a, const HomAlgebra& b) {
    return a.dim == b.dim && a.product == b.product && a.alpha == b.alpha;
  }
};

/// The two-product form: an antisymmetric bracket and a symmetric product
/// sharing one twist. The (anti)symmetry is a checkable property, not a
/// construction-time assumption.
struct PolarizedAlgebra {
  std::size_t dim = 0;
  Tensor3 bracket;
  Tensor3 circ;
  Matrix alpha;

  PolarizedAlgebra() = default;
  PolarizedAlgebra(std::size_t dim, Tensor3 bracket, Tensor3 circ,
                   Matrix alpha);

  friend bool operator==(const PolarizedAlgebra& a, const PolarizedAlgebra& b) {
    return a.dim == b.dim && a.bracket == b.bracket && a.circ == b.circ &&
           a.alpha == b.alpha;
  }
};

/// Residual of the defining identity of an admissible structure at one
/// basis triple:
///   (x*y)*a(z) - a(x)*(y*z)
///     + 1/3 ( -a(x)*(z*y) + a(z)*(x*y) + a(y)*(x*z) - a(y)*(z*x) ).
Vec admissible_residual(const HomAlgebra& a, std::size_t i, std::size_t j,
                        std::size_t k);

/// Checks the identity above on all dim^3 basis triples (sufficient by
/// multilinearity).
CheckReport check_admissible(const HomAlgebra& a);

/// alpha(x*y) = alpha(x)*alpha(y) on all basis pairs.
CheckReport check_multiplicative(const HomAlgebra& a);

/// (x*y)*a(z) - a(x)*(y*z) = a(z)*(y*x) - (z*y)*a(x); a consequence of
/// admissibility, checked independently.
CheckReport check_exchange_identity(const HomAlgebra& a);

/// Four sub-checks: bracket is a twisted Lie structure (skew-symmetry and
/// twisted Jacobi), circ is twisted-associative, alpha is multiplicative
/// for both products, and the twisted Leibniz compatibility
/// [a(x), y.z] = [x,y].a(z) + a(y).[x,z] holds.
CheckReport check_hom_poisson(const PolarizedAlgebra& p);

/// Symmetric/antisymmetric parts: x.y = (x*y + y*x)/2, [x,y] = (x*y - y*x)/2.
PolarizedAlgebra polarize(const HomAlgebra& a);

/// Recombination x*y = x.y + [x,y]. Requires the bracket antisymmetric and
/// circ symmetric; throws symmetry_error otherwise. Exact inverse of
/// polarize.
HomAlgebra depolarize(const PolarizedAlgebra& p);

/// Composes an algebra endomorphism phi with the product and the twist:
/// (A, phi o *, phi o alpha). phi must be multiplicative for the product
/// (throws morphism_error with the first failing basis pair). For an input
/// with identity twist this is the classical twisting construction; for a
/// general input it iterates the twist.
HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& phi);

/// Inverse construction for a regular twist: (A, alpha^{-1} o *, id).
/// Throws singular_error when alpha is not invertible.
HomAlgebra untwist(const HomAlgebra& a);

}  // namespace hompois
