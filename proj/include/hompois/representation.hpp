#pragma once

#include <cstddef>

#include "hompois/algebra.hpp"
#include "hompois/matrix.hpp"
#include "hompois/report.hpp"
#include "hompois/tensor3.hpp"

namespace hompois {

/// Two-sided action of an algebra on a carrier with its own twist.
/// Index order of the action tensors: rho[i][j][k] = coefficient of f_k in
/// rho(e_i) f_j, where e_* is the algebra basis and f_* the carrier basis.
struct Representation {
  HomAlgebra algebra;
  std::size_t dim_v = 0;
  Tensor3 rho;
  Tensor3 mu;
  Matrix beta;

  Representation() = default;
  Representation(HomAlgebra algebra, std::size_t dim_v, Tensor3 rho, Tensor3 mu,
                 Matrix beta);

  /// The matrix of rho(x) for a coordinate vector x.
  Matrix rho_of(const Vec& x) const;
  Matrix mu_of(const Vec& x) const;
};

struct RepEquivalence {
  Matrix phi;
};

/// The five defining conditions: the two twist-intertwining identities
/// rho(a(x)) beta = beta rho(x), mu(a(x)) beta = beta mu(x), and the three
/// weighted compatibility identities coupling rho, mu and the product.
CheckReport check_representation(const Representation& r);

/// rho(x*y) beta + mu(a(x)) mu(y) = rho(a(x)) rho(y) + mu(y*x) beta;
/// a consequence of the compatibility identities, checked independently.
CheckReport check_rep_identity(const Representation& r);

/// Algebra on A + V with product (x+u)(y+v) = x*y + rho(x)v + mu(y)u and
/// twist alpha + beta. Basis order: algebra first, then carrier.
HomAlgebra semidirect_product(const Representation& r);

/// Dual-space representation (V*, -mu#, -rho#, (beta^{-1})*) where
/// rho#(x) = rho*(a(x)) (beta^{-2})* in dual coordinates. Requires beta
/// invertible.
Representation dual_representation(const Representation& r);

/// (A, L, R, alpha) with L(x)y = x*y and R(x)y = y*x.
Representation adjoint_representation(const HomAlgebra& a);

/// Dual of the adjoint; requires a regular twist.
Representation coadjoint_representation(const HomAlgebra& a);

/// Intertwining of two representations by phi: phi rho1(x) = rho2(x) phi,
/// phi mu1(x) = mu2(x) phi, phi beta1 = beta2 phi. Whether phi is
/// invertible is reported informationally.
CheckReport check_rep_equivalence(const Representation& r1,
                                  const Representation& r2, const Matrix& phi);

/// Twisting of a representation along with its algebra: the input carries
/// the untwisted product with the twisting morphism stored in the algebra
/// twist slot and the carrier-side map in beta. Requires the two
/// twist-intertwining identities (checked; throws precondition_error).
/// Returns (V, beta rho, beta mu, beta) over (A, alpha o *, alpha).
Representation twist_representation(const Representation& r);

}  // namespace hompois
