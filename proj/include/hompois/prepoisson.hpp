#pragma once

#include <cstddef>

#include "hompois/algebra.hpp"
#include "hompois/representation.hpp"

namespace hompois {

/// Two bilinear products with a shared twist. For the split form (the
/// pair of a commutative-type and a Lie-type half-product) the prec slot
/// holds the commutative-type product and the succ slot the Lie-type one.
struct PrePoissonStructure {
  std::size_t dim = 0;
  Tensor3 prec;
  Tensor3 succ;
  Matrix alpha;

  PrePoissonStructure() = default;
  PrePoissonStructure(std::size_t dim, Tensor3 prec, Tensor3 succ,
                      Matrix alpha);

  friend bool operator==(const PrePoissonStructure& a,
                         const PrePoissonStructure& b) {
    return a.dim == b.dim && a.prec == b.prec && a.succ == b.succ &&
           a.alpha == b.alpha;
  }
};

/// A linear map from a representation carrier to the algebra.
struct OOperatorData {
  Representation rep;
  Matrix t;

  OOperatorData() = default;
  OOperatorData(Representation rep, Matrix t);
};

/// The three residuals of the defining conditions at one basis triple.
Vec pre_poisson_residual_a(const PrePoissonStructure& p, std::size_t i,
                           std::size_t j, std::size_t k);
Vec pre_poisson_residual_b(const PrePoissonStructure& p, std::size_t i,
                           std::size_t j, std::size_t k);
Vec pre_poisson_residual_c(const PrePoissonStructure& p, std::size_t i,
                           std::size_t j, std::size_t k);

/// The three defining conditions of the split admissible structure,
/// checked on all basis triples.
CheckReport check_admissible_pre_poisson(const PrePoissonStructure& p);

/// The algebra with product x*y = x<y + x>y and the same twist.
HomAlgebra subadjacent(const PrePoissonStructure& p);

/// (P, L_>, R_<, alpha) over the subadjacent algebra: rho(x)y = x>y,
/// mu(x)y = y<x. A representation exactly when p passes the three
/// conditions.
Representation lsucc_rprec_representation(const PrePoissonStructure& p);

/// T beta = alpha T and T(u) T(v) = T(rho(T(u))v + mu(T(v))u).
CheckReport check_o_operator(const OOperatorData& d);

/// Weight-zero operator identity R(x)R(y) = R(R(x)y + x R(y)) with
/// R alpha = alpha R; evaluated directly and cross-checked against
/// check_o_operator over the adjoint representation.
CheckReport check_rota_baxter(const HomAlgebra& a, const Matrix& op);

/// Carrier-side products u<v = mu(T(v))u and u>v = rho(T(u))v with twist
/// beta. Requires a verified operator (throws precondition_error carrying
/// the witness); T then intertwines the induced sum with the product.
PrePoissonStructure induced_pre_poisson(const OOperatorData& d);

/// (x*y)*a(z) - a(x)*(y*z) = (y*x)*a(z) - a(y)*(x*z).
CheckReport check_hom_pre_lie(const Tensor3& s, const Matrix& alpha);

/// a(x)*(y*z) = (x*y)*a(z) + (y*x)*a(z).
CheckReport check_hom_zinbiel(const Tensor3& s, const Matrix& alpha);

/// Four sub-checks: prec slot is a twisted Zinbiel product, succ slot a
/// twisted pre-Lie product, plus the two compatibility conditions between
/// them.
CheckReport check_hom_pre_poisson(const PrePoissonStructure& p);

/// Half-polarization x.y = (x<y + y>x)/2 into the prec slot and
/// x*y = (x>y - y<x)/2 into the succ slot.
PrePoissonStructure pre_poisson_split(const PrePoissonStructure& p);

/// x o y = x.y + y.x, [x,y] = x*y - y*x from a split structure; requires
/// check_hom_pre_poisson to pass (throws precondition_error).
PolarizedAlgebra pre_poisson_to_hom_poisson(const PrePoissonStructure& p);

/// Composes a morphism of both products with everything:
/// (P, phi o <, phi o >, phi o alpha). Throws morphism_error.
PrePoissonStructure yau_twist_pre_poisson(const PrePoissonStructure& p,
                                          const Matrix& phi);

}  // namespace hompois
