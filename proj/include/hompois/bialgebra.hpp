#pragma once

#include <cstddef>
#include <utility>

#include "hompois/algebra.hpp"
#include "hompois/matched.hpp"
#include "hompois/tensor3.hpp"

namespace hompois {

/// Coproduct as a rank-3 tensor: delta[i][j][k] = coefficient of
/// e_j (x) e_k in D(e_i).
struct Coproduct {
  std::size_t dim = 0;
  Tensor3 delta;

  Coproduct() = default;
  Coproduct(std::size_t dim, Tensor3 delta);

  Matrix component(std::size_t i) const { return delta.component(i); }
};

struct BialgebraStructure {
  HomAlgebra algebra;
  Coproduct coproduct;
};

/// Product on the dual space: e_a* e_b* = sum_i delta[i][a][b] e_i*, with
/// dual twist (alpha^{-1})^T. Requires alpha invertible.
HomAlgebra dual_algebra(const Coproduct& c, const Matrix& alpha);

/// The coproduct-side counterpart of the admissible identity, equivalent
/// to admissibility of the dual algebra. Requires alpha invertible (the
/// dual twist is (alpha^{-1})^T).
CheckReport check_coalgebra(const Coproduct& c, const Matrix& alpha);

/// Five sub-checks: algebra admissibility, the coalgebra condition, and
/// the three product/coproduct compatibility conditions. Requires alpha
/// invertible.
CheckReport check_bialgebra(const BialgebraStructure& s);

/// Antisymmetric/symmetric parts in the two output legs:
/// delta = (G - tau G)/2, Delta = (G + tau G)/2.
std::pair<Coproduct, Coproduct> coproduct_split(const Coproduct& gamma);

/// Sum of an antisymmetric and a symmetric part (checked; throws
/// symmetry_error). Exact inverse of coproduct_split.
Coproduct coproduct_merge(const Coproduct& anti, const Coproduct& sym);

/// D(x) = (alpha (x) L(alpha^{-2} x) - R(alpha^{-2} x) (x) alpha) r.
/// Linear in r; requires alpha invertible.
Coproduct coboundary_coproduct(const HomAlgebra& a, const TensorElement& r);

/// The invariance condition (alpha (x) alpha) r = r and the three derived
/// conditions on r + tau(r) under which the coboundary coproduct satisfies
/// the corresponding compatibility conditions. When the hypotheses hold
/// (admissible multiplicative algebra, invariant r) each condition verdict
/// is cross-checked against the compatibility verdict of the induced
/// coproduct. `allow_r_violation` downgrades a failing invariance check to
/// a warning.
CheckReport check_r_conditions(const HomAlgebra& a, const TensorElement& r,
                               bool allow_r_violation = false);

/// The matched pair (A, A*) acting on each other through the coadjoint
/// actions induced by the product and the coproduct. The correspondence
/// with check_bialgebra assumes a multiplicative twist and a coproduct
/// commuting with it.
MatchedPairData coadjoint_matched_pair(const BialgebraStructure& s);

}  // namespace hompois
