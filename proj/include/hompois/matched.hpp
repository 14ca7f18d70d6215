#pragma once

#include <cstddef>

#include "hompois/algebra.hpp"
#include "hompois/representation.hpp"

namespace hompois {

/// Two algebras acting on each other. Action tensor index order follows
/// Representation: rho1[i][a][b] = coefficient of f_b in rho1(e_i) f_a,
/// where e_* spans the first algebra and f_* the second; rho2/mu2 go the
/// other way.
struct MatchedPairData {
  HomAlgebra a1;
  HomAlgebra a2;
  Tensor3 rho1, mu1;  // first algebra acting on the second
  Tensor3 rho2, mu2;  // second algebra acting on the first

  MatchedPairData() = default;
  MatchedPairData(HomAlgebra a1, HomAlgebra a2, Tensor3 rho1, Tensor3 mu1,
                  Tensor3 rho2, Tensor3 mu2);

  MatchedPairData swapped() const;
};

struct BilinearForm {
  std::size_t dim = 0;
  Matrix gram;

  BilinearForm() = default;
  BilinearForm(std::size_t dim, Matrix gram);

  bool symmetric() const;
  bool nondegenerate() const { return gram.invertible(); }
};

enum class InvarianceMode {
  associative,      // B(x*y, z) = B(x, y*z)
  hom_associative,  // B(x*y, a(z)) = B(a(x), y*z)
};

/// Checks that each algebra is admissible, that each action pair is a
/// representation of the other algebra, and the six cross-compatibility
/// equations. Witnesses name the failing equation (1-indexed display
/// order).
CheckReport check_matched_pair(const MatchedPairData& m);

/// Algebra on A1 + A2 with product
/// (x+a)(y+b) = x*y + mu2(b)x + rho2(a)y + rho1(x)b + mu1(y)a + a*b
/// and twist alpha1 + alpha2. Admissible (and multiplicative) exactly when
/// the matched-pair conditions hold.
HomAlgebra double_algebra(const MatchedPairData& m);

/// The 2n x 2n pairing form [[0, I], [I, 0]] on A + A*.
BilinearForm standard_form(std::size_t n);

/// Invariance of a bilinear form in the selected mode, plus twist
/// self-adjointness B(a(x), y) = B(x, a(y)).
CheckReport check_form_invariance(const HomAlgebra& a, const BilinearForm& b,
                                  InvarianceMode mode);

/// The map x -> B(x, .) from A to dual coordinates; requires B
/// nondegenerate (throws singular_error). When B is invariant this
/// intertwines the adjoint and coadjoint representations.
RepEquivalence equivalence_from_form(const HomAlgebra& a,
                                     const BilinearForm& b);

}  // namespace hompois
