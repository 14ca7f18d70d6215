#include <catch2/catch_amalgamated.hpp>

#include "hompois/errors.hpp"
#include "hompois/representation.hpp"
#include "support/corpus.hpp"

using namespace hompois;

namespace {

Representation conjugate(const Representation& r, const Matrix& phi) {
  const Matrix inv = phi.inverse();
  const std::size_t n = r.algebra.dim, m = r.dim_v;
  Tensor3 rho(n, m, m), mu(n, m, m);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix nr = phi * r.rho_of(unit_vec(n, i)) * inv;
    Matrix nm = phi * r.mu_of(unit_vec(n, i)) * inv;
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t w = 0; w < m; ++w) {
        rho.at(i, u, w) = nr.at(w, u);
        mu.at(i, u, w) = nm.at(w, u);
      }
    }
  }
  return Representation(r.algebra, m, std::move(rho), std::move(mu),
                        phi * r.beta * inv);
}

}  // namespace

TEST_CASE("representation axioms on the worked instances") {
  HomAlgebra dn = corpus::dual_numbers();

  corpus::Rng rng(3);
  Representation zero(dn, 2, Tensor3(2, 2, 2), Tensor3(2, 2, 2),
                      corpus::random_matrix(rng, 2, 2));
  CHECK(check_representation(zero).passed);

  Representation adj = adjoint_representation(dn);
  CHECK(check_representation(adj).passed);

  // left action only: the mixed conditions couple mu to the product
  Representation lonly(dn, 2, dn.product, Tensor3(2, 2, 2),
                       Matrix::identity(2));
  CheckReport report = check_representation(lonly);
  REQUIRE_FALSE(report.passed);
  CHECK(report.first_failure()->witness.has_value());
}

TEST_CASE("adjoint representation reads off the structure constants") {
  CHECK(adjoint_representation(HomAlgebra::zero(2)).rho.is_zero());

  HomAlgebra dn = corpus::dual_numbers();
  Representation adj = adjoint_representation(dn);
  CHECK(adj.rho_of(unit_vec(2, 0)).is_identity());  // left unit acts as id
  CHECK(adj.mu_of(unit_vec(2, 0)).is_identity());
  CHECK(adj.beta == dn.alpha);

  corpus::Rng rng(17);
  for (const auto& item : corpus::algebra_corpus(rng, 40)) {
    INFO(item.label);
    CHECK(check_representation(adjoint_representation(item.algebra)).passed);
  }
}

TEST_CASE("derived two-action identity") {
  HomAlgebra dn = corpus::dual_numbers();
  Representation zero(dn, 1, Tensor3(2, 1, 1), Tensor3(2, 1, 1),
                      Matrix::identity(1));
  CHECK(check_rep_identity(zero).passed);
  CHECK(check_rep_identity(adjoint_representation(dn)).passed);

  corpus::Rng rng(29);
  int reps_seen = 0;
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 2;
    HomAlgebra a(n, corpus::random_tensor(rng, n),
                 corpus::random_matrix(rng, n, n));
    Representation r(a, 2, corpus::random_tensor(rng, 2),
                     corpus::random_tensor(rng, 2),
                     corpus::random_matrix(rng, 2, 2));
    if (check_representation(r).passed) {
      ++reps_seen;
      CHECK(check_rep_identity(r).passed);
    }
  }
  for (const auto& r : corpus::representation_corpus(rng, 60)) {
    REQUIRE(check_representation(r).passed);
    CHECK(check_rep_identity(r).passed);
    ++reps_seen;
  }
  CHECK(reps_seen >= 60);
}

TEST_CASE("semidirect product") {
  HomAlgebra dn = corpus::dual_numbers();

  // zero actions with zero carrier twist: an abelian ideal
  Representation zero(dn, 2, Tensor3(2, 2, 2), Tensor3(2, 2, 2), Matrix(2, 2));
  HomAlgebra sd0 = semidirect_product(zero);
  CHECK(sd0.dim == 4);
  CHECK(check_admissible(sd0).passed);

  HomAlgebra sd = semidirect_product(adjoint_representation(dn));
  CHECK(sd.dim == 4);
  CHECK(check_admissible(sd).passed);
  CHECK(check_multiplicative(sd).passed);

  Representation lonly(dn, 2, dn.product, Tensor3(2, 2, 2),
                       Matrix::identity(2));
  CHECK_FALSE(check_admissible(semidirect_product(lonly)).passed);
}

TEST_CASE("semidirect equivalence with the representation conditions") {
  corpus::Rng rng(71);
  std::vector<Representation> reps = corpus::representation_corpus(rng, 50);
  int corrupted = 0;
  for (auto& r : reps) {
    const bool rep_ok = check_representation(r).passed;
    HomAlgebra sd = semidirect_product(r);
    const bool sd_ok =
        check_admissible(sd).passed && check_multiplicative(sd).passed;
    CHECK(rep_ok == sd_ok);

    // corrupt an action entry; with the algebra admissible and
    // multiplicative the two verdicts must stay equal (and fail)
    if (corrupted < 25) {
      Representation bad = r;
      corpus::corrupt_entry(bad.mu, rng);
      const bool bad_rep = check_representation(bad).passed;
      HomAlgebra bad_sd = semidirect_product(bad);
      const bool bad_sd_ok = check_admissible(bad_sd).passed &&
                             check_multiplicative(bad_sd).passed;
      CHECK(bad_rep == bad_sd_ok);
      if (!bad_rep) ++corrupted;
    }
  }
  CHECK(corrupted >= 20);
}

TEST_CASE("dual representation") {
  HomAlgebra dn = corpus::dual_numbers();

  Representation zero(dn, 2, Tensor3(2, 2, 2), Tensor3(2, 2, 2),
                      Matrix::identity(2));
  Representation dz = dual_representation(zero);
  CHECK(dz.rho.is_zero());
  CHECK(dz.mu.is_zero());
  CHECK(dz.beta.is_identity());

  // with identity twists the dual of the adjoint swaps the transposed
  // action matrices
  Representation adj = adjoint_representation(dn);
  Representation coadj = dual_representation(adj);
  CHECK(check_representation(coadj).passed);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(coadj.rho_of(unit_vec(2, i)) ==
          adj.mu_of(unit_vec(2, i)).transpose());
    CHECK(coadj.mu_of(unit_vec(2, i)) ==
          adj.rho_of(unit_vec(2, i)).transpose());
  }

  // double dual recovers the original when both twists are trivial
  Representation dd = dual_representation(coadj);
  CHECK(dd.rho == adj.rho);
  CHECK(dd.mu == adj.mu);

  Representation singular(dn, 2, Tensor3(2, 2, 2), Tensor3(2, 2, 2),
                          Matrix(2, 2));
  CHECK_THROWS_AS(dual_representation(singular), singular_error);
}

TEST_CASE("duals of passing representations pass") {
  corpus::Rng rng(83);
  int regular_seen = 0;
  for (const auto& r : corpus::representation_corpus(rng, 60)) {
    if (!r.beta.invertible()) continue;
    ++regular_seen;
    CHECK(check_representation(dual_representation(r)).passed);
  }
  CHECK(regular_seen >= 40);

  for (const auto& item : corpus::algebra_corpus(rng, 40)) {
    if (!item.algebra.alpha.invertible()) continue;
    INFO(item.label);
    CHECK(check_representation(coadjoint_representation(item.algebra)).passed);
  }
}

TEST_CASE("representation equivalence") {
  HomAlgebra dn = corpus::dual_numbers();
  Representation adj = adjoint_representation(dn);

  CheckReport self = check_rep_equivalence(adj, adj, Matrix::identity(2));
  CHECK(self.passed);

  corpus::Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    Matrix phi = corpus::random_invertible(rng, 2);
    CHECK(check_rep_equivalence(adj, conjugate(adj, phi), phi).passed);
  }

  // transitivity under composition
  Matrix p1 = corpus::random_invertible(rng, 2);
  Matrix p2 = corpus::random_invertible(rng, 2);
  Representation r2 = conjugate(adj, p1);
  Representation r3 = conjugate(r2, p2);
  CHECK(check_rep_equivalence(adj, r3, p2 * p1).passed);

  // the zero map intertwines everything but is flagged as non-invertible
  CheckReport zero = check_rep_equivalence(adj, adj, Matrix(2, 2));
  CHECK(zero.passed);
  REQUIRE_FALSE(zero.details.empty());
  const CheckReport& flag = zero.details.back();
  CHECK(flag.axiom == "phi-invertible");
  CHECK_FALSE(flag.passed);
}

TEST_CASE("twisting a representation along the algebra") {
  HomAlgebra dn = corpus::dual_numbers();

  // trivial twist leaves the adjoint actions unchanged
  Representation plain = adjoint_representation(dn);
  Representation same = twist_representation(plain);
  CHECK(same.rho == plain.rho);
  CHECK(same.mu == plain.mu);
  CHECK(same.algebra == dn);

  // carrier and algebra twisted by the same diagonal morphism
  Matrix phi = Matrix::identity(2);
  phi.at(1, 1) = Rational(5);
  Representation input(HomAlgebra(2, dn.product, phi), 2, dn.product,
                       dn.product.swap01(), phi);
  Representation twisted = twist_representation(input);
  CHECK(twisted.algebra == yau_twist(dn, phi));
  CHECK(check_representation(twisted).passed);

  // zero actions twist to zero actions
  Representation zero(HomAlgebra(2, Tensor3(2, 2, 2), phi), 2, Tensor3(2, 2, 2),
                      Tensor3(2, 2, 2), phi);
  CHECK(twist_representation(zero).rho.is_zero());

  // intertwining precondition is enforced
  Matrix bad_beta(2, 2);
  bad_beta.at(0, 1) = Rational(1);
  bad_beta.at(1, 0) = Rational(1);
  Representation bad(HomAlgebra(2, dn.product, phi), 2, dn.product,
                     dn.product.swap01(), bad_beta);
  CHECK_THROWS_AS(twist_representation(bad), precondition_error);
}
