#include "hompois/matched.hpp"

#include <utility>

#include "hompois/errors.hpp"
#include "hompois/parallel.hpp"

namespace hompois {

namespace {

Rational third() { return Rational(1, 3); }

// Basis slices for one orientation of a matched pair; eq1..eq3 produce
// values in the first algebra. The mirrored equations are the same three
// on the swapped data.
struct PairCtx {
  const MatchedPairData& m;
  std::vector<Vec> a1col, a2col;
  std::vector<std::vector<Vec>> p1;              // e_i *1 e_j
  std::vector<std::vector<Vec>> r1s, m1s;        // rho1(e_i) f_a, mu1(e_i) f_a
  std::vector<std::vector<Vec>> r2s, m2s;        // rho2(f_a) e_j, mu2(f_a) e_j

  explicit PairCtx(const MatchedPairData& data) : m(data) {
    const std::size_t n1 = m.a1.dim, n2 = m.a2.dim;
    for (std::size_t i = 0; i < n1; ++i) a1col.push_back(m.a1.alpha.col(i));
    for (std::size_t a = 0; a < n2; ++a) a2col.push_back(m.a2.alpha.col(a));
    p1.assign(n1, std::vector<Vec>(n1));
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t j = 0; j < n1; ++j) p1[i][j] = m.a1.product.slice(i, j);
    }
    r1s.assign(n1, std::vector<Vec>(n2));
    m1s.assign(n1, std::vector<Vec>(n2));
    for (std::size_t i = 0; i < n1; ++i) {
      for (std::size_t a = 0; a < n2; ++a) {
        r1s[i][a] = m.rho1.slice(i, a);
        m1s[i][a] = m.mu1.slice(i, a);
      }
    }
    r2s.assign(n2, std::vector<Vec>(n1));
    m2s.assign(n2, std::vector<Vec>(n1));
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t j = 0; j < n1; ++j) {
        r2s[a][j] = m.rho2.slice(a, j);
        m2s[a][j] = m.mu2.slice(a, j);
      }
    }
  }

  Vec eq1(std::size_t i, std::size_t j, std::size_t a) const {
    Vec res = m.mu2.apply_bilinear(a2col[a], p1[i][j]);
    res = res - m.a1.product.apply_bilinear(a1col[i], m2s[a][j]);
    res = res - m.mu2.apply_bilinear(r1s[j][a], a1col[i]);
    Vec br = m.a1.product.apply_bilinear(a1col[i], r2s[a][j]);
    br = br + m.mu2.apply_bilinear(m1s[j][a], a1col[i]);
    br = br - m.rho2.apply_bilinear(a2col[a], p1[i][j]);
    br = br - m.a1.product.apply_bilinear(a1col[j], m2s[a][i]);
    br = br - m.mu2.apply_bilinear(r1s[i][a], a1col[j]);
    br = br + m.a1.product.apply_bilinear(a1col[j], r2s[a][i]);
    br = br + m.mu2.apply_bilinear(m1s[i][a], a1col[j]);
    return res - scaled(br, third());
  }

  Vec eq2(std::size_t i, std::size_t j, std::size_t a) const {
    Vec res = m.rho2.apply_bilinear(a2col[a], p1[i][j]);
    res = res - m.a1.product.apply_bilinear(r2s[a][i], a1col[j]);
    res = res - m.rho2.apply_bilinear(m1s[i][a], a1col[j]);
    Vec br = scaled(m.rho2.apply_bilinear(a2col[a], p1[j][i]), Rational(-1));
    br = br + m.a1.product.apply_bilinear(a1col[j], r2s[a][i]);
    br = br + m.mu2.apply_bilinear(m1s[i][a], a1col[j]);
    br = br + m.a1.product.apply_bilinear(a1col[i], r2s[a][j]);
    br = br + m.mu2.apply_bilinear(m1s[j][a], a1col[i]);
    br = br - m.a1.product.apply_bilinear(a1col[i], m2s[a][j]);
    br = br - m.mu2.apply_bilinear(r1s[j][a], a1col[i]);
    return res - scaled(br, third());
  }

  Vec eq3(std::size_t i, std::size_t j, std::size_t a) const {
    Vec res = m.a1.product.apply_bilinear(m2s[a][i], a1col[j]);
    res = res + m.rho2.apply_bilinear(r1s[i][a], a1col[j]);
    res = res - m.a1.product.apply_bilinear(a1col[i], r2s[a][j]);
    res = res - m.mu2.apply_bilinear(m1s[j][a], a1col[i]);
    Vec br = m.a1.product.apply_bilinear(a1col[i], m2s[a][j]);
    br = br + m.mu2.apply_bilinear(r1s[j][a], a1col[i]);
    br = br - m.a1.product.apply_bilinear(a1col[j], m2s[a][i]);
    br = br - m.mu2.apply_bilinear(r1s[i][a], a1col[j]);
    br = br - m.rho2.apply_bilinear(a2col[a], p1[i][j]);
    br = br + m.rho2.apply_bilinear(a2col[a], p1[j][i]);
    return res - scaled(br, third());
  }
};

}  // namespace

MatchedPairData::MatchedPairData(HomAlgebra a1_, HomAlgebra a2_, Tensor3 rho1_,
                                 Tensor3 mu1_, Tensor3 rho2_, Tensor3 mu2_)
    : a1(std::move(a1_)),
      a2(std::move(a2_)),
      rho1(std::move(rho1_)),
      mu1(std::move(mu1_)),
      rho2(std::move(rho2_)),
      mu2(std::move(mu2_)) {
  const std::size_t n1 = a1.dim, n2 = a2.dim;
  for (const Tensor3* t : {&rho1, &mu1}) {
    if (t->dim0() != n1 || t->dim1() != n2 || t->dim2() != n2) {
      throw shape_error("matched pair: first action tensor shape mismatch");
    }
  }
  for (const Tensor3* t : {&rho2, &mu2}) {
    if (t->dim0() != n2 || t->dim1() != n1 || t->dim2() != n1) {
      throw shape_error("matched pair: second action tensor shape mismatch");
    }
  }
}

MatchedPairData MatchedPairData::swapped() const {
  return MatchedPairData(a2, a1, rho2, mu2, rho1, mu1);
}

CheckReport check_matched_pair(const MatchedPairData& m) {
  const std::size_t n1 = m.a1.dim, n2 = m.a2.dim;

  CheckReport adm1 = check_admissible(m.a1);
  adm1.axiom = "algebra-1-admissible";
  CheckReport adm2 = check_admissible(m.a2);
  adm2.axiom = "algebra-2-admissible";

  Representation rep_on_2(m.a1, n2, m.rho1, m.mu1, m.a2.alpha);
  CheckReport rep1 = check_representation(rep_on_2);
  rep1.axiom = "rep-of-1-on-2";
  Representation rep_on_1(m.a2, n1, m.rho2, m.mu2, m.a1.alpha);
  CheckReport rep2 = check_representation(rep_on_1);
  rep2.axiom = "rep-of-2-on-1";

  PairCtx fwd(m);
  const MatchedPairData sw = m.swapped();
  PairCtx bwd(sw);

  CheckReport eq1 = exhaustive_check(
      "matched-eq-1", {n1, n1, n2},
      [&](const std::vector<std::size_t>& t) { return fwd.eq1(t[0], t[1], t[2]); });
  CheckReport eq2 = exhaustive_check(
      "matched-eq-2", {n1, n1, n2},
      [&](const std::vector<std::size_t>& t) { return fwd.eq2(t[0], t[1], t[2]); });
  CheckReport eq3 = exhaustive_check(
      "matched-eq-3", {n1, n1, n2},
      [&](const std::vector<std::size_t>& t) { return fwd.eq3(t[0], t[1], t[2]); });
  CheckReport eq4 = exhaustive_check(
      "matched-eq-4", {n2, n2, n1},
      [&](const std::vector<std::size_t>& t) { return bwd.eq1(t[0], t[1], t[2]); });
  CheckReport eq5 = exhaustive_check(
      "matched-eq-5", {n2, n2, n1},
      [&](const std::vector<std::size_t>& t) { return bwd.eq2(t[0], t[1], t[2]); });
  CheckReport eq6 = exhaustive_check(
      "matched-eq-6", {n2, n2, n1},
      [&](const std::vector<std::size_t>& t) { return bwd.eq3(t[0], t[1], t[2]); });

  return CheckReport::all_of(
      "matched-pair",
      {std::move(adm1), std::move(adm2), std::move(rep1), std::move(rep2),
       std::move(eq1), std::move(eq2), std::move(eq3), std::move(eq4),
       std::move(eq5), std::move(eq6)});
}

HomAlgebra double_algebra(const MatchedPairData& m) {
  const std::size_t n1 = m.a1.dim, n2 = m.a2.dim, d = n1 + n2;
  Tensor3 prod(d, d, d);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) {
      for (std::size_t k = 0; k < n1; ++k) {
        prod.at(i, j, k) = m.a1.product.at(i, j, k);
      }
    }
  }
  for (std::size_t a = 0; a < n2; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      for (std::size_t c = 0; c < n2; ++c) {
        prod.at(n1 + a, n1 + b, n1 + c) = m.a2.product.at(a, b, c);
      }
    }
  }
  // x * b = mu2(b)x + rho1(x)b; a * y = rho2(a)y + mu1(y)a.
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t a = 0; a < n2; ++a) {
      for (std::size_t k = 0; k < n1; ++k) {
        prod.at(i, n1 + a, k) = m.mu2.at(a, i, k);
        prod.at(n1 + a, i, k) = m.rho2.at(a, i, k);
      }
      for (std::size_t c = 0; c < n2; ++c) {
        prod.at(i, n1 + a, n1 + c) = m.rho1.at(i, a, c);
        prod.at(n1 + a, i, n1 + c) = m.mu1.at(i, a, c);
      }
    }
  }
  Matrix twist(d, d);
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t j = 0; j < n1; ++j) twist.at(i, j) = m.a1.alpha.at(i, j);
  }
  for (std::size_t a = 0; a < n2; ++a) {
    for (std::size_t b = 0; b < n2; ++b) {
      twist.at(n1 + a, n1 + b) = m.a2.alpha.at(a, b);
    }
  }
  return HomAlgebra(d, std::move(prod), std::move(twist));
}

BilinearForm::BilinearForm(std::size_t dim_, Matrix gram_)
    : dim(dim_), gram(std::move(gram_)) {
  if (gram.rows() != dim || gram.cols() != dim) {
    throw shape_error("gram matrix shape mismatch");
  }
}

bool BilinearForm::symmetric() const { return gram == gram.transpose(); }

BilinearForm standard_form(std::size_t n) {
  Matrix g(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.at(i, n + i) = Rational(1);
    g.at(n + i, i) = Rational(1);
  }
  return BilinearForm(2 * n, std::move(g));
}

CheckReport check_form_invariance(const HomAlgebra& a, const BilinearForm& b,
                                  InvarianceMode mode) {
  if (b.dim != a.dim) throw shape_error("form dimension mismatch");
  const std::size_t n = a.dim;
  const auto pair_with = [&](const Vec& u, const Vec& v) {
    Rational s(0);
    for (std::size_t p = 0; p < n; ++p) {
      if (u[p].is_zero()) continue;
      for (std::size_t q = 0; q < n; ++q) {
        if (!v[q].is_zero()) s += u[p] * b.gram.at(p, q) * v[q];
      }
    }
    return s;
  };

  std::vector<Vec> acol, basis;
  for (std::size_t i = 0; i < n; ++i) {
    acol.push_back(a.alpha.col(i));
    basis.push_back(unit_vec(n, i));
  }

  const char* name = mode == InvarianceMode::associative
                         ? "invariance-associative"
                         : "invariance-hom-associative";
  CheckReport inv = exhaustive_check(
      name, {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        const Vec xy = a.product.slice(i, j);
        const Vec yz = a.product.slice(j, k);
        Rational r = mode == InvarianceMode::associative
                         ? pair_with(xy, basis[k]) - pair_with(basis[i], yz)
                         : pair_with(xy, acol[k]) - pair_with(acol[i], yz);
        return Vec{r};
      });
  CheckReport self_adjoint = exhaustive_check(
      "twist-self-adjoint", {n, n}, [&](const std::vector<std::size_t>& t) {
        return Vec{pair_with(acol[t[0]], basis[t[1]]) -
                   pair_with(basis[t[0]], acol[t[1]])};
      });
  return CheckReport::all_of("form-invariance",
                             {std::move(inv), std::move(self_adjoint)});
}

RepEquivalence equivalence_from_form(const HomAlgebra& a,
                                     const BilinearForm& b) {
  if (b.dim != a.dim) throw shape_error("form dimension mismatch");
  if (!b.nondegenerate()) throw singular_error("bilinear form is degenerate");
  // phi(x) = B(x, .): in dual coordinates phi[q][p] = B(e_p, e_q).
  return RepEquivalence{b.gram.transpose()};
}

}  // namespace hompois
