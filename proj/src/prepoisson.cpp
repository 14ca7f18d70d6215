#include "hompois/prepoisson.hpp"

#include <utility>

#include "hompois/errors.hpp"
#include "hompois/parallel.hpp"

namespace hompois {

namespace {

Rational third() { return Rational(1, 3); }

struct PreCtx {
  std::size_t n;
  const Tensor3& prec;
  const Tensor3& succ;
  std::vector<Vec> acol;
  std::vector<std::vector<Vec>> pp, sp;  // e_i < e_j, e_i > e_j

  explicit PreCtx(const PrePoissonStructure& p)
      : n(p.dim), prec(p.prec), succ(p.succ) {
    for (std::size_t i = 0; i < n; ++i) acol.push_back(p.alpha.col(i));
    pp.assign(n, std::vector<Vec>(n));
    sp.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        pp[i][j] = p.prec.slice(i, j);
        sp[i][j] = p.succ.slice(i, j);
      }
    }
  }

  Vec res_a(std::size_t i, std::size_t j, std::size_t k) const {
    Vec res = scaled(succ.apply_bilinear(sp[i][j], acol[k]), Rational(-1));
    res = res - succ.apply_bilinear(pp[i][j], acol[k]);
    res = res + succ.apply_bilinear(acol[i], sp[j][k]);
    Vec br = succ.apply_bilinear(acol[i], pp[k][j]);
    br = br - prec.apply_bilinear(acol[k], sp[i][j]);
    br = br - prec.apply_bilinear(acol[k], pp[i][j]);
    br = br - succ.apply_bilinear(acol[j], sp[i][k]);
    br = br + succ.apply_bilinear(acol[j], pp[k][i]);
    return res + scaled(br, third());
  }

  Vec res_b(std::size_t i, std::size_t j, std::size_t k) const {
    Vec res = scaled(succ.apply_bilinear(acol[i], pp[k][j]), Rational(-1));
    res = res + prec.apply_bilinear(sp[i][k], acol[j]);
    Vec br = scaled(succ.apply_bilinear(acol[i], sp[j][k]), Rational(-1));
    br = br + succ.apply_bilinear(acol[j], sp[i][k]);
    br = br + prec.apply_bilinear(acol[k], pp[i][j]);
    br = br + prec.apply_bilinear(acol[k], sp[i][j]);
    br = br - prec.apply_bilinear(acol[k], sp[j][i]);
    br = br - prec.apply_bilinear(acol[k], pp[j][i]);
    return res + scaled(br, third());
  }

  Vec res_c(std::size_t i, std::size_t j, std::size_t k) const {
    Vec res = scaled(prec.apply_bilinear(acol[k], sp[i][j]), Rational(-1));
    res = res - prec.apply_bilinear(acol[k], pp[i][j]);
    res = res + prec.apply_bilinear(pp[k][i], acol[j]);
    Vec br = scaled(prec.apply_bilinear(acol[k], sp[j][i]), Rational(-1));
    br = br - prec.apply_bilinear(acol[k], pp[j][i]);
    br = br + succ.apply_bilinear(acol[j], pp[k][i]);
    br = br + succ.apply_bilinear(acol[i], pp[k][j]);
    br = br - succ.apply_bilinear(acol[i], sp[j][k]);
    return res + scaled(br, third());
  }
};

}  // namespace

PrePoissonStructure::PrePoissonStructure(std::size_t dim_, Tensor3 prec_,
                                         Tensor3 succ_, Matrix alpha_)
    : dim(dim_),
      prec(std::move(prec_)),
      succ(std::move(succ_)),
      alpha(std::move(alpha_)) {
  for (const Tensor3* t : {&prec, &succ}) {
    if (t->dim0() != dim || t->dim1() != dim || t->dim2() != dim) {
      throw shape_error("product tensor shape mismatch");
    }
  }
  if (alpha.rows() != dim || alpha.cols() != dim) {
    throw shape_error("twist shape mismatch");
  }
}

OOperatorData::OOperatorData(Representation rep_, Matrix t_)
    : rep(std::move(rep_)), t(std::move(t_)) {
  if (t.rows() != rep.algebra.dim || t.cols() != rep.dim_v) {
    throw shape_error("operator shape mismatch");
  }
}

Vec pre_poisson_residual_a(const PrePoissonStructure& p, std::size_t i,
                           std::size_t j, std::size_t k) {
  return PreCtx(p).res_a(i, j, k);
}

Vec pre_poisson_residual_b(const PrePoissonStructure& p, std::size_t i,
                           std::size_t j, std::size_t k) {
  return PreCtx(p).res_b(i, j, k);
}

Vec pre_poisson_residual_c(const PrePoissonStructure& p, std::size_t i,
                           std::size_t j, std::size_t k) {
  return PreCtx(p).res_c(i, j, k);
}

CheckReport check_admissible_pre_poisson(const PrePoissonStructure& p) {
  PreCtx ctx(p);
  const std::size_t n = p.dim;
  CheckReport a = exhaustive_check(
      "split-condition-a", {n, n, n},
      [&](const std::vector<std::size_t>& t) { return ctx.res_a(t[0], t[1], t[2]); });
  CheckReport b = exhaustive_check(
      "split-condition-b", {n, n, n},
      [&](const std::vector<std::size_t>& t) { return ctx.res_b(t[0], t[1], t[2]); });
  CheckReport c = exhaustive_check(
      "split-condition-c", {n, n, n},
      [&](const std::vector<std::size_t>& t) { return ctx.res_c(t[0], t[1], t[2]); });
  return CheckReport::all_of("admissible-pre-poisson",
                             {std::move(a), std::move(b), std::move(c)});
}

HomAlgebra subadjacent(const PrePoissonStructure& p) {
  return HomAlgebra(p.dim, p.prec + p.succ, p.alpha);
}

Representation lsucc_rprec_representation(const PrePoissonStructure& p) {
  return Representation(subadjacent(p), p.dim, p.succ, p.prec.swap01(),
                        p.alpha);
}

CheckReport check_o_operator(const OOperatorData& d) {
  const std::size_t m = d.rep.dim_v;

  CheckReport twist = exhaustive_check(
      "operator-twist-intertwine", {m}, [&](const std::vector<std::size_t>& t) {
        Matrix res = d.t * d.rep.beta - d.rep.algebra.alpha * d.t;
        return res.col(t[0]);
      });
  CheckReport defining = exhaustive_check(
      "operator-identity", {m, m}, [&](const std::vector<std::size_t>& t) {
        const std::size_t u = t[0], v = t[1];
        Vec lhs = d.rep.algebra.product.apply_bilinear(d.t.col(u), d.t.col(v));
        Vec inner = d.rep.rho.apply_bilinear(d.t.col(u), unit_vec(m, v));
        inner = inner + d.rep.mu.apply_bilinear(d.t.col(v), unit_vec(m, u));
        return lhs - d.t.apply(inner);
      });
  return CheckReport::all_of("o-operator", {std::move(twist), std::move(defining)});
}

CheckReport check_rota_baxter(const HomAlgebra& a, const Matrix& op) {
  const std::size_t n = a.dim;
  if (op.rows() != n || op.cols() != n) {
    throw shape_error("operator shape mismatch");
  }

  CheckReport twist = exhaustive_check(
      "operator-twist-intertwine", {n}, [&](const std::vector<std::size_t>& t) {
        Matrix res = op * a.alpha - a.alpha * op;
        return res.col(t[0]);
      });
  CheckReport defining = exhaustive_check(
      "weight-zero-identity", {n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Vec lhs = a.product.apply_bilinear(op.col(i), op.col(j));
        Vec inner = a.product.apply_bilinear(op.col(i), unit_vec(n, j));
        inner = inner + a.product.apply_bilinear(unit_vec(n, i), op.col(j));
        return lhs - op.apply(inner);
      });
  CheckReport report = CheckReport::all_of(
      "rota-baxter", {std::move(twist), std::move(defining)});

  CheckReport oracle =
      check_o_operator(OOperatorData(adjoint_representation(a), op));
  if (oracle.passed != report.passed) {
    throw internal_error(
        "weight-zero operator check disagrees with the adjoint operator "
        "route");
  }
  report.notes.push_back("cross-checked against the adjoint operator route");
  return report;
}

PrePoissonStructure induced_pre_poisson(const OOperatorData& d) {
  CheckReport check = check_o_operator(d);
  if (!check.passed) {
    const CheckReport* f = check.first_failure();
    throw precondition_error("not an operator of the representation (" +
                             f->axiom + " at " + witness_str(*f->witness) +
                             ")");
  }
  const std::size_t m = d.rep.dim_v;
  Tensor3 prec(m, m, m), succ(m, m, m);
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      Vec pr = d.rep.mu.apply_bilinear(d.t.col(v), unit_vec(m, u));
      Vec su = d.rep.rho.apply_bilinear(d.t.col(u), unit_vec(m, v));
      for (std::size_t z = 0; z < m; ++z) {
        prec.at(u, v, z) = pr[z];
        succ.at(u, v, z) = su[z];
      }
    }
  }
  return PrePoissonStructure(m, std::move(prec), std::move(succ), d.rep.beta);
}

CheckReport check_hom_pre_lie(const Tensor3& s, const Matrix& alpha) {
  const std::size_t n = alpha.rows();
  if (s.dim0() != n || s.dim1() != n || s.dim2() != n || alpha.cols() != n) {
    throw shape_error("shape mismatch");
  }
  std::vector<Vec> acol;
  for (std::size_t i = 0; i < n; ++i) acol.push_back(alpha.col(i));
  return exhaustive_check(
      "pre-lie", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = s.apply_bilinear(s.slice(i, j), acol[k]);
        res = res - s.apply_bilinear(acol[i], s.slice(j, k));
        res = res - s.apply_bilinear(s.slice(j, i), acol[k]);
        res = res + s.apply_bilinear(acol[j], s.slice(i, k));
        return res;
      });
}

CheckReport check_hom_zinbiel(const Tensor3& s, const Matrix& alpha) {
  const std::size_t n = alpha.rows();
  if (s.dim0() != n || s.dim1() != n || s.dim2() != n || alpha.cols() != n) {
    throw shape_error("shape mismatch");
  }
  std::vector<Vec> acol;
  for (std::size_t i = 0; i < n; ++i) acol.push_back(alpha.col(i));
  return exhaustive_check(
      "zinbiel", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = s.apply_bilinear(acol[i], s.slice(j, k));
        res = res - s.apply_bilinear(s.slice(i, j), acol[k]);
        res = res - s.apply_bilinear(s.slice(j, i), acol[k]);
        return res;
      });
}

CheckReport check_hom_pre_poisson(const PrePoissonStructure& p) {
  const std::size_t n = p.dim;
  const Tensor3& dot = p.prec;
  const Tensor3& star = p.succ;
  std::vector<Vec> acol;
  for (std::size_t i = 0; i < n; ++i) acol.push_back(p.alpha.col(i));

  CheckReport zin = check_hom_zinbiel(dot, p.alpha);
  CheckReport lie = check_hom_pre_lie(star, p.alpha);
  CheckReport compat1 = exhaustive_check(
      "pre-poisson-compat-1", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = dot.apply_bilinear(star.slice(i, j) - star.slice(j, i),
                                     acol[k]);
        res = res - star.apply_bilinear(acol[i], dot.slice(j, k));
        res = res + dot.apply_bilinear(acol[j], star.slice(i, k));
        return res;
      });
  CheckReport compat2 = exhaustive_check(
      "pre-poisson-compat-2", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = star.apply_bilinear(dot.slice(i, j) + dot.slice(j, i),
                                      acol[k]);
        res = res - dot.apply_bilinear(acol[i], star.slice(j, k));
        res = res - dot.apply_bilinear(acol[j], star.slice(i, k));
        return res;
      });
  return CheckReport::all_of(
      "hom-pre-poisson",
      {std::move(zin), std::move(lie), std::move(compat1), std::move(compat2)});
}

PrePoissonStructure pre_poisson_split(const PrePoissonStructure& p) {
  const Rational half(1, 2);
  Tensor3 dot = half * (p.prec + p.succ.swap01());
  Tensor3 star = half * (p.succ - p.prec.swap01());
  return PrePoissonStructure(p.dim, std::move(dot), std::move(star), p.alpha);
}

PolarizedAlgebra pre_poisson_to_hom_poisson(const PrePoissonStructure& p) {
  CheckReport check = check_hom_pre_poisson(p);
  if (!check.passed) {
    const CheckReport* f = check.first_failure();
    throw precondition_error("not a split pre-Poisson structure (" + f->axiom +
                             " at " + witness_str(*f->witness) + ")");
  }
  Tensor3 circ = p.prec + p.prec.swap01();
  Tensor3 bracket = p.succ - p.succ.swap01();
  return PolarizedAlgebra(p.dim, std::move(bracket), std::move(circ), p.alpha);
}

PrePoissonStructure yau_twist_pre_poisson(const PrePoissonStructure& p,
                                          const Matrix& phi) {
  const std::size_t n = p.dim;
  if (phi.rows() != n || phi.cols() != n) {
    throw shape_error("twisting morphism shape mismatch");
  }
  std::vector<Vec> pcol;
  for (std::size_t i = 0; i < n; ++i) pcol.push_back(phi.col(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const Tensor3* t : {&p.prec, &p.succ}) {
        Vec lhs = phi.apply(t->slice(i, j));
        Vec rhs = t->apply_bilinear(pcol[i], pcol[j]);
        if (!is_zero(lhs - rhs)) {
          throw morphism_error("twisting map is not a morphism of both "
                               "products", i, j);
        }
      }
    }
  }
  Tensor3 prec(n, n, n), succ(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec pr = phi.apply(p.prec.slice(i, j));
      Vec su = phi.apply(p.succ.slice(i, j));
      for (std::size_t k = 0; k < n; ++k) {
        prec.at(i, j, k) = pr[k];
        succ.at(i, j, k) = su[k];
      }
    }
  }
  return PrePoissonStructure(n, std::move(prec), std::move(succ),
                             phi * p.alpha);
}

}  // namespace hompois
