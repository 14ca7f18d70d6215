#include "hompois/bialgebra.hpp"

#include <utility>

#include "hompois/errors.hpp"
#include "hompois/parallel.hpp"
#include "hompois/representation.hpp"

namespace hompois {

namespace {

Rational third() { return Rational(1, 3); }

// Shared precomputation for the compatibility conditions: component
// matrices of the coproduct and left/right multiplication operators at
// alpha^{-1} of the basis.
struct BiCtx {
  std::size_t n;
  Matrix au, au_t, ainv;
  std::vector<Matrix> d;        // D(e_i) coefficient matrices
  std::vector<Matrix> l1, r1;   // L(alpha^{-1} e_i), R(alpha^{-1} e_i)
  const Tensor3& prod;

  BiCtx(const HomAlgebra& a, const Coproduct& c)
      : n(a.dim), au(a.alpha), au_t(a.alpha.transpose()),
        ainv(a.alpha.inverse()), prod(a.product) {
    for (std::size_t i = 0; i < n; ++i) {
      d.push_back(c.component(i));
      const Vec w = ainv.col(i);
      l1.push_back(a.product.left_operator(w));
      r1.push_back(a.product.right_operator(w));
    }
  }

  Matrix d_of(const Vec& x) const {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!x[i].is_zero()) m += x[i] * d[i];
    }
    return m;
  }

  // The three compatibility residuals at one basis pair, as coefficient
  // matrices on A (x) A.
  Matrix compat1(std::size_t i, std::size_t j) const {
    const Matrix dxy = d_of(prod.slice(i, j));
    Matrix res = dxy;
    res -= r1[j] * d[i] * au_t;
    res -= au * d[j] * l1[i].transpose();
    Matrix br = l1[j] * d[i] * au_t;
    br -= au * d[i] * l1[j].transpose();
    br += l1[i] * d[j] * au_t;
    br -= r1[i] * d[j] * au_t;
    Matrix flipped = -dxy;
    flipped += l1[i] * d[j] * au_t;
    flipped += l1[j] * d[i] * au_t;
    br += flipped.transpose();
    res -= third() * br;
    return res;
  }

  Matrix compat2(std::size_t i, std::size_t j) const {
    const Matrix dxy = d_of(prod.slice(i, j));
    const Matrix dyx = d_of(prod.slice(j, i));
    Matrix res = dxy;
    res -= r1[j] * d[i] * au_t;
    res -= au * d[j] * l1[i].transpose();
    Matrix br = -dyx;
    br += l1[j] * d[i] * au_t;
    br += l1[i] * d[j] * au_t;
    br += au * d[j].transpose() * l1[i].transpose();
    br += au * d[i].transpose() * l1[j].transpose();
    br -= l1[i] * d[j].transpose() * au_t;
    br -= au * d[i].transpose() * r1[j].transpose();
    res -= third() * br;
    return res;
  }

  Matrix compat3(std::size_t i, std::size_t j) const {
    const Matrix dxy = d_of(prod.slice(i, j));
    const Matrix dyx = d_of(prod.slice(j, i));
    Matrix res = au * d[i] * r1[j].transpose();
    res -= l1[j] * d[i] * au_t;
    res += r1[i] * d[j].transpose() * au_t;
    res -= au * d[j].transpose() * l1[i].transpose();
    Matrix br = r1[j] * d[i] * au_t;
    br -= au * d[i] * l1[j].transpose();
    br += au * d[j] * l1[i].transpose();
    br -= r1[i] * d[j] * au_t;
    br += (dyx - dxy).transpose();
    res -= third() * br;
    return res;
  }
};

// Comultiplicativity D o alpha = (alpha (x) alpha) o D, entrywise.
bool comultiplicative(const Coproduct& c, const Matrix& alpha) {
  const std::size_t n = c.dim;
  for (std::size_t i = 0; i < n; ++i) {
    Matrix lhs(n, n);
    const Vec ai = alpha.col(i);
    for (std::size_t s = 0; s < n; ++s) {
      if (!ai[s].is_zero()) lhs += ai[s] * c.component(s);
    }
    Matrix rhs = alpha * c.component(i) * alpha.transpose();
    if (!(lhs == rhs)) return false;
  }
  return true;
}

}  // namespace

Coproduct::Coproduct(std::size_t dim_, Tensor3 delta_)
    : dim(dim_), delta(std::move(delta_)) {
  if (delta.dim0() != dim || delta.dim1() != dim || delta.dim2() != dim) {
    throw shape_error("coproduct tensor shape mismatch");
  }
}

HomAlgebra dual_algebra(const Coproduct& c, const Matrix& alpha) {
  const std::size_t n = c.dim;
  if (alpha.rows() != n || alpha.cols() != n) {
    throw shape_error("twist shape mismatch");
  }
  const Matrix dual_twist = alpha.inverse().transpose();
  Tensor3 prod(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        prod.at(a, b, i) = c.delta.at(i, a, b);
      }
    }
  }
  return HomAlgebra(n, std::move(prod), dual_twist);
}

CheckReport check_coalgebra(const Coproduct& c, const Matrix& alpha) {
  const std::size_t n = c.dim;
  if (alpha.rows() != n || alpha.cols() != n) {
    throw shape_error("twist shape mismatch");
  }
  const Matrix ainv = alpha.inverse();
  const Tensor3& d = c.delta;

  CheckReport direct = exhaustive_check(
      "coalgebra", {n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0];
        Tensor3 t1(n, n, n), t2(n, n, n);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& w = d.at(i, j, k);
            if (w.is_zero()) continue;
            for (std::size_t p = 0; p < n; ++p) {
              const Rational wj = w * ainv.at(p, j);
              if (!wj.is_zero()) {
                for (std::size_t q = 0; q < n; ++q) {
                  for (std::size_t s = 0; s < n; ++s) {
                    const Rational& dk = d.at(k, q, s);
                    if (!dk.is_zero()) t1.at(p, q, s) += wj * dk;
                  }
                }
              }
              // second leg of t2 indexes alpha^{-1}(e_k)
              const Rational wk = w * ainv.at(p, k);
              if (!wk.is_zero()) {
                for (std::size_t q = 0; q < n; ++q) {
                  for (std::size_t s = 0; s < n; ++s) {
                    const Rational& dj = d.at(j, q, s);
                    if (!dj.is_zero()) t2.at(q, s, p) += wk * dj;
                  }
                }
              }
            }
          }
        }
        Tensor3 res = t1 - t2;
        Tensor3 br = t1.swap12() - t1.swap01();
        br -= t1.swap01().swap12();
        br += t1.swap12().swap01();
        res += third() * br;
        return res.flatten();
      });

  // Double-entry bookkeeping: the condition must agree with admissibility
  // of the dual algebra.
  if (direct.passed != check_admissible(dual_algebra(c, alpha)).passed) {
    throw internal_error(
        "coproduct condition disagrees with dual-algebra admissibility");
  }
  return direct;
}

CheckReport check_bialgebra(const BialgebraStructure& s) {
  const std::size_t n = s.algebra.dim;
  if (s.coproduct.dim != n) throw shape_error("bialgebra dimension mismatch");

  CheckReport adm = check_admissible(s.algebra);
  adm.axiom = "algebra-admissible";
  CheckReport coalg = check_coalgebra(s.coproduct, s.algebra.alpha);

  BiCtx ctx(s.algebra, s.coproduct);
  CheckReport c1 = exhaustive_check(
      "coproduct-compat-1", {n, n}, [&](const std::vector<std::size_t>& t) {
        return ctx.compat1(t[0], t[1]).flatten();
      });
  CheckReport c2 = exhaustive_check(
      "coproduct-compat-2", {n, n}, [&](const std::vector<std::size_t>& t) {
        return ctx.compat2(t[0], t[1]).flatten();
      });
  CheckReport c3 = exhaustive_check(
      "coproduct-compat-3", {n, n}, [&](const std::vector<std::size_t>& t) {
        return ctx.compat3(t[0], t[1]).flatten();
      });

  CheckReport report = CheckReport::all_of(
      "bialgebra", {std::move(adm), std::move(coalg), std::move(c1),
                    std::move(c2), std::move(c3)});
  if (!comultiplicative(s.coproduct, s.algebra.alpha)) {
    report.notes.push_back(
        "coproduct does not commute with the twist; the matched-pair "
        "correspondence needs that compatibility");
  }
  return report;
}

std::pair<Coproduct, Coproduct> coproduct_split(const Coproduct& gamma) {
  const Rational half(1, 2);
  Tensor3 flipped = gamma.delta.swap12();
  Coproduct anti(gamma.dim, half * (gamma.delta - flipped));
  Coproduct sym(gamma.dim, half * (gamma.delta + flipped));
  return {std::move(anti), std::move(sym)};
}

Coproduct coproduct_merge(const Coproduct& anti, const Coproduct& sym) {
  if (anti.dim != sym.dim) throw shape_error("coproduct dimension mismatch");
  if (!(anti.delta.swap12() == -anti.delta)) {
    throw symmetry_error("first part is not antisymmetric");
  }
  if (!(sym.delta.swap12() == sym.delta)) {
    throw symmetry_error("second part is not symmetric");
  }
  return Coproduct(anti.dim, anti.delta + sym.delta);
}

Coproduct coboundary_coproduct(const HomAlgebra& a, const TensorElement& r) {
  const std::size_t n = a.dim;
  if (r.dim != n) throw shape_error("element dimension mismatch");
  const Matrix ainv = a.alpha.inverse();
  const Matrix ainv2 = ainv * ainv;
  const Matrix au_t = a.alpha.transpose();

  Tensor3 delta(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec w = ainv2.col(i);
    Matrix di = a.alpha * r.coeffs * a.product.left_operator(w).transpose();
    di -= a.product.right_operator(w) * r.coeffs * au_t;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) delta.at(i, j, k) = di.at(j, k);
    }
  }
  return Coproduct(n, std::move(delta));
}

CheckReport check_r_conditions(const HomAlgebra& a, const TensorElement& r,
                               bool allow_r_violation) {
  const std::size_t n = a.dim;
  if (r.dim != n) throw shape_error("element dimension mismatch");
  const Matrix ainv = a.alpha.inverse();
  const Matrix ainv2 = ainv * ainv;
  const Matrix au_t = a.alpha.transpose();
  const Matrix sym = r.coeffs + r.coeffs.transpose();  // r + tau(r)

  CheckReport invariance = exhaustive_check(
      "r-invariance", {n, n}, [&](const std::vector<std::size_t>& t) {
        Matrix res = a.alpha * r.coeffs * au_t - r.coeffs;
        return Vec{res.at(t[0], t[1])};
      });

  std::vector<Matrix> l1, r1, l2, r2, r0, w;
  for (std::size_t i = 0; i < n; ++i) {
    l1.push_back(a.product.left_operator(ainv.col(i)));
    r1.push_back(a.product.right_operator(ainv.col(i)));
    l2.push_back(a.product.left_operator(ainv2.col(i)));
    r2.push_back(a.product.right_operator(ainv2.col(i)));
    r0.push_back(a.product.right_operator(unit_vec(n, i)));
    w.push_back(l2.back() * sym * au_t - a.alpha * sym * r2.back().transpose());
  }
  const auto w_of = [&](const Vec& v) {
    const Vec v2 = ainv2.apply(v);
    Matrix m = a.product.left_operator(v2) * sym * au_t;
    m -= a.alpha * sym * a.product.right_operator(v2).transpose();
    return m;
  };

  CheckReport eqv1 = exhaustive_check(
      "r-compat-1", {n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Matrix res = a.alpha * w[j] * l1[i].transpose();
        res += a.alpha * w[i] * l1[j].transpose();
        res -= w_of(a.product.slice(i, j));
        return res.flatten();
      });
  CheckReport eqv2 = exhaustive_check(
      "r-compat-2", {n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        // middle block carries identity legs instead of twist legs; kept
        // as displayed and guarded by the consistency cross-check below
        Matrix v = l2[i] * sym - sym * r0[i].transpose();
        Matrix res = a.alpha * w[j] * l1[i].transpose();
        res += a.alpha * v * l1[j].transpose();
        res -= l1[i] * w[j] * au_t;
        res -= a.alpha * w[i] * r1[j].transpose();
        return res.flatten();
      });
  eqv2.notes.push_back(
      "the second condition mixes identity and twist legs in its middle "
      "block; evaluated as displayed");
  CheckReport eqv3 = exhaustive_check(
      "r-compat-3", {n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Matrix u = l2[j] * sym - sym * r2[j].transpose();
        Matrix res = r2[i] * u - u * l2[i].transpose();
        const Vec dvec = a.product.slice(i, j) - a.product.slice(j, i);
        Matrix comm = a.product.left_operator(dvec) * sym;
        comm -= sym * a.product.right_operator(dvec).transpose();
        res += third() * comm;
        return res.flatten();
      });

  std::vector<CheckReport> parts;
  std::vector<std::string> notes;
  const bool r_ok = invariance.passed;
  if (!r_ok && allow_r_violation) {
    invariance.notes.push_back(
        "warning: invariance violated; excluded from the verdict on request");
    CheckReport rest = CheckReport::all_of(
        "r-conditions", {std::move(eqv1), std::move(eqv2), std::move(eqv3)});
    rest.add_informational(std::move(invariance));
    rest.notes.push_back(
        "compatibility cross-checks skipped: r is not twist-invariant");
    return rest;
  }
  parts.push_back(std::move(invariance));
  parts.push_back(std::move(eqv1));
  parts.push_back(std::move(eqv2));
  parts.push_back(std::move(eqv3));

  // Under the hypotheses (admissible multiplicative algebra, invariant r)
  // each condition is equivalent to the matching compatibility condition of
  // the induced coproduct; cross-check the verdicts.
  const bool hypotheses = r_ok && check_admissible(a).passed &&
                          check_multiplicative(a).passed;
  if (hypotheses) {
    const Coproduct cob = coboundary_coproduct(a, r);
    BiCtx ctx(a, cob);
    const char* names[3] = {"compat-1-consistency", "compat-2-consistency",
                            "compat-3-consistency"};
    for (int which = 0; which < 3; ++which) {
      CheckReport direct = exhaustive_check(
          names[which], {n, n}, [&](const std::vector<std::size_t>& t) {
            Matrix m = which == 0   ? ctx.compat1(t[0], t[1])
                       : which == 1 ? ctx.compat2(t[0], t[1])
                                    : ctx.compat3(t[0], t[1]);
            return m.flatten();
          });
      const bool expected = parts[static_cast<std::size_t>(which) + 1].passed;
      if (direct.passed == expected) {
        parts.push_back(CheckReport::pass(names[which]));
      } else {
        CheckReport bad = CheckReport::fail(names[which], {}, {});
        bad.notes.push_back(
            "verdict of the r-condition disagrees with the induced "
            "coproduct compatibility");
        parts.push_back(std::move(bad));
      }
    }
  } else {
    notes.push_back(
        "compatibility cross-checks skipped: hypotheses not satisfied "
        "(admissible multiplicative algebra with twist-invariant r)");
  }

  CheckReport report = CheckReport::all_of("r-conditions", std::move(parts));
  for (auto& note : notes) report.notes.push_back(std::move(note));
  return report;
}

MatchedPairData coadjoint_matched_pair(const BialgebraStructure& s) {
  const HomAlgebra& a = s.algebra;
  const std::size_t n = a.dim;
  const HomAlgebra dual = dual_algebra(s.coproduct, a.alpha);

  const Representation coad = coadjoint_representation(a);

  const Matrix a2 = a.alpha * a.alpha;
  Tensor3 rho2(n, n, n), mu2(n, n, n);
  for (std::size_t aa = 0; aa < n; ++aa) {
    for (std::size_t m = 0; m < n; ++m) {
      for (std::size_t p = 0; p < n; ++p) {
        Rational rho_acc(0), mu_acc(0);
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            const Rational& d = s.coproduct.delta.at(m, j, k);
            if (d.is_zero()) continue;
            rho_acc += d * a2.at(p, j) * a.alpha.at(aa, k);
            mu_acc += d * a.alpha.at(aa, j) * a2.at(p, k);
          }
        }
        rho2.at(aa, m, p) = rho_acc;
        mu2.at(aa, m, p) = mu_acc;
      }
    }
  }
  return MatchedPairData(a, dual, coad.rho, coad.mu, std::move(rho2),
                         std::move(mu2));
}

}  // namespace hompois
