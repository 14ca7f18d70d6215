#include "hompois/representation.hpp"

#include <utility>

#include "hompois/errors.hpp"
#include "hompois/parallel.hpp"

namespace hompois {

namespace {

Rational third() { return Rational(1, 3); }

// Action matrices and product data precomputed for the pair scans.
struct RepCtx {
  std::size_t n, m;
  std::vector<Matrix> rho, mu;      // matrices of rho(e_i), mu(e_i)
  std::vector<Matrix> rho_a, mu_a;  // rho(alpha(e_i)), mu(alpha(e_i))
  std::vector<std::vector<Matrix>> rho_p, mu_p;  // rho(e_i * e_j), ...
  const Matrix& beta;

  explicit RepCtx(const Representation& r)
      : n(r.algebra.dim), m(r.dim_v), beta(r.beta) {
    rho.reserve(n);
    mu.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      rho.push_back(r.rho_of(unit_vec(n, i)));
      mu.push_back(r.mu_of(unit_vec(n, i)));
    }
    for (std::size_t i = 0; i < n; ++i) {
      rho_a.push_back(r.rho_of(r.algebra.alpha.col(i)));
      mu_a.push_back(r.mu_of(r.algebra.alpha.col(i)));
    }
    rho_p.assign(n, std::vector<Matrix>(n));
    mu_p.assign(n, std::vector<Matrix>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Vec prod = r.algebra.product.slice(i, j);
        rho_p[i][j] = r.rho_of(prod);
        mu_p[i][j] = r.mu_of(prod);
      }
    }
  }
};

Matrix action_matrix(const Tensor3& t, const Vec& x, std::size_t m) {
  Matrix a(m, m);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t k = 0; k < m; ++k) {
        a.at(k, j) += x[i] * t.at(i, j, k);
      }
    }
  }
  return a;
}

}  // namespace

Representation::Representation(HomAlgebra algebra_, std::size_t dim_v_,
                               Tensor3 rho_, Tensor3 mu_, Matrix beta_)
    : algebra(std::move(algebra_)),
      dim_v(dim_v_),
      rho(std::move(rho_)),
      mu(std::move(mu_)),
      beta(std::move(beta_)) {
  const std::size_t n = algebra.dim;
  for (const Tensor3* t : {&rho, &mu}) {
    if (t->dim0() != n || t->dim1() != dim_v || t->dim2() != dim_v) {
      throw shape_error("action tensor shape mismatch");
    }
  }
  if (beta.rows() != dim_v || beta.cols() != dim_v) {
    throw shape_error("carrier twist shape mismatch");
  }
}

Matrix Representation::rho_of(const Vec& x) const {
  return action_matrix(rho, x, dim_v);
}

Matrix Representation::mu_of(const Vec& x) const {
  return action_matrix(mu, x, dim_v);
}

CheckReport check_representation(const Representation& r) {
  RepCtx ctx(r);
  const std::size_t n = ctx.n, m = ctx.m;

  CheckReport twist1 = exhaustive_check(
      "rho-twist-intertwine", {n, m}, [&](const std::vector<std::size_t>& t) {
        Matrix res = ctx.rho_a[t[0]] * ctx.beta - ctx.beta * ctx.rho[t[0]];
        return res.col(t[1]);
      });
  CheckReport twist2 = exhaustive_check(
      "mu-twist-intertwine", {n, m}, [&](const std::vector<std::size_t>& t) {
        Matrix res = ctx.mu_a[t[0]] * ctx.beta - ctx.beta * ctx.mu[t[0]];
        return res.col(t[1]);
      });

  CheckReport compat1 = exhaustive_check(
      "action-compat-1", {n, n, m}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Matrix res = ctx.rho_p[i][j] * ctx.beta - ctx.rho_a[i] * ctx.rho[j];
        Matrix br = -(ctx.rho_a[i] * ctx.mu[j]);
        br += ctx.mu_p[i][j] * ctx.beta;
        br += ctx.rho_a[j] * ctx.rho[i];
        br -= ctx.rho_a[j] * ctx.mu[i];
        res += third() * br;
        return res.col(t[2]);
      });
  CheckReport compat2 = exhaustive_check(
      "action-compat-2", {n, n, m}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Matrix res = ctx.mu_a[j] * ctx.rho[i] - ctx.rho_a[i] * ctx.mu[j];
        Matrix br = -(ctx.rho_a[i] * ctx.rho[j]);
        br += ctx.rho_a[j] * ctx.rho[i];
        br += ctx.mu_p[i][j] * ctx.beta;
        br -= ctx.mu_p[j][i] * ctx.beta;
        res += third() * br;
        return res.col(t[2]);
      });
  CheckReport compat3 = exhaustive_check(
      "action-compat-3", {n, n, m}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Matrix res = ctx.mu_a[j] * ctx.mu[i] - ctx.mu_p[i][j] * ctx.beta;
        Matrix br = -(ctx.mu_p[j][i] * ctx.beta);
        br += ctx.rho_a[j] * ctx.mu[i];
        br += ctx.rho_a[i] * ctx.mu[j];
        br -= ctx.rho_a[i] * ctx.rho[j];
        res += third() * br;
        return res.col(t[2]);
      });

  return CheckReport::all_of(
      "representation",
      {std::move(twist1), std::move(twist2), std::move(compat1),
       std::move(compat2), std::move(compat3)});
}

CheckReport check_rep_identity(const Representation& r) {
  RepCtx ctx(r);
  const std::size_t n = ctx.n, m = ctx.m;
  return exhaustive_check(
      "rep-identity", {n, n, m}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        Matrix res = ctx.rho_p[i][j] * ctx.beta + ctx.mu_a[i] * ctx.mu[j];
        res -= ctx.rho_a[i] * ctx.rho[j];
        res -= ctx.mu_p[j][i] * ctx.beta;
        return res.col(t[2]);
      });
}

HomAlgebra semidirect_product(const Representation& r) {
  const std::size_t n = r.algebra.dim, m = r.dim_v, d = n + m;
  Tensor3 prod(d, d, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        prod.at(i, j, k) = r.algebra.product.at(i, j, k);
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t w = 0; w < m; ++w) {
        prod.at(i, n + u, n + w) = r.rho.at(i, u, w);  // e_i * f_u = rho(e_i) f_u
        prod.at(n + u, i, n + w) = r.mu.at(i, u, w);   // f_u * e_i = mu(e_i) f_u
      }
    }
  }
  Matrix twist(d, d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) twist.at(i, j) = r.algebra.alpha.at(i, j);
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t w = 0; w < m; ++w) twist.at(n + u, n + w) = r.beta.at(u, w);
  }
  return HomAlgebra(d, std::move(prod), std::move(twist));
}

Representation dual_representation(const Representation& r) {
  auto beta_inv = r.beta.try_inverse();
  if (!beta_inv) throw singular_error("carrier twist is singular");
  const std::size_t n = r.algebra.dim, m = r.dim_v;
  const Matrix bt_inv = beta_inv->transpose();
  const Matrix p = bt_inv * bt_inv;  // (beta^T)^{-2}

  Tensor3 new_rho(n, m, m), new_mu(n, m, m);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec ai = r.algebra.alpha.col(i);
    Matrix nr = r.mu_of(ai).transpose() * p;
    Matrix nm = r.rho_of(ai).transpose() * p;
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t w = 0; w < m; ++w) {
        new_rho.at(i, u, w) = nr.at(w, u);
        new_mu.at(i, u, w) = nm.at(w, u);
      }
    }
  }
  return Representation(r.algebra, m, std::move(new_rho), std::move(new_mu),
                        bt_inv);
}

Representation adjoint_representation(const HomAlgebra& a) {
  return Representation(a, a.dim, a.product, a.product.swap01(), a.alpha);
}

Representation coadjoint_representation(const HomAlgebra& a) {
  return dual_representation(adjoint_representation(a));
}

CheckReport check_rep_equivalence(const Representation& r1,
                                  const Representation& r2, const Matrix& phi) {
  if (r1.dim_v != r2.dim_v) throw shape_error("carrier dimension mismatch");
  if (r1.algebra.dim != r2.algebra.dim) {
    throw shape_error("algebra dimension mismatch");
  }
  if (phi.rows() != r2.dim_v || phi.cols() != r1.dim_v) {
    throw shape_error("intertwiner shape mismatch");
  }
  const std::size_t n = r1.algebra.dim, m = r1.dim_v;

  CheckReport rho_tw = exhaustive_check(
      "rho-intertwine", {n, m}, [&](const std::vector<std::size_t>& t) {
        Matrix res = phi * r1.rho_of(unit_vec(n, t[0])) -
                     r2.rho_of(unit_vec(n, t[0])) * phi;
        return res.col(t[1]);
      });
  CheckReport mu_tw = exhaustive_check(
      "mu-intertwine", {n, m}, [&](const std::vector<std::size_t>& t) {
        Matrix res = phi * r1.mu_of(unit_vec(n, t[0])) -
                     r2.mu_of(unit_vec(n, t[0])) * phi;
        return res.col(t[1]);
      });
  CheckReport beta_tw = exhaustive_check(
      "twist-intertwine", {m}, [&](const std::vector<std::size_t>& t) {
        Matrix res = phi * r1.beta - r2.beta * phi;
        return res.col(t[0]);
      });

  CheckReport report = CheckReport::all_of(
      "rep-equivalence",
      {std::move(rho_tw), std::move(mu_tw), std::move(beta_tw)});
  CheckReport inv = phi.invertible()
                        ? CheckReport::pass("phi-invertible")
                        : CheckReport::fail("phi-invertible", {}, {});
  report.add_informational(std::move(inv));
  return report;
}

Representation twist_representation(const Representation& r) {
  RepCtx ctx(r);
  const std::size_t n = ctx.n, m = ctx.m;
  CheckReport pre = CheckReport::all_of(
      "twist-preconditions",
      {exhaustive_check("rho-twist-intertwine", {n, m},
                        [&](const std::vector<std::size_t>& t) {
                          Matrix res = ctx.rho_a[t[0]] * ctx.beta -
                                       ctx.beta * ctx.rho[t[0]];
                          return res.col(t[1]);
                        }),
       exhaustive_check("mu-twist-intertwine", {n, m},
                        [&](const std::vector<std::size_t>& t) {
                          Matrix res = ctx.mu_a[t[0]] * ctx.beta -
                                       ctx.beta * ctx.mu[t[0]];
                          return res.col(t[1]);
                        })});
  if (!pre.passed) {
    const CheckReport* f = pre.first_failure();
    throw precondition_error("twist intertwining fails (" + f->axiom + " at " +
                             witness_str(*f->witness) + ")");
  }

  Tensor3 twisted(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec row = r.algebra.alpha.apply(r.algebra.product.slice(i, j));
      for (std::size_t k = 0; k < n; ++k) twisted.at(i, j, k) = row[k];
    }
  }
  HomAlgebra twisted_algebra(n, std::move(twisted), r.algebra.alpha);

  Tensor3 new_rho(n, m, m), new_mu(n, m, m);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix nr = ctx.beta * ctx.rho[i];
    Matrix nm = ctx.beta * ctx.mu[i];
    for (std::size_t u = 0; u < m; ++u) {
      for (std::size_t w = 0; w < m; ++w) {
        new_rho.at(i, u, w) = nr.at(w, u);
        new_mu.at(i, u, w) = nm.at(w, u);
      }
    }
  }
  return Representation(std::move(twisted_algebra), m, std::move(new_rho),
                        std::move(new_mu), r.beta);
}

}  // namespace hompois
