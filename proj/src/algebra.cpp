#include "hompois/algebra.hpp"

#include <utility>

#include "hompois/errors.hpp"
#include "hompois/parallel.hpp"

namespace hompois {

namespace {

void require_shapes(std::size_t dim, const Tensor3& t, const Matrix& m,
                    const char* what) {
  if (t.dim0() != dim || t.dim1() != dim || t.dim2() != dim) {
    throw shape_error(std::string(what) + ": product tensor shape mismatch");
  }
  if (m.rows() != dim || m.cols() != dim) {
    throw shape_error(std::string(what) + ": twist shape mismatch");
  }
}

// Precomputed basis data shared by the triple scans.
struct Ctx {
  const Tensor3& c;
  std::vector<Vec> acol;           // alpha(e_i)
  std::vector<std::vector<Vec>> p; // e_i * e_j

  Ctx(const Tensor3& product, const Matrix& alpha, std::size_t n) : c(product) {
    acol.reserve(n);
    for (std::size_t i = 0; i < n; ++i) acol.push_back(alpha.col(i));
    p.assign(n, std::vector<Vec>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) p[i][j] = product.slice(i, j);
    }
  }
};

Rational third() { return Rational(1, 3); }

}  // namespace

HomAlgebra::HomAlgebra(std::size_t dim, Tensor3 product, Matrix alpha)
    : dim(dim), product(std::move(product)), alpha(std::move(alpha)) {
  require_shapes(dim, this->product, this->alpha, "algebra");
}

HomAlgebra HomAlgebra::zero(std::size_t dim) {
  return HomAlgebra(dim, Tensor3(dim, dim, dim), Matrix::identity(dim));
}

PolarizedAlgebra::PolarizedAlgebra(std::size_t dim, Tensor3 bracket,
                                   Tensor3 circ, Matrix alpha)
    : dim(dim),
      bracket(std::move(bracket)),
      circ(std::move(circ)),
      alpha(std::move(alpha)) {
  require_shapes(dim, this->bracket, this->alpha, "polarized algebra");
  require_shapes(dim, this->circ, this->alpha, "polarized algebra");
}

Vec admissible_residual(const HomAlgebra& a, std::size_t i, std::size_t j,
                        std::size_t k) {
  const Tensor3& c = a.product;
  const Vec ax = a.alpha.col(i);
  const Vec ay = a.alpha.col(j);
  const Vec az = a.alpha.col(k);
  const Vec xy = c.slice(i, j);

  Vec res = c.apply_bilinear(xy, az);
  res = res - c.apply_bilinear(ax, c.slice(j, k));
  Vec bracket = scaled(c.apply_bilinear(ax, c.slice(k, j)), Rational(-1));
  bracket = bracket + c.apply_bilinear(az, xy);
  bracket = bracket + c.apply_bilinear(ay, c.slice(i, k));
  bracket = bracket - c.apply_bilinear(ay, c.slice(k, i));
  return res + scaled(bracket, third());
}

CheckReport check_admissible(const HomAlgebra& a) {
  const std::size_t n = a.dim;
  Ctx ctx(a.product, a.alpha, n);
  return exhaustive_check(
      "admissible", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = ctx.c.apply_bilinear(ctx.p[i][j], ctx.acol[k]);
        res = res - ctx.c.apply_bilinear(ctx.acol[i], ctx.p[j][k]);
        Vec br =
            scaled(ctx.c.apply_bilinear(ctx.acol[i], ctx.p[k][j]), Rational(-1));
        br = br + ctx.c.apply_bilinear(ctx.acol[k], ctx.p[i][j]);
        br = br + ctx.c.apply_bilinear(ctx.acol[j], ctx.p[i][k]);
        br = br - ctx.c.apply_bilinear(ctx.acol[j], ctx.p[k][i]);
        return res + scaled(br, third());
      });
}

CheckReport check_multiplicative(const HomAlgebra& a) {
  const std::size_t n = a.dim;
  Ctx ctx(a.product, a.alpha, n);
  return exhaustive_check(
      "multiplicative", {n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1];
        return a.alpha.apply(ctx.p[i][j]) -
               ctx.c.apply_bilinear(ctx.acol[i], ctx.acol[j]);
      });
}

CheckReport check_exchange_identity(const HomAlgebra& a) {
  const std::size_t n = a.dim;
  Ctx ctx(a.product, a.alpha, n);
  return exhaustive_check(
      "exchange-identity", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = ctx.c.apply_bilinear(ctx.p[i][j], ctx.acol[k]);
        res = res - ctx.c.apply_bilinear(ctx.acol[i], ctx.p[j][k]);
        res = res - ctx.c.apply_bilinear(ctx.acol[k], ctx.p[j][i]);
        res = res + ctx.c.apply_bilinear(ctx.p[k][j], ctx.acol[i]);
        return res;
      });
}

CheckReport check_hom_poisson(const PolarizedAlgebra& p) {
  const std::size_t n = p.dim;
  Ctx br(p.bracket, p.alpha, n);
  Ctx ci(p.circ, p.alpha, n);

  CheckReport skew = exhaustive_check(
      "skew-symmetry", {n, n}, [&](const std::vector<std::size_t>& t) {
        return br.p[t[0]][t[1]] + br.p[t[1]][t[0]];
      });
  CheckReport jacobi = exhaustive_check(
      "twisted-jacobi", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = br.c.apply_bilinear(br.acol[i], br.p[j][k]);
        res = res + br.c.apply_bilinear(br.acol[j], br.p[k][i]);
        res = res + br.c.apply_bilinear(br.acol[k], br.p[i][j]);
        return res;
      });
  CheckReport lie = CheckReport::all_of("twisted-lie",
                                        {std::move(skew), std::move(jacobi)});

  CheckReport assoc = exhaustive_check(
      "twisted-associative", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        return ci.c.apply_bilinear(ci.p[i][j], ci.acol[k]) -
               ci.c.apply_bilinear(ci.acol[i], ci.p[j][k]);
      });

  CheckReport mult_br = exhaustive_check(
      "bracket-multiplicative", {n, n}, [&](const std::vector<std::size_t>& t) {
        return p.alpha.apply(br.p[t[0]][t[1]]) -
               br.c.apply_bilinear(br.acol[t[0]], br.acol[t[1]]);
      });
  CheckReport mult_ci = exhaustive_check(
      "product-multiplicative", {n, n}, [&](const std::vector<std::size_t>& t) {
        return p.alpha.apply(ci.p[t[0]][t[1]]) -
               ci.c.apply_bilinear(ci.acol[t[0]], ci.acol[t[1]]);
      });
  CheckReport mult = CheckReport::all_of(
      "multiplicative", {std::move(mult_br), std::move(mult_ci)});

  CheckReport leibniz = exhaustive_check(
      "twisted-leibniz", {n, n, n}, [&](const std::vector<std::size_t>& t) {
        const std::size_t i = t[0], j = t[1], k = t[2];
        Vec res = br.c.apply_bilinear(br.acol[i], ci.p[j][k]);
        res = res - ci.c.apply_bilinear(br.p[i][j], ci.acol[k]);
        res = res - ci.c.apply_bilinear(ci.acol[j], br.p[i][k]);
        return res;
      });

  return CheckReport::all_of(
      "hom-poisson",
      {std::move(lie), std::move(assoc), std::move(mult), std::move(leibniz)});
}

PolarizedAlgebra polarize(const HomAlgebra& a) {
  const Rational half(1, 2);
  Tensor3 sym = half * (a.product + a.product.swap01());
  Tensor3 anti = half * (a.product - a.product.swap01());
  return PolarizedAlgebra(a.dim, std::move(anti), std::move(sym), a.alpha);
}

HomAlgebra depolarize(const PolarizedAlgebra& p) {
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (std::size_t j = 0; j < p.dim; ++j) {
      for (std::size_t k = 0; k < p.dim; ++k) {
        if (p.bracket.at(i, j, k) != -p.bracket.at(j, i, k)) {
          throw symmetry_error("bracket is not antisymmetric");
        }
        if (p.circ.at(i, j, k) != p.circ.at(j, i, k)) {
          throw symmetry_error("product is not symmetric");
        }
      }
    }
  }
  return HomAlgebra(p.dim, p.circ + p.bracket, p.alpha);
}

HomAlgebra yau_twist(const HomAlgebra& a, const Matrix& phi) {
  const std::size_t n = a.dim;
  if (phi.rows() != n || phi.cols() != n) {
    throw shape_error("twisting morphism shape mismatch");
  }
  std::vector<Vec> pcol;
  pcol.reserve(n);
  for (std::size_t i = 0; i < n; ++i) pcol.push_back(phi.col(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = phi.apply(a.product.slice(i, j));
      Vec rhs = a.product.apply_bilinear(pcol[i], pcol[j]);
      if (!(is_zero(lhs - rhs))) {
        throw morphism_error("twisting map is not an algebra morphism", i, j);
      }
    }
  }
  Tensor3 twisted(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec row = phi.apply(a.product.slice(i, j));
      for (std::size_t k = 0; k < n; ++k) twisted.at(i, j, k) = row[k];
    }
  }
  return HomAlgebra(n, std::move(twisted), phi * a.alpha);
}

HomAlgebra untwist(const HomAlgebra& a) {
  const Matrix inv = a.alpha.inverse();
  const std::size_t n = a.dim;
  Tensor3 plain(n, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Vec row = inv.apply(a.product.slice(i, j));
      for (std::size_t k = 0; k < n; ++k) plain.at(i, j, k) = row[k];
    }
  }
  return HomAlgebra(n, std::move(plain), Matrix::identity(n));
}

}  // namespace hompois
