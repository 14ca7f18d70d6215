#include "hompois/rational.hpp"

#include <cctype>

#include "hompois/errors.hpp"

namespace hompois {

namespace {

// Validates an optionally signed base-10 integer literal.
bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t k = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (k == s.size()) return false;
  for (; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  }
  return true;
}

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw parse_error("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view s = trimmed(text);
  const std::size_t slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  if (!valid_integer(num)) {
    throw parse_error("bad rational: '" + std::string(text) + "'");
  }
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(mpz_class(std::string(num), 10));
  } else {
    std::string_view den = s.substr(slash + 1);
    if (!valid_integer(den)) {
      throw parse_error("bad rational: '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (sgn(d) == 0) {
      throw parse_error("bad rational (zero denominator): '" +
                        std::string(text) + "'");
    }
    q = mpq_class(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  }
  return Rational(std::move(q));
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw singular_error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw singular_error("division by zero");
  v_ /= o.v_;
  return *this;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw shape_error("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw shape_error("vector size mismatch");
  Vec r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& v, const Rational& c) {
  Vec r(v);
  for (auto& x : r) x *= c;
  return r;
}

Vec unit_vec(std::size_t dim, std::size_t index) {
  Vec r(dim, Rational(0));
  r.at(index) = Rational(1);
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  s += ")";
  return s;
}

}  // namespace hompois
