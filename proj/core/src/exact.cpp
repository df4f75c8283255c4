#include "dsg/exact.hpp"

#include <cctype>

namespace dsg {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class(string) aborts on garbage, so pre-validate.
  std::size_t slash = s.find('/');
  auto check_int = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    std::size_t i = from;
    if (s[i] == '-' || s[i] == '+') ++i;
    if (i >= to) return false;
    for (; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  bool ok = (slash == std::string::npos)
                ? check_int(0, s.size())
                : check_int(0, slash) && check_int(slash + 1, s.size());
  if (!ok) throw std::invalid_argument("malformed rational literal: " + s);
  Rat r(s);
  if (sgn(r.get_den()) == 0)
    throw std::invalid_argument("zero denominator in rational: " + s);
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

bool rat_sqrt_exact(const Rat& q, Rat& root) {
  if (sgn(q) < 0) return false;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  root = Rat(rn, rd);
  root.canonicalize();
  return true;
}

int sign_single_radical(const Rat& a, const Rat& b, const Rat& q) {
  if (sgn(q) < 0) throw std::domain_error("negative radicand");
  if (sgn(b) == 0 || sgn(q) == 0) return sgn(a);
  int sa = sgn(a), sb = sgn(b);
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: |a| vs |b|sqrt(q) decided by one squaring.
  Rat lhs = a * a;
  Rat rhs = b * b * q;
  int c = cmp(lhs, rhs);
  if (c == 0) return 0;
  return c > 0 ? sa : sb;
}

int sign_two_radicals(const Rat& a, const Rat& b, const Rat& u, const Rat& c,
                      const Rat& v) {
  if (sgn(u) < 0 || sgn(v) < 0) throw std::domain_error("negative radicand");
  if (sgn(c) == 0 || sgn(v) == 0) return sign_single_radical(a, b, u);
  if (sgn(b) == 0 || sgn(u) == 0) return sign_single_radical(a, c, v);
  // Compare X = a + b*sqrt(u) against Y = -c*sqrt(v).
  int sx = sign_single_radical(a, b, u);
  int sy = -sgn(c);
  if (sx != sy) return sx > sy ? +1 : -1;
  if (sx == 0) return 0;
  // Same nonzero sign: squaring is monotone on |X| vs |Y|.
  // X^2 - Y^2 = (a^2 + b^2 u - c^2 v) + 2ab*sqrt(u).
  int d = sign_single_radical(a * a + b * b * u - c * c * v, 2 * a * b, u);
  if (d == 0) return 0;
  return sx > 0 ? d : -d;
}

RadExpr RadExpr::rational(const Rat& x) {
  RadExpr e;
  e.a = x;
  return e;
}

RadExpr RadExpr::make(const Rat& a, const Rat& b, const Rat& q) {
  if (sgn(q) < 0) throw std::domain_error("negative radicand in RadExpr");
  RadExpr e;
  e.a = a;
  if (sgn(b) == 0 || sgn(q) == 0) return e;
  Rat root;
  if (rat_sqrt_exact(q, root)) {
    e.a = a + b * root;
    return e;
  }
  e.b = b;
  e.q = q;
  return e;
}

RadExpr RadExpr::add(const RadExpr& other) const {
  if (is_rational()) return make(a + other.a, other.b, other.q);
  if (other.is_rational()) return make(a + other.a, b, q);
  if (q != other.q)
    throw UnsupportedFormError("cannot add radicals with distinct radicands");
  return make(a + other.a, b + other.b, q);
}

RadExpr RadExpr::sub(const RadExpr& other) const { return add(other.neg()); }

RadExpr RadExpr::scale(const Rat& s) const { return make(a * s, b * s, q); }

RadExpr RadExpr::neg() const { return make(-a, -b, q); }

RadExpr RadExpr::mul(const RadExpr& other) const {
  if (is_rational()) return make(a * other.a, a * other.b, other.q);
  if (other.is_rational()) return make(a * other.a, other.a * b, q);
  if (q != other.q)
    throw UnsupportedFormError(
        "cannot multiply radicals with distinct radicands");
  return make(a * other.a + b * other.b * q, a * other.b + b * other.a, q);
}

int RadExpr::sign() const { return sign_single_radical(a, b, q); }

int RadExpr::compare(const RadExpr& other) const {
  return sign_two_radicals(a - other.a, b, q, -other.b, other.q);
}

bool RadExpr::operator==(const RadExpr& other) const {
  return a == other.a && b == other.b && q == other.q;
}

Coord Coord::of(const Rat& value) {
  Coord c;
  c.rational = true;
  c.r = value;
  return c;
}

Coord Coord::pure_sqrt(const Rat& cc, const Rat& qq) {
  if (sgn(qq) < 0) throw std::domain_error("negative radicand in Coord");
  Rat root;
  if (sgn(cc) == 0 || sgn(qq) == 0) return of(Rat(0));
  if (rat_sqrt_exact(qq, root)) return of(cc * root);
  Coord c;
  c.rational = false;
  c.c = cc;
  c.q = qq;
  return c;
}

RadExpr Coord::as_radexpr() const {
  if (rational) return RadExpr::rational(r);
  return RadExpr::make(Rat(0), c, q);
}

RadExpr Coord::diff_sq(const Coord& x, const Coord& y) {
  if (x.rational && y.rational) {
    Rat d = x.r - y.r;
    return RadExpr::rational(d * d);
  }
  if (x.rational) return diff_sq(y, x);
  if (y.rational) {
    // (c*sqrt(q) - r)^2 = c^2 q + r^2 - 2rc*sqrt(q)
    return RadExpr::make(x.c * x.c * x.q + y.r * y.r, -2 * y.r * x.c, x.q);
  }
  // (c1*sqrt(q1) - c2*sqrt(q2))^2 = c1^2 q1 + c2^2 q2 - 2 c1 c2 sqrt(q1 q2)
  return RadExpr::make(x.c * x.c * x.q + y.c * y.c * y.q, -2 * x.c * y.c,
                       x.q * y.q);
}

bool Coord::operator==(const Coord& other) const {
  if (rational != other.rational) return false;
  if (rational) return r == other.r;
  return c == other.c && q == other.q;
}

std::string coord_debug(const Coord& c) {
  if (c.rational) return rat_to_string(c.r);
  return rat_to_string(c.c) + "*sqrt(" + rat_to_string(c.q) + ")";
}

}  // namespace dsg
