// Exact arithmetic over arbitrary-precision rationals and single square-root
// extensions. Every geometric decision in this project reduces to the sign
// predicates defined here; no floating point is involved anywhere below.

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace dsg {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). mpq_class maintains the invariant as long as values are
// built through arithmetic or rat_from_string().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline int rat_sign(const Rat& x) { return sgn(x); }

// Parses "p/q" or "p". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rat rat_from_string(const std::string& s);

// Always renders as "p/q" with q > 0, e.g. "3380/1". Inverse of
// rat_from_string for canonical values.
std::string rat_to_string(const Rat& x);

// If q >= 0 is the square of a rational, stores that (non-negative) root and
// returns true.
bool rat_sqrt_exact(const Rat& q, Rat& root);

struct UnsupportedFormError : std::domain_error {
  using std::domain_error::domain_error;
};

// Exact sign of a + b*sqrt(q). Requires q >= 0 (std::domain_error otherwise).
// Decided by sign bookkeeping and at most one squaring; returns 0 exactly
// when the value is zero, which happens routinely at designed tangencies.
int sign_single_radical(const Rat& a, const Rat& b, const Rat& q);

// Exact sign of a + b*sqrt(u) + c*sqrt(v). Requires u, v >= 0. Case analysis
// plus at most two squarings.
int sign_two_radicals(const Rat& a, const Rat& b, const Rat& u, const Rat& c,
                      const Rat& v);

// Value a + b*sqrt(q) over rationals. Normal form: a pure rational is stored
// with b = 0, q = 0; a perfect-square radicand is folded into a. Keeping the
// radicand canonical makes equality of forms structural.
struct RadExpr {
  Rat a, b, q;

  RadExpr() : a(0), b(0), q(0) {}
  static RadExpr rational(const Rat& x);
  static RadExpr make(const Rat& a, const Rat& b, const Rat& q);

  bool is_rational() const { return sgn(b) == 0; }

  // Addition requires a shared radicand or a rational side; two distinct
  // irrational radicands raise UnsupportedFormError (use sign_two_radicals
  // on the flattened expression instead).
  RadExpr add(const RadExpr& other) const;
  RadExpr sub(const RadExpr& other) const;
  RadExpr scale(const Rat& s) const;
  RadExpr neg() const;
  // Product, same shared-radicand restriction as add.
  RadExpr mul(const RadExpr& other) const;

  int sign() const;
  // Sign of *this - other; distinct radicands are fine here.
  int compare(const RadExpr& other) const;
  bool operator==(const RadExpr& other) const;
};

// One coordinate of a ball center: either rational or c*sqrt(q) with q not a
// perfect square (a perfect square collapses to the rational form on
// construction).
struct Coord {
  bool rational = true;
  Rat r;     // value when rational
  Rat c, q;  // value c*sqrt(q) otherwise

  static Coord of(const Rat& value);
  static Coord pure_sqrt(const Rat& c, const Rat& q);

  RadExpr as_radexpr() const;
  // (x - y)^2 as a RadExpr; the radicand is q_x * q_y when both sides carry
  // roots, so the result always stays within single-radical form.
  static RadExpr diff_sq(const Coord& x, const Coord& y);

  bool operator==(const Coord& other) const;
};

std::string coord_debug(const Coord& c);

}  // namespace dsg
