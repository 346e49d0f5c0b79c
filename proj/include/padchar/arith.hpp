#pragma once

// Exact scalar arithmetic underlying everything else:
//
//   Rational    arbitrary-precision rationals, always reduced
//   Depth       the extended depth line R ⊔ {r+ : r in R} ⊔ {infinity}
//   Fq/FqElem   odd-characteristic finite fields with deterministic moduli
//   FourthRoot  the group {+1, -1, +i, -i}, kept symbolic
//   QI          Gaussian rationals Q(i)
//
// No floating point appears anywhere in this header; tests use doubles only
// as independent oracles (e.g. direct Gauss-sum summation).

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace padchar {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Thrown when input data violates a documented precondition.  Commands map
// this to exit code 1; computation mismatches are reported separately.
struct ValidationError : std::runtime_error {
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// ---- Rational helpers ------------------------------------------------------

// Parses "n", "-n", "n/d" (d > 0 after normalization).  Throws on anything else.
Rational parse_rational(const std::string& s);

// Canonical form: "n" when the denominator is 1, else "n/d" with d > 0.
std::string rational_str(const Rational& q);

Int floor_rational(const Rational& q);
Int ceil_rational(const Rational& q);
bool is_integer(const Rational& q);

// Throws if the value does not fit in long long.
long long to_ll(const Int& n);

// base^exp with overflow detection (throws instead of wrapping).
long long pow_checked(long long base, int exp);

// ---- Depth -----------------------------------------------------------------

// A point of the extended depth line.  Finite points are r or r+ with r
// rational; "infinity" is a separate distinguished value that compares
// greater than everything (including itself only via equality).
struct Depth {
  Rational value;        // undefined when infinite
  bool plus = false;     // r+ when true
  bool infinite = false;

  static Depth of(const Rational& v) { return Depth{v, false, false}; }
  static Depth of_plus(const Rational& v) { return Depth{v, true, false}; }
  static Depth infinity() { return Depth{Rational(0), false, true}; }

  bool operator==(const Depth& o) const;
  bool operator<(const Depth& o) const;
  bool operator<=(const Depth& o) const { return *this == o || *this < o; }

  // r -> r+, r+ -> r+, infinity -> infinity.
  Depth plusified() const;

  // Shift by a rational (plus flag preserved; infinity absorbs).
  Depth shifted(const Rational& s) const;

  std::string str() const;  // "3/2", "3/2+", "inf"
};

// The order-reversing involution r ↦ (-r)+, r+ ↦ -r.  Undefined (throws) at
// infinity.
Depth depth_tilde(const Depth& d);

// ---- Finite fields ---------------------------------------------------------

// F_{p^k} for odd p, realized as F_p[x]/(m) where m is the canonical modulus:
// the lexicographically smallest monic irreducible of degree k, coefficient
// vectors compared low-degree first.  Canonicality makes every residue field
// in a scenario comparable without carrying isomorphisms around.
struct Fq {
  long long p = 0;
  int k = 0;
  std::vector<long long> modulus;  // length k+1, low-degree first, top coeff 1

  long long q() const;  // p^k; throws on overflow
  bool operator==(const Fq& o) const { return p == o.p && k == o.k; }
  bool operator!=(const Fq& o) const { return !(*this == o); }
};

// Builds (and caches) the field with the canonical modulus.  Requires p an
// odd prime and k >= 1.
const Fq& fq_make(long long p, int k);

struct FqElem {
  Fq field;
  std::vector<long long> c;  // length k, low-degree first, entries in [0, p)

  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string str() const;  // "[c0,c1,...]"
};

FqElem fq_zero(const Fq& f);
FqElem fq_one(const Fq& f);
FqElem fq_from_int(const Fq& f, long long n);
FqElem fq_from_coeffs(const Fq& f, const std::vector<long long>& coeffs);

FqElem fq_add(const FqElem& a, const FqElem& b);
FqElem fq_sub(const FqElem& a, const FqElem& b);
FqElem fq_neg(const FqElem& a);
FqElem fq_mul(const FqElem& a, const FqElem& b);
FqElem fq_inv(const FqElem& a);  // throws on zero
FqElem fq_pow(const FqElem& a, long long e);

// x ↦ x^{p^m}, the m-th power of the absolute Frobenius.
FqElem fq_frobenius(const FqElem& a, int m);

// Element with index n in the deterministic enumeration: base-p digits of n
// are the coefficients, c[0] least significant.  0 <= n < q.
FqElem fq_nth(const Fq& f, long long n);

// Absolute trace to F_p, returned as an integer in [0, p).
long long fq_trace_abs(const FqElem& a);

// Norm to the subfield of degree d (d | k): the product of the Galois
// conjugates x^{p^{d i}}.  Result is expressed in the canonical F_{p^d}.
FqElem fq_norm(const FqElem& a, int d);

// Same product, left inside the big field (used for cheap kernel checks).
FqElem fq_norm_in_field(const FqElem& a, int d);

// The quadratic-character sign x^{(q-1)/2}, read as +1 or -1.  Throws on 0.
int fq_sgn(const FqElem& a);

// The sign character of the norm-one subgroup f¹ ⊂ F_{q0²}^× (q0² = q of the
// field of a): x ↦ x^{(q0+1)/2}.  Requires even absolute degree and
// norm(a) = 1; throws otherwise.
int fq_norm_one_sgn(const FqElem& a);

// ---- Fourth roots of unity --------------------------------------------------

// The cyclic group {+1, +i, -1, -i}, stored as the exponent of i.  All the
// sign bookkeeping in the character formulas happens here; nothing is ever
// converted to floating point.
class FourthRoot {
 public:
  FourthRoot() : k_(0) {}

  static FourthRoot one() { return FourthRoot(0); }
  static FourthRoot i() { return FourthRoot(1); }
  static FourthRoot minus_one() { return FourthRoot(2); }
  static FourthRoot minus_i() { return FourthRoot(3); }
  static FourthRoot from_sign(int s);

  FourthRoot operator*(const FourthRoot& o) const { return FourthRoot(k_ + o.k_); }
  FourthRoot operator/(const FourthRoot& o) const { return FourthRoot(k_ - o.k_ + 8); }
  FourthRoot pow(long long e) const;
  FourthRoot negated() const { return FourthRoot(k_ + 2); }

  bool operator==(const FourthRoot& o) const { return k_ == o.k_; }
  bool operator!=(const FourthRoot& o) const { return k_ != o.k_; }

  bool is_real() const { return k_ % 2 == 0; }
  int real_sign() const;  // +1/-1; throws when imaginary

  std::string str() const;  // "+1", "-1", "+i", "-i"
  static FourthRoot parse(const std::string& s);

  int ipow() const { return k_; }

 private:
  explicit FourthRoot(int k) : k_(((k % 4) + 4) % 4) {}
  int k_;  // value is i^k_
};

// Normalized quadratic Gauss sum q^{-1/2} Σ_t ψ(t²) over F_q, ψ the additive
// character exp(2πi·/p) composed with the absolute trace.  Computed by the
// Hasse–Davenport closed form: over F_p it is +1 (p ≡ 1 mod 4) or +i
// (p ≡ 3 mod 4); over F_{p^k} it is (-1)^{k-1} times the k-th power.
FourthRoot gauss_sum(long long q);

// Splits q into (p, k) with p an odd prime; throws if q is not such a power.
std::pair<long long, int> factor_prime_power(long long q);

// ---- Gaussian rationals -----------------------------------------------------

struct QI {
  Rational re;
  Rational im;

  QI() = default;
  QI(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  static QI zero() { return QI(); }
  static QI of(const Rational& r) { return QI(r, Rational(0)); }
  static QI of(const FourthRoot& f);

  QI operator+(const QI& o) const { return QI(re + o.re, im + o.im); }
  QI operator-(const QI& o) const { return QI(re - o.re, im - o.im); }
  QI operator*(const QI& o) const {
    return QI(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  QI operator*(const FourthRoot& f) const { return *this * of(f); }
  bool operator==(const QI& o) const { return re == o.re && im == o.im; }
  bool operator!=(const QI& o) const { return !(*this == o); }
  bool is_zero() const { return re == 0 && im == 0; }
};

// Canonical form "a/b + c/d i" (pieces dropped when zero, "0" when both are).
std::string qi_str(const QI& v);
QI parse_qi(const std::string& s);

}  // namespace padchar
