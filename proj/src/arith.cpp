#include "padchar/arith.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <utility>

namespace padchar {

// ---- Rational helpers ------------------------------------------------------

namespace {

bool is_signed_digits(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

Int parse_int(const std::string& s) {
  if (!is_signed_digits(s)) throw ValidationError("bad integer literal: '" + s + "'");
  return Int(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(parse_int(s));
  Int num = parse_int(s.substr(0, slash));
  Int den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in '" + raw + "'");
  if (den < 0) {  // the bigint rational constructor insists on den > 0
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

std::string rational_str(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Int floor_rational(const Rational& q) {
  const Int num = boost::multiprecision::numerator(q);
  const Int den = boost::multiprecision::denominator(q);
  Int t = num / den;  // truncates toward zero
  if (num < 0 && t * den != num) --t;
  return t;
}

Int ceil_rational(const Rational& q) { return -floor_rational(-q); }

bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

long long to_ll(const Int& n) {
  if (n > std::numeric_limits<long long>::max() || n < std::numeric_limits<long long>::min())
    throw ValidationError("integer out of machine range: " + n.str());
  return n.convert_to<long long>();
}

// ---- Depth -----------------------------------------------------------------

bool Depth::operator==(const Depth& o) const {
  if (infinite || o.infinite) return infinite == o.infinite;
  return value == o.value && plus == o.plus;
}

bool Depth::operator<(const Depth& o) const {
  if (infinite) return false;
  if (o.infinite) return true;
  if (value != o.value) return value < o.value;
  return !plus && o.plus;
}

Depth Depth::plusified() const {
  if (infinite) return *this;
  return Depth{value, true, false};
}

Depth Depth::shifted(const Rational& s) const {
  if (infinite) return *this;
  return Depth{value + s, plus, false};
}

std::string Depth::str() const {
  if (infinite) return "inf";
  return rational_str(value) + (plus ? "+" : "");
}

Depth depth_tilde(const Depth& d) {
  if (d.infinite) throw ValidationError("depth tilde undefined at infinity");
  if (d.plus) return Depth::of(-d.value);
  return Depth::of_plus(-d.value);
}

// ---- Finite fields ---------------------------------------------------------

namespace {

using Poly = std::vector<long long>;  // low-degree first, possibly with zero top

long long normmod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

void ptrim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const Poly& a) { return static_cast<int>(a.size()) - 1; }  // -1 for zero

Poly pmul(const Poly& a, const Poly& b, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

long long inv_mod_p(long long a, long long p) {
  // Fermat; p is prime and a != 0 mod p.
  long long r = 1, b = normmod(a, p), e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// a mod m, destructive on a copy.
Poly pmod(Poly a, const Poly& m, long long p) {
  ptrim(a);
  const int dm = pdeg(m);
  const long long lead_inv = inv_mod_p(m.back(), p);
  while (pdeg(a) >= dm) {
    const long long coef = a.back() * lead_inv % p;
    const int shift = pdeg(a) - dm;
    for (int i = 0; i <= dm; ++i)
      a[i + shift] = normmod(a[i + shift] - coef * m[i], p);
    ptrim(a);
  }
  return a;
}

Poly pgcd(Poly a, Poly b, long long p) {
  ptrim(a);
  ptrim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// x^e mod m
Poly pxpow(long long e, const Poly& m, long long p) {
  Poly result{1};
  Poly base{0, 1};
  base = pmod(base, m, p);
  while (e) {
    if (e & 1) result = pmod(pmul(result, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return result;
}

bool poly_irreducible(const Poly& f, long long p, int k) {
  if (k == 1) return true;
  // f (monic, degree k) is irreducible iff it shares no factor with
  // x^{p^d} - x for any d <= k/2, since a nontrivial factorization must
  // contain an irreducible factor of such a degree.
  long long pd = 1;
  for (int d = 1; 2 * d <= k; ++d) {
    pd *= p;
    Poly g = pxpow(pd, f, p);
    // g - x
    if (g.size() < 2) g.resize(2, 0);
    g[1] = normmod(g[1] - 1, p);
    ptrim(g);
    Poly h = pgcd(f, g, p);
    if (pdeg(h) >= 1) return false;
  }
  return true;
}

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

long long pow_checked(long long base, int exp) {
  Int v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return to_ll(v);
}

long long Fq::q() const { return pow_checked(p, k); }

const Fq& fq_make(long long p, int k) {
  static std::map<std::pair<long long, int>, Fq> cache;
  const auto key = std::make_pair(p, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  if (!is_odd_prime(p)) throw ValidationError("field characteristic must be an odd prime, got " + std::to_string(p));
  if (p > 3000000) throw ValidationError("residue characteristic too large");
  if (k < 1) throw ValidationError("field degree must be positive");
  pow_checked(p, k);  // reject overflowing cardinalities up front

  // Canonical modulus: the lexicographically smallest monic irreducible of
  // degree k, comparing coefficient vectors low-degree first.  Enumerate in
  // that order by treating the constant term as the most significant digit.
  const long long count = pow_checked(p, k);
  Fq f;
  f.p = p;
  f.k = k;
  for (long long n = 0; n < count; ++n) {
    Poly cand(k + 1, 0);
    cand[k] = 1;
    long long rest = n;
    for (int i = k - 1; i >= 0; --i) {  // constant coefficient = most significant digit
      cand[i] = rest % p;
      rest /= p;
    }
    if (poly_irreducible(cand, p, k)) {
      f.modulus = cand;
      break;
    }
  }
  if (f.modulus.empty()) throw ValidationError("no irreducible modulus found");  // unreachable
  return cache.emplace(key, std::move(f)).first->second;
}

bool FqElem::operator==(const FqElem& o) const { return field == o.field && c == o.c; }

bool FqElem::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](long long x) { return x == 0; });
}

std::string FqElem::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

FqElem fq_zero(const Fq& f) { return FqElem{f, std::vector<long long>(f.k, 0)}; }

FqElem fq_one(const Fq& f) { return fq_from_int(f, 1); }

FqElem fq_from_int(const Fq& f, long long n) {
  FqElem e = fq_zero(f);
  e.c[0] = normmod(n, f.p);
  return e;
}

FqElem fq_from_coeffs(const Fq& f, const std::vector<long long>& coeffs) {
  if (static_cast<int>(coeffs.size()) > f.k)
    throw ValidationError("coefficient vector longer than field degree");
  FqElem e = fq_zero(f);
  for (std::size_t i = 0; i < coeffs.size(); ++i) e.c[i] = normmod(coeffs[i], f.p);
  return e;
}

namespace {
void check_same_field(const FqElem& a, const FqElem& b) {
  if (a.field != b.field) throw ValidationError("field mismatch in arithmetic");
}
}  // namespace

FqElem fq_add(const FqElem& a, const FqElem& b) {
  check_same_field(a, b);
  FqElem r = a;
  for (int i = 0; i < a.field.k; ++i) r.c[i] = normmod(a.c[i] + b.c[i], a.field.p);
  return r;
}

FqElem fq_neg(const FqElem& a) {
  FqElem r = a;
  for (int i = 0; i < a.field.k; ++i) r.c[i] = normmod(-a.c[i], a.field.p);
  return r;
}

FqElem fq_sub(const FqElem& a, const FqElem& b) { return fq_add(a, fq_neg(b)); }

FqElem fq_mul(const FqElem& a, const FqElem& b) {
  check_same_field(a, b);
  Poly prod = pmul(a.c, b.c, a.field.p);
  prod = pmod(prod, a.field.modulus, a.field.p);
  prod.resize(a.field.k, 0);
  return FqElem{a.field, std::move(prod)};
}

FqElem fq_inv(const FqElem& a) {
  if (a.is_zero()) throw ValidationError("inverse of zero");
  // Extended Euclid over F_p[x]: find u with a*u = 1 mod modulus.
  const long long p = a.field.p;
  Poly r0 = a.field.modulus, r1 = a.c;
  ptrim(r1);
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    // quotient of r0 by r1
    Poly q;
    Poly rem = r0;
    ptrim(rem);
    const int d1 = pdeg(r1);
    const long long lead_inv = inv_mod_p(r1.back(), p);
    q.assign(std::max<int>(pdeg(rem) - d1 + 1, 0), 0);
    while (pdeg(rem) >= d1) {
      const long long coef = rem.back() * lead_inv % p;
      const int shift = pdeg(rem) - d1;
      q[shift] = coef;
      for (int i = 0; i <= d1; ++i)
        rem[i + shift] = normmod(rem[i + shift] - coef * r1[i], p);
      ptrim(rem);
    }
    Poly qt1 = pmul(q, t1, p);
    Poly t2 = t0;
    t2.resize(std::max(t2.size(), qt1.size()), 0);
    for (std::size_t i = 0; i < qt1.size(); ++i) t2[i] = normmod(t2[i] - qt1[i], p);
    ptrim(t2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  // r0 = gcd, a unit scalar (a is invertible mod an irreducible modulus)
  if (pdeg(r0) != 0) throw ValidationError("non-invertible element");  // unreachable
  const long long scale = inv_mod_p(r0[0], p);
  Poly u = t0;
  for (auto& x : u) x = x * scale % p;
  u.resize(a.field.k, 0);
  return FqElem{a.field, std::move(u)};
}

FqElem fq_pow(const FqElem& a, long long e) {
  if (e < 0) return fq_pow(fq_inv(a), -e);
  FqElem result = fq_one(a.field);
  FqElem base = a;
  while (e) {
    if (e & 1) result = fq_mul(result, base);
    base = fq_mul(base, base);
    e >>= 1;
  }
  return result;
}

FqElem fq_frobenius(const FqElem& a, int m) {
  m %= a.field.k;
  if (m < 0) m += a.field.k;
  FqElem r = a;
  for (int i = 0; i < m; ++i) r = fq_pow(r, a.field.p);
  return r;
}

FqElem fq_nth(const Fq& f, long long n) {
  if (n < 0 || n >= f.q()) throw ValidationError("element index out of range");
  FqElem e = fq_zero(f);
  for (int i = 0; i < f.k; ++i) {
    e.c[i] = n % f.p;
    n /= f.p;
  }
  return e;
}

long long fq_trace_abs(const FqElem& a) {
  FqElem t = fq_zero(a.field);
  FqElem conj = a;
  for (int i = 0; i < a.field.k; ++i) {
    t = fq_add(t, conj);
    conj = fq_pow(conj, a.field.p);
  }
  for (int i = 1; i < a.field.k; ++i)
    if (t.c[i] != 0) throw ValidationError("trace did not land in the prime field");
  return t.c[0];
}

FqElem fq_norm_in_field(const FqElem& a, int d) {
  if (d < 1 || a.field.k % d != 0)
    throw ValidationError("norm subfield degree must divide the field degree");
  FqElem prod = fq_one(a.field);
  for (int i = 0; i < a.field.k / d; ++i) prod = fq_mul(prod, fq_frobenius(a, d * i));
  return prod;
}

namespace {

// Deterministic embedding of the canonical F_{p^d} into F_{p^k}: send the
// class of x to the first root (in enumeration order) of the subfield's
// modulus.  Cached per (p, k, d); returns theta^i.
const std::vector<FqElem>& theta_powers(const Fq& big, int d) {
  static std::map<std::tuple<long long, int, int>, std::vector<FqElem>> cache;
  const auto key = std::make_tuple(big.p, big.k, d);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  const Fq& sub = fq_make(big.p, d);
  FqElem theta = fq_zero(big);
  bool found = false;
  for (long long n = 0; n < big.q(); ++n) {
    const FqElem cand = fq_nth(big, n);
    // Horner evaluation of the subfield modulus at cand.
    FqElem val = fq_zero(big);
    for (int i = sub.k; i >= 0; --i)
      val = fq_add(fq_mul(val, cand), fq_from_int(big, sub.modulus[i]));
    if (val.is_zero()) {
      theta = cand;
      found = true;
      break;
    }
  }
  if (!found) throw ValidationError("subfield modulus has no root");  // unreachable
  std::vector<FqElem> powers;
  FqElem acc = fq_one(big);
  for (int i = 0; i < d; ++i) {
    powers.push_back(acc);
    acc = fq_mul(acc, theta);
  }
  return cache.emplace(key, std::move(powers)).first->second;
}

}  // namespace

FqElem fq_norm(const FqElem& a, int d) {
  const FqElem y = fq_norm_in_field(a, d);
  const Fq& sub = fq_make(a.field.p, d);
  if (d == a.field.k) return y;
  const auto& powers = theta_powers(a.field, d);
  for (long long n = 0; n < sub.q(); ++n) {
    const FqElem z = fq_nth(sub, n);
    FqElem image = fq_zero(a.field);
    for (int i = 0; i < d; ++i) {
      FqElem term = powers[i];
      for (auto& coef : term.c) coef = coef * z.c[i] % a.field.p;
      image = fq_add(image, term);
    }
    if (image == y) return z;
  }
  throw ValidationError("norm value not found in subfield image");  // unreachable
}

namespace {
int read_pm_one(const FqElem& s, const char* what) {
  if (s == fq_one(s.field)) return 1;
  if (s == fq_neg(fq_one(s.field))) return -1;
  throw ValidationError(std::string(what) + " did not evaluate to +1 or -1");
}
}  // namespace

int fq_sgn(const FqElem& a) {
  if (a.is_zero()) throw ValidationError("sign character undefined at zero");
  const long long q = a.field.q();
  return read_pm_one(fq_pow(a, (q - 1) / 2), "quadratic character");
}

int fq_norm_one_sgn(const FqElem& a) {
  if (a.field.k % 2 != 0)
    throw ValidationError("norm-one sign needs a field of even degree");
  const long long q0 = pow_checked(a.field.p, a.field.k / 2);
  if (!(fq_norm_in_field(a, a.field.k / 2) == fq_one(a.field)))
    throw ValidationError("element is not norm-one over the index-2 subfield");
  return read_pm_one(fq_pow(a, (q0 + 1) / 2), "norm-one sign character");
}

// ---- Fourth roots of unity --------------------------------------------------

FourthRoot FourthRoot::from_sign(int s) {
  if (s == 1) return one();
  if (s == -1) return minus_one();
  throw ValidationError("sign must be +1 or -1");
}

FourthRoot FourthRoot::pow(long long e) const {
  const long long r = ((k_ * (e % 4)) % 4 + 4) % 4;
  return FourthRoot(static_cast<int>(r));
}

int FourthRoot::real_sign() const {
  if (k_ == 0) return 1;
  if (k_ == 2) return -1;
  throw ValidationError("fourth root " + str() + " is not real");
}

std::string FourthRoot::str() const {
  static const char* names[4] = {"+1", "+i", "-1", "-i"};
  return names[k_];
}

FourthRoot FourthRoot::parse(const std::string& s) {
  if (s == "+1" || s == "1") return one();
  if (s == "-1") return minus_one();
  if (s == "+i" || s == "i") return i();
  if (s == "-i") return minus_i();
  throw ValidationError("bad fourth root of unity: '" + s + "'");
}

std::pair<long long, int> factor_prime_power(long long q) {
  if (q < 3) throw ValidationError("prime power must be an odd number >= 3");
  if (q % 2 == 0) throw ValidationError("prime power must be odd");
  long long p = 0;
  for (long long d = 3; d * d <= q; d += 2) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};  // q itself is prime
  int k = 0;
  long long rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw ValidationError(std::to_string(q) + " is not a prime power");
  return {p, k};
}

FourthRoot gauss_sum(long long q) {
  const auto [p, k] = factor_prime_power(q);
  const FourthRoot base = (p % 4 == 1) ? FourthRoot::one() : FourthRoot::i();
  FourthRoot result = base.pow(k);
  if (k % 2 == 0) result = result.negated();  // (-1)^{k-1} factor
  return result;
}

// ---- Gaussian rationals -----------------------------------------------------

QI QI::of(const FourthRoot& f) {
  switch (f.ipow()) {
    case 0: return QI(Rational(1), Rational(0));
    case 1: return QI(Rational(0), Rational(1));
    case 2: return QI(Rational(-1), Rational(0));
    default: return QI(Rational(0), Rational(-1));
  }
}

std::string qi_str(const QI& v) {
  if (v.is_zero()) return "0";
  std::string out;
  if (v.re != 0) out = rational_str(v.re);
  if (v.im != 0) {
    const Rational mag = v.im < 0 ? Rational(-v.im) : v.im;
    std::string coeff = (mag == 1) ? "i" : rational_str(mag) + "i";
    if (out.empty()) {
      out = (v.im < 0 ? "-" : "") + coeff;
    } else {
      out += (v.im < 0 ? " - " : " + ") + coeff;
    }
  }
  return out;
}

QI parse_qi(const std::string& raw) {
  const std::string s = strip_spaces(raw);
  if (s.empty()) throw ValidationError("empty Gaussian rational");
  QI total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    int sign = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sign = (s[pos] == '-') ? -1 : 1;
      ++pos;
    } else if (pos != 0) {
      throw ValidationError("missing +/- between terms in '" + raw + "'");
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw ValidationError("empty term in '" + raw + "'");
    bool imag = false;
    if (term.back() == 'i') {
      imag = true;
      term.pop_back();
      if (term.empty()) term = "1";
    }
    Rational coeff = parse_rational(term) * sign;
    if (imag)
      total.im += coeff;
    else
      total.re += coeff;
    pos = end;
  }
  return total;
}

}  // namespace padchar
