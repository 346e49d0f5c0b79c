#include <doctest.h>

#include <padchar/arith.hpp>

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <vector>

using namespace padchar;

namespace {

// All prime powers p^k <= bound with p odd.
std::vector<long long> odd_prime_powers(long long bound) {
  std::vector<long long> out;
  for (long long q = 3; q <= bound; q += 2) {
    try {
      factor_prime_power(q);
      out.push_back(q);
    } catch (const ValidationError&) {
    }
  }
  return out;
}

std::vector<FqElem> all_elements(const Fq& f) {
  std::vector<FqElem> out;
  for (long long n = 0; n < f.q(); ++n) out.push_back(fq_nth(f, n));
  return out;
}

std::vector<FqElem> nonzero_elements(const Fq& f) {
  auto out = all_elements(f);
  out.erase(out.begin());  // index 0 is zero
  return out;
}

long long element_order(const FqElem& x) {
  FqElem acc = x;
  long long ord = 1;
  while (!(acc == fq_one(x.field))) {
    acc = fq_mul(acc, x);
    ++ord;
  }
  return ord;
}

// Independent irreducibility oracle: trial division by every monic
// polynomial of degree 1..k/2.
bool oracle_irreducible(const std::vector<long long>& f, long long p) {
  const int k = static_cast<int>(f.size()) - 1;
  if (k == 1) return true;
  for (int d = 1; 2 * d <= k; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long n = 0; n < count; ++n) {
      std::vector<long long> g(d + 1, 0);
      g[d] = 1;
      long long rest = n;
      for (int i = 0; i < d; ++i) {
        g[i] = rest % p;
        rest /= p;
      }
      // long-divide f by g, check remainder
      std::vector<long long> r = f;
      while (static_cast<int>(r.size()) - 1 >= d) {
        const long long coef = r.back();
        const int shift = static_cast<int>(r.size()) - 1 - d;
        for (int i = 0; i <= d; ++i) {
          long long& slot = r[i + shift];
          slot = ((slot - coef * g[i]) % p + p) % p;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
      }
      if (r.empty()) return false;
    }
  }
  return true;
}

// Independent canonical-modulus oracle: first irreducible in the documented
// order (coefficient vectors low-degree first, constant term most significant).
std::vector<long long> oracle_canonical_modulus(long long p, int k) {
  long long count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (long long n = 0; n < count; ++n) {
    std::vector<long long> cand(k + 1, 0);
    cand[k] = 1;
    long long rest = n;
    for (int i = k - 1; i >= 0; --i) {
      cand[i] = rest % p;
      rest /= p;
    }
    if (oracle_irreducible(cand, p)) return cand;
  }
  return {};
}

Depth random_depth(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12), plus(0, 1);
  return Depth{Rational(num(rng), den(rng)), plus(rng) == 1, false};
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rational_str(parse_rational("3/6")) == "1/2");
  CHECK(rational_str(parse_rational("-4/6")) == "-2/3");
  CHECK(rational_str(parse_rational("7")) == "7");
  CHECK(rational_str(parse_rational("  -7 / 2 ")) == "-7/2");
  CHECK(rational_str(parse_rational("4/-6")) == "-2/3");
  CHECK(parse_rational("0/5") == Rational(0));
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("x"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("rational floor, ceil, integrality") {
  CHECK(floor_rational(parse_rational("7/2")) == 3);
  CHECK(ceil_rational(parse_rational("7/2")) == 4);
  CHECK(floor_rational(parse_rational("-7/2")) == -4);
  CHECK(ceil_rational(parse_rational("-7/2")) == -3);
  CHECK(floor_rational(Rational(5)) == 5);
  CHECK(ceil_rational(Rational(-5)) == -5);
  CHECK(is_integer(Rational(12)));
  CHECK(!is_integer(parse_rational("12/7")));

  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 40);
  for (int t = 0; t < 500; ++t) {
    const Rational x(num(rng), den(rng));
    const Int f = floor_rational(x), c = ceil_rational(x);
    CHECK(Rational(f) <= x);
    CHECK(x < Rational(f + 1));
    CHECK(Rational(c) >= x);
    CHECK(x > Rational(c - 1));
  }
}

TEST_CASE("depth line: order, tilde, shifts") {
  const Depth zero = Depth::of(Rational(0));
  const Depth zero_plus = Depth::of_plus(Rational(0));
  CHECK(depth_tilde(zero) == zero_plus);
  CHECK(depth_tilde(Depth::of_plus(parse_rational("3/2"))) == Depth::of(parse_rational("-3/2")));
  const Depth d = Depth::of(parse_rational("-7/3"));
  CHECK(depth_tilde(depth_tilde(d)) == d);
  CHECK_THROWS_AS(depth_tilde(Depth::infinity()), ValidationError);

  CHECK(zero < zero_plus);
  CHECK(zero_plus < Depth::of(parse_rational("1/100")));
  CHECK(Depth::of(Rational(5)) < Depth::infinity());
  CHECK(Depth::infinity() == Depth::infinity());
  CHECK(!(Depth::infinity() < Depth::infinity()));

  CHECK(zero_plus.plusified() == zero_plus);
  CHECK(zero.plusified() == zero_plus);
  CHECK(Depth::infinity().plusified() == Depth::infinity());
  CHECK(zero_plus.shifted(parse_rational("1/2")) == Depth::of_plus(parse_rational("1/2")));
  CHECK(Depth::infinity().shifted(Rational(3)) == Depth::infinity());

  std::mt19937_64 rng(77);
  for (int t = 0; t < 2000; ++t) {
    const Depth a = random_depth(rng), b = random_depth(rng);
    // total order: exactly one of <, ==, > holds
    const int rel = (a < b) + (a == b) + (b < a);
    CHECK(rel == 1);
    // tilde reverses the order
    CHECK((a < b) == (depth_tilde(b) < depth_tilde(a)));
    CHECK(depth_tilde(depth_tilde(a)) == a);
  }

  CHECK(Depth::of(parse_rational("3/2")).str() == "3/2");
  CHECK(Depth::of_plus(parse_rational("3/2")).str() == "3/2+");
  CHECK(Depth::infinity().str() == "inf");
}

TEST_CASE("canonical moduli match the documented ordering rule") {
  // Library choice vs. independent trial-division oracle.
  for (auto [p, k] : std::vector<std::pair<long long, int>>{
           {3, 1}, {3, 2}, {3, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {7, 2}, {11, 2}, {13, 2}}) {
    const Fq& f = fq_make(p, k);
    CHECK(f.modulus == oracle_canonical_modulus(p, k));
  }
  // Pinned values, so a silent ordering change cannot slip through.
  CHECK(fq_make(3, 2).modulus == std::vector<long long>{1, 0, 1});     // x^2+1
  CHECK(fq_make(5, 2).modulus == std::vector<long long>{1, 1, 1});     // x^2+x+1
  CHECK(fq_make(7, 2).modulus == std::vector<long long>{1, 0, 1});     // x^2+1
  CHECK(fq_make(3, 3).modulus == std::vector<long long>{1, 0, 2, 1});  // x^3+2x^2+1
  CHECK(fq_make(17, 1).modulus == std::vector<long long>{0, 1});       // x

  CHECK_THROWS_AS(fq_make(2, 1), ValidationError);
  CHECK_THROWS_AS(fq_make(9, 1), ValidationError);
  CHECK_THROWS_AS(fq_make(5, 0), ValidationError);
}

TEST_CASE("field axioms by exhaustion on F_9 and F_25") {
  for (long long q : {9, 25}) {
    const auto [p, k] = factor_prime_power(q);
    const Fq& f = fq_make(p, k);
    const auto elems = all_elements(f);
    REQUIRE(static_cast<long long>(elems.size()) == q);
    for (const auto& a : elems)
      for (const auto& b : elems) {
        CHECK(fq_add(a, b) == fq_add(b, a));
        CHECK(fq_mul(a, b) == fq_mul(b, a));
        CHECK(fq_sub(fq_add(a, b), b) == a);
      }
    // associativity and distributivity on a generator-rich triple sample
    for (std::size_t i = 0; i < elems.size(); ++i)
      for (std::size_t j = 0; j < elems.size(); j += 3)
        for (std::size_t l = 0; l < elems.size(); l += 5) {
          const auto &a = elems[i], &b = elems[j], &c = elems[l];
          CHECK(fq_mul(fq_mul(a, b), c) == fq_mul(a, fq_mul(b, c)));
          CHECK(fq_mul(a, fq_add(b, c)) == fq_add(fq_mul(a, b), fq_mul(a, c)));
        }
    for (const auto& a : nonzero_elements(f)) {
      CHECK(fq_mul(a, fq_inv(a)) == fq_one(f));
      CHECK(fq_pow(a, q - 1) == fq_one(f));   // Lagrange
      CHECK(fq_pow(a, -3) == fq_inv(fq_pow(a, 3)));
    }
    for (const auto& a : elems) {
      CHECK(fq_pow(a, p) == fq_frobenius(a, 1));
      CHECK(fq_frobenius(a, k) == a);  // Frobenius has order k
    }
    CHECK_THROWS_AS(fq_inv(fq_zero(f)), ValidationError);
  }
  // multiplicative group is cyclic of order q-1: some element has full order
  const Fq& f9 = fq_make(3, 2);
  bool has_generator = false;
  for (const auto& a : nonzero_elements(f9)) has_generator |= element_order(a) == 8;
  CHECK(has_generator);
}

TEST_CASE("quadratic character equals the brute-force square test") {
  for (long long q : odd_prime_powers(121)) {
    const auto [p, k] = factor_prime_power(q);
    const Fq& f = fq_make(p, k);
    std::set<std::vector<long long>> squares;
    for (const auto& y : nonzero_elements(f)) squares.insert(fq_mul(y, y).c);
    CHECK(static_cast<long long>(squares.size()) == (q - 1) / 2);
    for (const auto& x : nonzero_elements(f)) {
      const int oracle = squares.count(x.c) ? 1 : -1;
      CHECK(fq_sgn(x) == oracle);
    }
    // multiplicativity by exhaustion
    for (const auto& x : nonzero_elements(f))
      for (const auto& y : nonzero_elements(f))
        CHECK(fq_sgn(fq_mul(x, y)) == fq_sgn(x) * fq_sgn(y));
    CHECK_THROWS_AS(fq_sgn(fq_zero(f)), ValidationError);
  }

  const Fq& f5 = fq_make(5, 1);
  CHECK(fq_sgn(fq_from_int(f5, 1)) == 1);
  CHECK(fq_sgn(fq_from_int(f5, 2)) == -1);
  const Fq& f9 = fq_make(3, 2);
  for (const auto& a : nonzero_elements(f9))
    if (element_order(a) == 8) CHECK(fq_sgn(a) == -1);  // generators are non-squares
}

TEST_CASE("trace to the prime field") {
  for (long long q : {9, 27, 25, 49, 81}) {
    const auto [p, k] = factor_prime_power(q);
    const Fq& f = fq_make(p, k);
    std::map<long long, long long> hits;
    for (const auto& a : all_elements(f)) {
      const long long tr = fq_trace_abs(a);
      hits[tr]++;
      // additivity against a fixed probe
      const FqElem probe = fq_nth(f, 1 % q);
      CHECK(fq_trace_abs(fq_add(a, probe)) == (tr + fq_trace_abs(probe)) % p);
      // Frobenius invariance
      CHECK(fq_trace_abs(fq_frobenius(a, 1)) == tr);
    }
    // trace is a surjective F_p-linear form: every fiber has q/p points
    for (long long v = 0; v < p; ++v) CHECK(hits[v] == q / p);
    // constants have trace k*c
    for (long long c = 0; c < p; ++c)
      CHECK(fq_trace_abs(fq_from_int(f, c)) == (k * c) % p);
  }
}

TEST_CASE("norms down to subfields") {
  // (big q, subfield degree)
  for (auto [q, d] : std::vector<std::pair<long long, int>>{
           {9, 1}, {27, 1}, {25, 1}, {49, 1}, {81, 1}, {81, 2}, {729, 2}, {729, 3}}) {
    const auto [p, k] = factor_prime_power(q);
    const Fq& f = fq_make(p, k);
    const Fq& sub = fq_make(p, d);
    const long long qsub = sub.q();
    const long long rel = (q - 1) / (qsub - 1);

    std::map<std::vector<long long>, long long> fibers;
    std::vector<FqElem> sample = nonzero_elements(f);
    for (const auto& x : sample) {
      const FqElem nx = fq_norm(x, d);
      CHECK(nx.field == sub);
      fibers[nx.c]++;
      // norm is Galois-stable inside the big field
      const FqElem in_field = fq_norm_in_field(x, d);
      CHECK(fq_frobenius(in_field, d) == in_field);
    }
    // multiplicative group surjects with equal fibers of size (q-1)/(qsub-1)
    CHECK(static_cast<long long>(fibers.size()) == qsub - 1);
    for (const auto& [val, count] : fibers) CHECK(count == rel);
    CHECK(fq_norm(fq_zero(f), d) == fq_zero(sub));
    CHECK(fq_norm(fq_one(f), d) == fq_one(sub));

    // multiplicativity on a stride sample (full exhaustion is quadratic)
    for (std::size_t i = 0; i < sample.size(); i += 7)
      for (std::size_t j = 0; j < sample.size(); j += 11)
        CHECK(fq_norm(fq_mul(sample[i], sample[j]), d) ==
              fq_mul(fq_norm(sample[i], d), fq_norm(sample[j], d)));

    if (d == 1) {
      // constants: N(c) = c^k, an independent closed form
      for (long long c = 1; c < p; ++c) {
        long long expect = 1;
        for (int i = 0; i < k; ++i) expect = expect * c % p;
        CHECK(fq_norm(fq_from_int(f, c), 1) == fq_from_int(sub, expect));
      }
    }
  }
  // sharp cases from the interface contract
  const Fq& f9 = fq_make(3, 2);
  for (const auto& x : all_elements(f9))
    CHECK(fq_norm_in_field(x, 1) == fq_pow(x, 4));  // x * x^3
  for (const auto& g : nonzero_elements(f9))
    if (element_order(g) == 8)
      CHECK(fq_norm(g, 1) == fq_from_int(fq_make(3, 1), 2));  // generator maps to generator
  CHECK_THROWS_AS(fq_norm(fq_one(f9), 3), ValidationError);
}

TEST_CASE("norm-one sign character equals the brute-force character") {
  for (long long q0 : {3, 5, 7, 9, 11}) {
    const auto [p, k0] = factor_prime_power(q0);
    const Fq& f = fq_make(p, 2 * k0);

    // norm-one subgroup, by exhaustion
    std::vector<FqElem> kernel;
    for (const auto& x : nonzero_elements(f))
      if (fq_pow(x, q0 + 1) == fq_one(f)) kernel.push_back(x);
    REQUIRE(static_cast<long long>(kernel.size()) == q0 + 1);

    // the unique nontrivial {+-1}-character kills exactly the squares
    std::set<std::vector<long long>> sq;
    for (const auto& y : kernel) sq.insert(fq_mul(y, y).c);
    REQUIRE(static_cast<long long>(sq.size()) == (q0 + 1) / 2);

    bool nontrivial = false;
    for (const auto& x : kernel) {
      const int oracle = sq.count(x.c) ? 1 : -1;
      CHECK(fq_norm_one_sgn(x) == oracle);
      nontrivial |= oracle == -1;
    }
    CHECK(nontrivial);
    for (const auto& x : kernel)
      for (const auto& y : kernel)
        CHECK(fq_norm_one_sgn(fq_mul(x, y)) == fq_norm_one_sgn(x) * fq_norm_one_sgn(y));

    // norm-one elements of full order q0+1 are non-squares in the subgroup
    for (const auto& x : kernel)
      if (element_order(x) == q0 + 1) CHECK(fq_norm_one_sgn(x) == -1);

    // -1 is the square of any order-4 element of the kernel, hence in the
    // character's kernel whenever 4 | q0+1
    const FqElem minus_one = fq_neg(fq_one(f));
    if ((q0 + 1) % 4 == 0) CHECK(fq_norm_one_sgn(minus_one) == 1);

    // some element always lies outside the norm-one subgroup
    for (const auto& x : nonzero_elements(f))
      if (!(fq_pow(x, q0 + 1) == fq_one(f))) {
        CHECK_THROWS_AS(fq_norm_one_sgn(x), ValidationError);
        break;
      }
  }
  CHECK(fq_norm_one_sgn(fq_one(fq_make(3, 2))) == 1);
  CHECK_THROWS_AS(fq_norm_one_sgn(fq_one(fq_make(3, 3))), ValidationError);  // odd degree
}

TEST_CASE("gauss sums match direct complex summation") {
  const double pi = std::acos(-1.0);
  for (long long q : odd_prime_powers(2000)) {
    const auto [p, k] = factor_prime_power(q);
    const Fq& f = fq_make(p, k);
    std::complex<double> raw(0, 0);
    for (long long n = 0; n < q; ++n) {
      const FqElem t = fq_nth(f, n);
      const long long tr = fq_trace_abs(fq_mul(t, t));
      const double angle = 2.0 * pi * static_cast<double>(tr) / static_cast<double>(p);
      raw += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    CHECK(std::abs(std::abs(raw) - std::sqrt(static_cast<double>(q))) < 1e-9);
    const std::complex<double> normalized = raw / std::sqrt(static_cast<double>(q));
    const FourthRoot g = gauss_sum(q);
    static const std::complex<double> table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    CHECK(std::abs(normalized - table[g.ipow()]) < 1e-9);
  }

  CHECK(gauss_sum(3) == FourthRoot::i());
  CHECK(gauss_sum(5) == FourthRoot::one());
  CHECK(gauss_sum(9) == FourthRoot::one());
  CHECK(gauss_sum(25) == FourthRoot::minus_one());
  CHECK(gauss_sum(27) == FourthRoot::minus_i());
  CHECK(gauss_sum(49) == FourthRoot::one());
  CHECK_THROWS_AS(gauss_sum(8), ValidationError);
  CHECK_THROWS_AS(gauss_sum(15), ValidationError);
  CHECK_THROWS_AS(gauss_sum(1), ValidationError);
}

TEST_CASE("fourth roots of unity form the expected group") {
  const auto one = FourthRoot::one(), i = FourthRoot::i();
  const auto m1 = FourthRoot::minus_one(), mi = FourthRoot::minus_i();
  CHECK(i * i == m1);
  CHECK(i * mi == one);
  CHECK(m1 * m1 == one);
  CHECK(i.pow(4) == one);
  CHECK(i.pow(-1) == mi);
  CHECK(i.pow(7) == mi);
  CHECK(mi.pow(2) == m1);
  CHECK(one / i == mi);
  CHECK(m1.negated() == one);
  CHECK(FourthRoot::from_sign(-1) == m1);
  CHECK_THROWS_AS(FourthRoot::from_sign(0), ValidationError);

  CHECK(one.is_real());
  CHECK(!i.is_real());
  CHECK(one.real_sign() == 1);
  CHECK(m1.real_sign() == -1);
  CHECK_THROWS_AS(i.real_sign(), ValidationError);

  for (const auto& f : {one, i, m1, mi}) CHECK(FourthRoot::parse(f.str()) == f);
  CHECK(FourthRoot::parse("1") == one);
  CHECK(FourthRoot::parse("i") == i);
  CHECK_THROWS_AS(FourthRoot::parse("2"), ValidationError);
}

TEST_CASE("gaussian rationals: arithmetic and round-trip formatting") {
  const QI a(parse_rational("1/2"), parse_rational("-3/4"));
  const QI b(parse_rational("2"), parse_rational("1/4"));
  CHECK(a + b == QI(parse_rational("5/2"), parse_rational("-1/2")));
  CHECK(a - a == QI::zero());
  // (1/2 - 3/4 i)(2 + 1/4 i) = 1 + 3/16 + (1/8 - 3/2) i
  CHECK(a * b == QI(parse_rational("19/16"), parse_rational("-11/8")));
  CHECK(a * FourthRoot::i() == QI(parse_rational("3/4"), parse_rational("1/2")));
  CHECK(QI::of(FourthRoot::minus_i()) == QI(Rational(0), Rational(-1)));

  for (const std::string s : {"0", "1", "-1", "i", "-i", "3/2", "-3/2 + i", "1/2 - 5/3i",
                              "-7i", "2 + 2i"}) {
    const QI v = parse_qi(s);
    CHECK(qi_str(v) == s);
    CHECK(parse_qi(qi_str(v)) == v);
  }
  CHECK(parse_qi("3/2+1/2i") == QI(parse_rational("3/2"), parse_rational("1/2")));
  CHECK(parse_qi(" - i ") == QI(Rational(0), Rational(-1)));
  CHECK_THROWS_AS(parse_qi(""), ValidationError);
  CHECK_THROWS_AS(parse_qi("1+"), ValidationError);
  CHECK_THROWS_AS(parse_qi("j"), ValidationError);
}

TEST_CASE("prime power factoring") {
  CHECK(factor_prime_power(3) == std::make_pair(3LL, 1));
  CHECK(factor_prime_power(729) == std::make_pair(3LL, 6));
  CHECK(factor_prime_power(1999) == std::make_pair(1999LL, 1));
  CHECK(factor_prime_power(1849) == std::make_pair(43LL, 2));
  CHECK_THROWS_AS(factor_prime_power(45), ValidationError);
  CHECK_THROWS_AS(factor_prime_power(4), ValidationError);
}
