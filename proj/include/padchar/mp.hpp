#pragma once

// Function-indexed lattice cardinalities at a point of the apartment.  A
// depth function assigns a cutoff to the zero weight and to every root
// orbit; the associated lattice is the direct sum of the filtered pieces,
// so quotient cardinalities are products of per-orbit coset counts.  On top
// of that sit the product formula relating a quotient to its plus-shifted
// companion, and the two index products that enter the character constants.

#include <padchar/disc.hpp>
#include <padchar/signs.hpp>

namespace padchar {

// f on Gamma\(Root ∪ {0}): a depth per orbit plus one at the zero weight.
// An infinite value means the corresponding summand is omitted entirely.
struct DepthFunction {
  Depth torus_value;               // value at the zero weight
  std::map<std::string, Depth> at; // keyed by orbit id, total over the orbit set

  const Depth& of(const std::string& orbit_id) const;  // throws if missing
  DepthFunction plusified() const;                     // f+
};

// Constant function: the same root value on every orbit.
DepthFunction constant_function(const OrbitSet& os, const Depth& torus,
                                const Depth& root);

std::vector<std::string> validate_function(const DepthFunction& f, const OrbitSet& os);

// True iff f(a) == f(-a) for every orbit.
bool pm_invariant(const DepthFunction& f, const OrbitSet& os);

// One filtration line of the torus Lie algebra: jumps on coset + (1/e)Z,
// each jump quotient of size q_line.
struct TorusLine {
  Rational coset;
  long long e = 1;
  long long q_line = 0;
};

struct TorusLattice {
  std::vector<TorusLine> lines;

  // the default model: rank lines jumping on Z with residue size q
  static TorusLattice unramified(long long rank, long long q);
};

// A cardinality kept in factored form: product of base^exponent over prime
// power bases (exponents may be negative for index ratios).  Kept symbolic
// so that q-power identities can be compared without overflow.
struct CardLedger {
  std::map<long long, long long> exponents;  // base -> nonzero exponent

  void mul(long long base, long long expo);  // multiply by base^expo
  CardLedger times(const CardLedger& o) const;
  CardLedger inverse() const;

  // Exponent of p once every base is rewritten as a power of p; throws if a
  // base is not a p-power.  Two ledgers describe the same cardinality iff
  // their p-exponents agree.
  long long p_exponent(long long p) const;

  bool operator==(const CardLedger& o) const { return exponents == o.exponents; }
  bool operator!=(const CardLedger& o) const { return !(*this == o); }
  std::string str() const;  // "3^4 * 9^-2", "1" when empty
};

// |g_{x,f:g}|: orbit w with f(w) finite contributes q_w raised to the number
// of points of ord_x(w) in [f(w), g(w)); each torus line counts the zero
// weight interval the same way.  Requires f <= g pointwise and g finite
// wherever f is finite (throws otherwise).
CardLedger card_quotient(const ApartmentPoint& pt, const OrbitSet& os,
                         const DepthFunction& f, const DepthFunction& g,
                         const TorusLattice& tl);

// The product formula: |g_{x,f:g}| * |g_{x,f+:g+}| equals the two torus
// interval counts times q^{n_w [(g(w)+g(-w)) - (f(w)+f(-w))]} over orbits
// with f finite (each root of the orbit contributing once).  Validates the
// hypotheses -- plus-free values, f <= g, negation-symmetric finiteness,
// g finite where f is, and f(a)+f(-a), g(a)+g(-a) in Z_a -- throwing with
// the failed clause, then evaluates both sides; true on every valid input.
bool verify_gxf_card(const ApartmentPoint& pt, const OrbitSet& os,
                     const DepthFunction& f, const DepthFunction& g,
                     const TorusLattice& tl, const ResidueField& rf);

// f + r for per-orbit shifts r_w in (1/e_w)Z (the zero weight is unshifted;
// infinite values absorb).  Orbits missing from the map shift by zero.
DepthFunction shifted_function(const DepthFunction& f,
                               const std::map<std::string, Rational>& shifts,
                               const OrbitSet& os);

// Valuation of the determinant of the rescaling that realizes the shift:
// sum of n_w * r_w over orbits with f(w) finite.
Rational shift_valuation(const DepthFunction& f,
                         const std::map<std::string, Rational>& shifts,
                         const OrbitSet& os);

// The dual pair entry: g~(a) = tilde(g(-a)) when finite, infinity otherwise,
// and tilde at the zero weight.  |g_{x,f:g}| = |g_{x,g~:f~}|.
DepthFunction dual_function(const DepthFunction& f, const OrbitSet& os);

// Both evaluations of an index-product identity: the bracket side computed
// by coset counting and the closed form.  Construction throws if they
// disagree, so holding one is itself the certificate.
struct IndexProduct {
  CardLedger lhs;
  CardLedger rhs;
};

// The index product attached to the centralizer pair at depth r:
//   [bracket : T_{0+} G_{x,r/2}] * [bracket+ : T_{0+} G_{x,(r/2)+}]
// computed with the cutoff 0+ on centralizer orbits and (r - d)/2 off them,
// against the closed form |t_{0:0+}| |h_{x,0:0+}|^{-1} q^{r #Root_H} q^{v}
// where v is the discriminant valuation of the head of gamma.  Requires a
// bounded element and r > 0.
IndexProduct index_product_const(const SignContext& ctx, const TorusLattice& tl);

// The (G, G') ratio of the same index products, against the closed form
// |h_{x,0:0+}|^{-1} |h'_{x,0:0+}| q^{r #(Root_H \ Root_H')} q^{v - v'} with
// v, v' the head discriminant valuations of G and of the Levi.
IndexProduct index_product_cor(const SignContext& ctx, const TorusLattice& tl);

}  // namespace padchar
