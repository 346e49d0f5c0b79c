#pragma once

// The fourth-root-of-unity calculus attached to a generic pair: apartment
// root sets at the half depths, orbit-counting signs, quadratic-character
// signs on depth-zero residues, the parity sign of the covector pairing, and
// the ramified Weil factors, all layered over the four groups G, G', H, H'
// and assembled into the quotient signs that multiply the character formula.

#include <padchar/apartment.hpp>
#include <padchar/elements.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace padchar {

// Auditable per-orbit inputs for the ramified Weil factor, supplied only for
// symmetric-ramified orbits of the pair root set:
//   w_unit        unit residue contributed by the norm of the square root
//                 w_alpha used to split the pairing (a choice; recorded so
//                 sensitivity can be audited, default 1),
//   rank_pm       absolute rank of the rank-one subgroup generated by the
//                 (+-alpha)-root subgroups, over its field of definition,
//   kottwitz_sign the sign attached to that group by the classification
//                 convention; an explicit input, never guessed.
struct RamifiedExtras {
  FqElem w_unit;
  long long rank_pm = 1;
  int kottwitz_sign = 1;
};

// Everything a sign evaluation reads: the orbit structure, a point x, the
// cut depth r, the element and covector profiles, ramified extras, and the
// declared split ranks of the four groups.
struct SignContext {
  RootDatum rd;
  GaloisModel gm;
  OrbitSet os;
  ResidueField rf;
  ApartmentPoint x;
  Rational r;
  ElementProfile gamma;
  CovectorProfile cov;
  std::map<std::string, RamifiedExtras> ram;
  long long rk_G = 0;
  long long rk_Gprime = 0;
  long long rk_H = 0;
  long long rk_Hprime = 0;
};

// Diagnostics (empty means valid): profile and covector validity, matching
// depths, point totality, placement and contents of the ramified extras, and
// rank sanity.
std::vector<std::string> validate_context(const SignContext& ctx);

// The three apartment root sets, as sets of orbit ids:
//   at_half_r        r/2 in ord_x(alpha)
//   at_half_r_minus  alpha(gamma) != 1 and (r - d_alpha)/2 in ord_x(alpha)
//   of_pair          at_half_r_minus minus the Levi subset
struct RootSets {
  std::set<std::string> at_half_r;
  std::set<std::string> at_half_r_minus;
  std::set<std::string> of_pair;
};
RootSets root_sets(const SignContext& ctx);

// The four groups whose root subsystems the level signs run over: all
// orbits, the Levi subset, the centralizer orbits (d >= r), and their
// intersection.
enum class Level { G, Gprime, H, Hprime };
std::string level_str(Level l);  // "G", "G'", "H", "H'"
std::set<std::string> level_orbits(const SignContext& ctx, Level l);

// (-1)^(number of Galois orbits of the level's slice of at_half_r_minus).
int tilde_e(const SignContext& ctx, Level l);

// Product over symmetric-unramified Galois orbits of the level's slice of
// at_half_r of the norm-one sign character of the depth-zero residue
// (depth > 0 contributes +1).  Throws when a depth-zero residue is not
// norm-one.
int eps_unram(const SignContext& ctx, Level l);

// Product over nonsymmetric +-pairs meeting the level's slice of at_half_r
// of the quadratic character of the depth-zero residue; one factor per pair
// (the two members have equal sign).
int eps_nosymm(const SignContext& ctx, Level l);

int eps_noram(const SignContext& ctx, Level l);  // the product of the two

// The quotient pairs the remaining signs are defined on directly.
enum class Quotient { GG, HH, Pi };  // G/G', H/H', and their ratio

// Product over individual roots alpha outside the Levi (restricted to the
// centralizer for HH) with alpha(gamma) != 1 of (-1)^(e_alpha (r - d_alpha)).
// Throws when an exponent is not an integer.
int e_quot(const SignContext& ctx, Quotient which);

// Product over symmetric-ramified Galois orbits of the pair root set
// (restricted to the centralizer for HH) of
//   (-1)^(rank_pm - 1) * (-G)^f_alpha * sgn(t_alpha) * kottwitz_sign,
// where G is the Gauss sum of the base residue field and t_alpha is the
// residue of (e_alpha/2) * N(w_alpha) * d alpha^vee(X*) * (alpha(gamma) - 1),
// computed as (e_alpha/2) * w_unit * nu_alpha * lambda_alpha in the orbit
// field.  Throws on missing extras, e_alpha divisible by p, or t_alpha = 0.
FourthRoot eps_ram(const SignContext& ctx, Quotient which);

struct LevelSigns {
  int tilde_e = 1;
  int eps_unram = 1;
  int eps_nosymm = 1;
  int eps_noram = 1;

  bool operator==(const LevelSigns& o) const {
    return tilde_e == o.tilde_e && eps_unram == o.eps_unram && eps_nosymm == o.eps_nosymm &&
           eps_noram == o.eps_noram;
  }
};

struct SignReport {
  std::map<std::string, LevelSigns> levels;  // keyed "G", "G'", "H", "H'"
  LevelSigns quot_gg, quot_hh, quot_pi;      // ratios across the layers
  int e_gg = 1, e_hh = 1, e_pi = 1;
  FourthRoot ram_gg, ram_hh, ram_pi;
  FourthRoot composed;  // ram_pi * noram_pi * tilde_pi

  bool operator==(const SignReport& o) const {
    return levels == o.levels && quot_gg == o.quot_gg && quot_hh == o.quot_hh &&
           quot_pi == o.quot_pi && e_gg == o.e_gg && e_hh == o.e_hh && e_pi == o.e_pi &&
           ram_gg == o.ram_gg && ram_hh == o.ram_hh && ram_pi == o.ram_pi &&
           composed == o.composed;
  }
};

// All levels, all quotients, and the composed factor that multiplies the
// inductive character formula.
SignReport assemble(const SignContext& ctx);

// Cross-validates two independent computations of the pair sign: the orbit
// count tilde_e(pi') against (-1)^(rk G - rk G') (-1)^(rk H - rk H') e(pi').
// Meaningful only when G' contains a maximally unramified-split torus and
// the declared ranks are the honest split ranks.
bool check_stable_sign_identity(const SignContext& ctx);

// The whole context transported along a root-preserving automorphism w:
// conjugated Galois model, relabeled orbits, point, profiles, and extras.
// Models replacing gamma by a stable conjugate.
SignContext transport_context(const SignContext& ctx, const Mat& w);

// True iff e_quot and eps_ram are unchanged when the profile, the covector,
// the point, and the ramified extras are all transported along w.
bool check_stable_invariance(const SignContext& ctx, const Mat& w);

}  // namespace padchar
