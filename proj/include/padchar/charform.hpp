#pragma once

// Evaluators for the inductive character formula, its twisted variant, and
// the stable character sum.  The conjugacy classes of inducing pairs are rows
// of an explicit table: a lattice transport moving the base pair onto the
// class, grouping keys for the rational and the stable orbit, and optionally
// the pair's own apartment point.  Depth-zero character values and orbital
// integrals arrive as read-only oracles keyed by class and tail ids; oracle
// values are exact Gaussian rationals or formal symbols, so every sum is
// computed without any tolerance.

#include <padchar/signs.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace padchar {

// A Gaussian-rational combination of formal symbols plus a constant term:
// the value space for character sums whose orbital integrals stay symbolic.
// Zero coefficients are never stored.
struct CharValue {
  QI constant;
  std::map<std::string, QI> symbols;  // tag -> coefficient

  static CharValue of(const QI& c);
  static CharValue symbol(const std::string& tag, const QI& coeff);

  CharValue operator+(const CharValue& o) const;
  CharValue scaled(const QI& c) const;
  bool operator==(const CharValue& o) const;
  bool operator!=(const CharValue& o) const { return !(*this == o); }
  bool is_zero() const;
  std::string str() const;  // e.g. "3/2 + [Oa] - 1/2 [Ob]", "0"
};

// One oracle entry: a number, or a formal symbol with a coefficient.
struct OracleValue {
  QI value;         // the number, or the symbol's coefficient
  std::string tag;  // empty for numeric entries

  static OracleValue number(const QI& v);
  static OracleValue symbol(const std::string& tag,
                            const QI& coeff = QI::of(Rational(1)));
  CharValue as_value() const;
  bool operator==(const OracleValue& o) const;
};

// One rational class of inducing pairs: the transport w carrying the base
// pair onto this one, grouping keys for the rational orbit and for the
// stable orbit it nests inside, and optionally the pair's own point when it
// is not the transported base point.  Transports must preserve the orbit
// classes (only such classes arise: the acting elements are rational).
struct ConjClass {
  std::string class_id;
  Mat w;
  bool rational = true;  // conjugate to the base pair, not merely stably
  std::string group_id;
  std::string stable_id;
  std::optional<ApartmentPoint> point;
};

struct ConjClassTable {
  std::vector<ConjClass> classes;
};

// Structural diagnostics, one string per violated rule (empty means valid):
// nonempty unique class ids, nonempty grouping keys, a rational base class
// with the identity transport, the rational flag constant and the stable key
// constant on every rational orbit, rational classes confined to the base
// orbit, transports that are well-formed and preserve the orbit classes, and
// override points with a coset for every orbit.
std::vector<std::string> validate_table(const SignContext& ctx, const ConjClassTable& t);

// Whether the head of gamma lies on the class's torus: transport the head
// profile along the class and compare with the original.
bool class_contains_head(const SignContext& ctx, const ConjClass& c);

// Depth-(<r) character values at the head, keyed by class id.  For toral
// pairs these are the character values themselves.
struct CharOracle {
  std::map<std::string, QI> values;
};

// Orbital-integral values keyed by (class id, tail element id).  In stable
// mode the entries are stable orbital integrals: constant across each stable
// class and read at its representative.
struct OrbitalOracle {
  std::map<std::pair<std::string, std::string>, OracleValue> entries;
  bool stable_mode = false;
};

// One contributing class's summand.  The recorded unramified sign is the
// factor a twisted evaluation divides out of the plain one.
struct CharTerm {
  std::string class_id;
  FourthRoot sign;  // the composed sign multiplying this class's summand
  int noram = 1;    // the unramified quadratic sign of the class
  QI character;
  OracleValue orbital;
  CharValue value;  // sign * character * orbital
};

struct CharResult {
  CharValue total;
  std::vector<CharTerm> terms;  // contributing classes, in table order
};

// Sum over the classes carrying the head of
//   eps_ram * eps_noram * tilde_e  *  character value  *  orbital value,
// every sign recomputed in the class's transported context.  Throws when an
// oracle entry is missing on a contributing class, naming the class.
CharResult eval_char(const SignContext& ctx, const ConjClassTable& t,
                     const CharOracle& chi, const OrbitalOracle& orb,
                     const std::string& element_id);

// The same sum with the unramified quadratic sign dropped from every term
// (the twist absorbs it into the inducing character).  Toral pairs only.
CharResult eval_twisted_char(const SignContext& ctx, const ConjClassTable& t,
                             const CharOracle& chi, const OrbitalOracle& orb,
                             const std::string& element_id);

// Sum over the stable classes whose members carry the head of
//   eps_ram * character value * e_quot * (-1)^(rk H) * stable orbital value,
// read at the first contributing member of each stable class.  Requires a
// toral pair over a Galois model with trivial inertia, a stable-mode oracle,
// and declared ranks satisfying the stable sign identity on every
// representative; checks that the head containment, the character values,
// and the stable orbital values are constant across each stable class.
CharResult eval_stable_sum(const SignContext& ctx, const ConjClassTable& t,
                           const CharOracle& chi, const OrbitalOracle& orb,
                           const std::string& element_id);

// The unramified quadratic sign of every class carrying the head: the
// per-class ratio between the plain and the twisted summand, and the
// obstruction to stability of the untwisted sum.
std::map<std::string, int> noram_factors(const SignContext& ctx, const ConjClassTable& t);

// A whole evaluation scenario moved along w: the context transported (gamma
// replaced by its stable conjugate), every class transport conjugated by w,
// and override points carried along.  Oracle keys are unchanged, which is
// exactly the transfer consistency the stability check assumes.
struct MovedScenario {
  SignContext ctx;
  ConjClassTable table;
};
MovedScenario transport_scenario(const SignContext& ctx, const ConjClassTable& t,
                                 const Mat& w);

// True iff the stable sum is unchanged when the whole scenario is moved
// along w and evaluated against the shared oracles.
bool stability_check(const SignContext& ctx, const ConjClassTable& t,
                     const CharOracle& chi, const OrbitalOracle& orb,
                     const std::string& element_id, const Mat& w);

}  // namespace padchar
