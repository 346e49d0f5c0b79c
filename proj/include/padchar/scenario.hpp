#pragma once

// Scenario files: the JSON surface of the toolkit.  A scenario packages a
// root datum, a Galois model, a residue field, named apartment points, an
// element and a covector, a class table, and oracle values, stored exactly
// as written; cooking turns the raw data into the typed objects the
// evaluators consume.  Parsing and serialization are mutually inverse on
// the raw form, so round-tripping a file is the identity.
//
// Format (schema "padchar/1", UTF-8; exactness forbids JSON floats, so all
// rationals are strings "n/d" and all field elements are coefficient arrays
// low-degree-first over F_p):
//
//   {
//     "schema": "padchar/1",
//     "name": "c2-pgsp4-even",                      optional label
//     "root_datum": {"rank": 2,
//                    "roots":   [[1,0], [-1,0], ...],
//                    "coroots": [[2,-2], [-2,2], ...]},
//     "galois": {"inertia": [M, ...],               M = integer row matrix
//                "frobenius": M,
//                "extra": [M, ...]},                optional
//     "residue_field": {"p": 3, "f": 2},
//     "points": {"origin": {"1,0": "0", ...}, ...}, coset per orbit id
//     "x": "origin",                                the base point's name
//     "gamma": {"1,0": {"d": "0", "rho": [0,1], "lambda": [2,1]},
//               "0,1": {"d": "inf"},
//               ...},                               depths "n/d" or "inf";
//                                                   rho defaults to 1, and
//                                                   lambda to rho - 1 at
//                                                   depth zero
//     "xstar": {"levi": ["1,0", ...],               orbits with value 1
//               "nu": {"0,1": [1], ...}},           leading residues at -r
//     "depth_r": "2",
//     "ranks": {"G": 2, "Gprime": 0, "H": 0, "Hprime": 0},
//     "ramified_extras": {"1": {"w_unit": [1], "rank_pm": 1,
//                               "kottwitz_sign": 1}},   optional
//     "classes": [{"id": "x", "w": M, "rational": true,
//                  "group": "gx", "stable": "st",
//                  "point": "vertex"},              "point" optional
//                 ...],                             optional
//     "element": "e",                               tail id for oracle keys
//     "theta_values": {"x": "1", ...},              values in Q(i) as
//                                                   "a/b + c/d i"; optional
//     "oracles": {"orbital":        [E, ...],       E = {"class", "element",
//                 "stable_orbital": [E, ...]},           "value"} or {...,
//                                                   "symbol", "coeff"};
//                                                   optional
//     "flags": {"unramified_split": true,
//               "maximally_split_levi": true}
//   }

#include <padchar/charform.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace padchar {

struct ScenarioGammaEntry {
  Depth d;
  std::optional<std::vector<long long>> rho;
  std::optional<std::vector<long long>> lambda;

  bool operator==(const ScenarioGammaEntry&) const = default;
};

struct ScenarioExtras {
  std::vector<long long> w_unit{1};
  long long rank_pm = 1;
  int kottwitz_sign = 1;

  bool operator==(const ScenarioExtras&) const = default;
};

struct ScenarioClassSpec {
  std::string id;
  Mat w;
  bool rational = true;
  std::string group;
  std::string stable;
  std::string point;  // override point name; empty = transported base point

  bool operator==(const ScenarioClassSpec&) const = default;
};

struct ScenarioRanks {
  long long G = 0;
  long long Gprime = 0;
  long long H = 0;
  long long Hprime = 0;

  bool operator==(const ScenarioRanks&) const = default;
};

struct ScenarioFlags {
  bool unramified_split = false;
  bool maximally_split_levi = false;

  bool operator==(const ScenarioFlags&) const = default;
};

// The raw mirror of a scenario file.
struct Scenario {
  std::string name;
  int rank = 0;
  std::vector<Vec> roots;
  std::vector<Vec> coroots;
  std::vector<Mat> inertia;
  Mat frobenius;
  std::vector<Mat> extra;
  long long p = 0;
  long long f = 1;
  std::map<std::string, std::map<std::string, Rational>> points;
  std::string x;
  std::map<std::string, ScenarioGammaEntry> gamma;
  std::set<std::string> levi;
  std::map<std::string, std::vector<long long>> nu;
  Rational depth_r;
  ScenarioRanks ranks;
  std::map<std::string, ScenarioExtras> ramified_extras;
  std::vector<ScenarioClassSpec> classes;
  std::string element = "e";
  std::map<std::string, QI> theta_values;
  std::map<std::pair<std::string, std::string>, OracleValue> orbital;
  std::map<std::pair<std::string, std::string>, OracleValue> stable_orbital;
  ScenarioFlags flags;

  bool operator==(const Scenario&) const = default;
};

// Everything the evaluators consume, built from a raw scenario.
struct CookedScenario {
  ResidueField rf;
  GaloisGroup gg;
  OrbitSet os;
  std::map<std::string, ApartmentPoint> points;
  SignContext ctx;  // base point, profiles, extras, and ranks all installed
  ConjClassTable table;
  CharOracle theta;
  OrbitalOracle orbital;         // class-mode entries
  OrbitalOracle stable_orbital;  // stable-mode entries
  std::string element;
};

// Builds and validates the typed objects, throwing ValidationError with the
// first problem found.  The class table is cooked but not audited; run
// validate_scenario for the full diagnostic sweep.
CookedScenario cook_scenario(const Scenario& sc);

// All diagnostics, empty means valid: cooking problems, context validity,
// table structure (when classes are present), referential integrity of the
// ids used by points, classes, theta values, and oracle entries, and flag
// consistency.
std::vector<std::string> validate_scenario(const Scenario& sc);

// Parses scenario JSON; throws ValidationError naming the offending field.
Scenario parse_scenario(const std::string& text);

// Canonical serialization: sorted keys, two-space indentation, trailing
// newline.  parse_scenario(serialize_scenario(sc)) == sc.
std::string serialize_scenario(const Scenario& sc);

// Reads and parses a scenario file; throws ValidationError on I/O failure.
Scenario load_scenario(const std::string& path);

}  // namespace padchar
