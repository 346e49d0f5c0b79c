#pragma once

// Leading-term profiles of torus elements and generic covectors, cut-depth
// approximation bookkeeping, and the centralizer root subsets.  An element is
// represented purely by its root values: per Galois orbit the depth
// d = ord(alpha(gamma) - 1), the depth-zero residue rho of alpha(gamma), and
// the leading residue lambda of alpha(gamma) - 1.

#include <padchar/apartment.hpp>
#include <padchar/rootgal.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace padchar {

struct ResidueField {
  long long p = 3;
  int f = 1;
  long long q() const { return pow_checked(p, f); }
};

// Residue field of the degree-f_alpha unramified extension attached to an
// orbit: F_{q^{f_alpha}}.
const Fq& orbit_field(const ResidueField& rf, const OrbitInfo& orbit);

struct OrbitValue {
  Depth d;                       // rational (no plus part) or infinite
  FqElem rho;                    // in the orbit field; forced to 1 when d != 0
  std::optional<FqElem> lambda;  // present iff d is finite

  bool operator==(const OrbitValue& o) const {
    return d == o.d && rho == o.rho && lambda == o.lambda;
  }
};

struct ElementProfile {
  bool bounded = true;
  std::map<std::string, OrbitValue> entries;  // keyed by orbit id

  const OrbitValue& at(const std::string& orbit_id) const;
  bool root_value_is_one(const std::string& orbit_id) const;  // d = infinity
};

// Diagnostics, one string per violated rule (empty means valid):
// totality, d in Z_alpha and >= 0 when bounded, field membership, rho = 1
// off depth zero, rho = 1 + lambda at depth zero, norm-one residues on
// depth-zero symmetric-unramified orbits, rho^2 = 1 on depth-zero
// symmetric-ramified orbits, and the negation rules across nonsymmetric
// orbit pairs.
std::vector<std::string> validate_profile(const ElementProfile& profile, const OrbitSet& os,
                                          const ResidueField& rf);

// Fills in missing negative-pair entries from the stored ones:
// d unchanged, rho -> rho^{-1}, lambda -> -lambda rho^{-1} at depth zero and
// -lambda at positive finite depth.
ElementProfile complete_negatives(const ElementProfile& profile, const OrbitSet& os,
                                  const ResidueField& rf);

// A generic covector of depth -r relative to a Levi subset: orbits inside
// the Levi ("Root'") carry value 0 (depth infinity); all others carry depth
// exactly -r with a leading residue nu.
struct CovectorProfile {
  Rational r;
  std::set<std::string> levi_orbits;
  std::map<std::string, FqElem> nu;  // keyed by orbit id, non-Levi orbits only

  bool in_levi(const std::string& orbit_id) const { return levi_orbits.count(orbit_id) != 0; }
  const FqElem& nu_of(const std::string& orbit_id) const;
};

struct RawCovectorEntry {
  Depth d;                       // -r or infinite
  std::optional<FqElem> nu;
};

// Builds and validates a covector profile from per-orbit raw entries;
// genericity demands every finite depth equal -r exactly.
CovectorProfile make_covector(const Rational& r,
                              const std::map<std::string, RawCovectorEntry>& raw,
                              const OrbitSet& os, const ResidueField& rf);

std::vector<std::string> validate_covector(const CovectorProfile& cov, const OrbitSet& os,
                                           const ResidueField& rf);

// gamma together with the cut depth r.
struct Approximation {
  Rational r;
  ElementProfile gamma;
};

// Orbits with d >= r: the root system of the centralizer of the tail.
std::set<std::string> centralizer_orbits(const Approximation& ap, const OrbitSet& os);

// The head gamma_{<r}: root values of centralizer orbits become 1 (depth
// infinity, rho = 1); everything else is carried unchanged.
ElementProfile head_profile(const Approximation& ap, const OrbitSet& os, const ResidueField& rf);

// Relabel a profile along a transport bijection, carrying all data unchanged.
ElementProfile transport_profile(const ElementProfile& profile, const TransportResult& tr);
CovectorProfile transport_covector(const CovectorProfile& cov, const TransportResult& tr);

}  // namespace padchar
