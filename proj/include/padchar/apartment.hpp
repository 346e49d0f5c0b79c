#pragma once

// Apartment points, modeled as the per-orbit affine valuation cosets
// ord_x(alpha) in Q / Z_alpha, together with coset membership and exact
// point counting in depth intervals.

#include <padchar/rootgal.hpp>

#include <map>
#include <string>
#include <vector>

namespace padchar {

struct ApartmentPoint {
  std::string name;
  // orbit key -> coset representative, normalized into [0, 1/e).
  std::map<std::string, Rational> cosets;

  const Rational& coset(const std::string& orbit_id) const;  // throws if missing
};

// Builds a point from an explicit coset table.  Keys must be orbit ids; a
// missing orbit is filled in from its negative pair when possible.  Validates
// antisymmetry ord_x(-a) = -ord_x(a) (which for symmetric orbits forces the
// coset to be Z_a or Z_a + 1/(2e_a)) and totality.
ApartmentPoint point_from_cosets(const std::string& name,
                                 const std::map<std::string, Rational>& cosets,
                                 const OrbitSet& os);

// Builds a point from coordinates x in X_* tensor Q, with the origin at a
// fixed hyperspecial point: ord_x(alpha) = <alpha, x> + Z.  Only valid for
// unramified models (trivial inertia); the pairing must be constant on every
// orbit (mod Z), otherwise the coordinates do not describe a point of the
// relevant locus and validation fails.
ApartmentPoint point_from_coordinates(const std::string& name,
                                      const std::vector<Rational>& x, const RootDatum& rd,
                                      const GaloisGroup& gg, const OrbitSet& os);

// True iff d lies in the coset ord_x(alpha), i.e. d == c_alpha mod (1/e)Z.
bool ord_x_contains(const ApartmentPoint& pt, const OrbitInfo& orbit, const Rational& d);

// Number of lattice elements t in coset + (1/e)Z with lo <= t < hi in the
// depth order (so a plus bound excludes its own value on the left and
// includes it on the right).  Bounds must be finite and ordered.
long long count_lattice_points(const Rational& coset, long long e, const Depth& lo,
                               const Depth& hi);

// The same count over ord_x(alpha) at the given point.
long long count_coset_points(const ApartmentPoint& pt, const OrbitInfo& orbit,
                             const Depth& lo, const Depth& hi);

// Relabel a point along a transport bijection: the coset of an orbit at the
// image point is the coset of its preimage (the pairing is equivariant).
ApartmentPoint transport_point(const ApartmentPoint& pt, const TransportResult& tr);

}  // namespace padchar
