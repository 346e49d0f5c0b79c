#include "padchar/apartment.hpp"

namespace padchar {

namespace {

// Reduce c into [0, 1/e).
Rational normalize_coset(const Rational& c, long long e) {
  const Rational scaled = c * e;
  return (scaled - Rational(floor_rational(scaled))) / e;
}

}  // namespace

const Rational& ApartmentPoint::coset(const std::string& orbit_id) const {
  auto it = cosets.find(orbit_id);
  if (it == cosets.end())
    throw ValidationError("point '" + name + "' has no coset for orbit " + orbit_id);
  return it->second;
}

ApartmentPoint point_from_cosets(const std::string& name,
                                 const std::map<std::string, Rational>& cosets,
                                 const OrbitSet& os) {
  ApartmentPoint pt;
  pt.name = name;
  for (const auto& [key, value] : cosets) {
    if (!os.has_key(key))
      throw ValidationError("coset table names unknown orbit '" + key + "'");
    pt.cosets[key] = normalize_coset(value, os.by_key(key).e);
  }
  // fill negatives of nonsymmetric pairs that were left out
  for (const auto& [key, value] : cosets) {
    const OrbitInfo& o = os.by_key(key);
    if (!pt.cosets.count(o.neg_id))
      pt.cosets[o.neg_id] = normalize_coset(-value, o.e);
  }
  for (const OrbitInfo& o : os.list) {
    if (!pt.cosets.count(o.id))
      throw ValidationError("point '" + name + "' is missing orbit " + o.id);
    // antisymmetry; for symmetric orbits this is the constraint 2c in Z_a
    const Rational& c = pt.cosets.at(o.id);
    const Rational& cneg = pt.cosets.at(o.neg_id);
    if (!is_integer((c + cneg) * o.e))
      throw ValidationError("point '" + name + "' violates ord_x(-a) = -ord_x(a) on orbit " +
                            o.id);
  }
  return pt;
}

ApartmentPoint point_from_coordinates(const std::string& name,
                                      const std::vector<Rational>& x, const RootDatum& rd,
                                      const GaloisGroup& gg, const OrbitSet& os) {
  if (static_cast<int>(x.size()) != rd.rank)
    throw ValidationError("coordinate vector has wrong dimension");
  if (gg.inertia.size() != 1)
    throw ValidationError(
        "coordinate mode needs an unramified model; supply explicit cosets instead");

  std::map<std::string, Rational> cosets;
  for (const OrbitInfo& o : os.list) {
    Rational c(0);
    bool first = true;
    for (const Vec& member : o.members) {
      Rational v(0);
      for (int i = 0; i < rd.rank; ++i) v += Rational(member[i]) * x[i];
      if (first) {
        c = v;
        first = false;
      } else if (!is_integer(v - c)) {
        throw ValidationError("pairing with " + vec_key(member) +
                              " is not orbit-constant mod Z; the coordinates do not " +
                              "describe a valid point");
      }
    }
    cosets[o.id] = c;
  }
  return point_from_cosets(name, cosets, os);
}

bool ord_x_contains(const ApartmentPoint& pt, const OrbitInfo& orbit, const Rational& d) {
  return is_integer((d - pt.coset(orbit.id)) * orbit.e);
}

long long count_lattice_points(const Rational& coset, long long e, const Depth& lo,
                               const Depth& hi) {
  if (lo.infinite || hi.infinite)
    throw ValidationError("cannot count coset points in an unbounded interval");
  if (hi < lo) throw ValidationError("interval bounds out of order");
  const Rational step(e);
  // elements are t = coset + k/e; bound k on both sides
  const Rational klo = (lo.value - coset) * step;
  const Rational khi = (hi.value - coset) * step;
  const Int k_min = lo.plus ? floor_rational(klo) + 1 : ceil_rational(klo);
  const Int k_max = hi.plus ? floor_rational(khi) : ceil_rational(khi) - 1;
  if (k_max < k_min) return 0;
  return to_ll(k_max - k_min + 1);
}

long long count_coset_points(const ApartmentPoint& pt, const OrbitInfo& orbit,
                             const Depth& lo, const Depth& hi) {
  return count_lattice_points(pt.coset(orbit.id), orbit.e, lo, hi);
}

ApartmentPoint transport_point(const ApartmentPoint& pt, const TransportResult& tr) {
  ApartmentPoint out;
  out.name = pt.name;
  for (const auto& [key, c] : pt.cosets) {
    auto it = tr.orbit_map.find(key);
    if (it == tr.orbit_map.end())
      throw ValidationError("transport does not cover orbit " + key);
    out.cosets[it->second] = c;
  }
  return out;
}

}  // namespace padchar
