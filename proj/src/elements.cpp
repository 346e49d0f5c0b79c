#include "padchar/elements.hpp"

#include <algorithm>

namespace padchar {

const Fq& orbit_field(const ResidueField& rf, const OrbitInfo& orbit) {
  return fq_make(rf.p, rf.f * static_cast<int>(orbit.f));
}

const OrbitValue& ElementProfile::at(const std::string& orbit_id) const {
  auto it = entries.find(orbit_id);
  if (it == entries.end())
    throw ValidationError("element profile has no entry for orbit " + orbit_id);
  return it->second;
}

bool ElementProfile::root_value_is_one(const std::string& orbit_id) const {
  return at(orbit_id).d.infinite;
}

namespace {

bool depth_is_zero(const Depth& d) { return !d.infinite && d.value == 0; }

void check_entry_fields(const OrbitValue& v, const Fq& field, const std::string& id,
                        std::vector<std::string>& out) {
  if (!v.d.infinite && v.d.plus)
    out.push_back("orbit " + id + ": element depth cannot carry a plus part");
  if (!(v.rho.field == field))
    out.push_back("orbit " + id + ": rho lies in the wrong field");
  else if (v.rho.is_zero())
    out.push_back("orbit " + id + ": rho must be a unit");
  if (v.lambda) {
    if (!(v.lambda->field == field))
      out.push_back("orbit " + id + ": lambda lies in the wrong field");
    else if (v.lambda->is_zero())
      out.push_back("orbit " + id + ": lambda must be a unit");
  }
  if (v.d.infinite && v.lambda)
    out.push_back("orbit " + id + ": lambda is undefined when the root value is 1");
  if (!v.d.infinite && !v.lambda)
    out.push_back("orbit " + id + ": lambda required at finite depth");
}

}  // namespace

std::vector<std::string> validate_profile(const ElementProfile& profile, const OrbitSet& os,
                                          const ResidueField& rf) {
  std::vector<std::string> out;
  for (const auto& [id, value] : profile.entries) {
    (void)value;
    if (!os.has_key(id)) out.push_back("entry for unknown orbit " + id);
  }
  for (const OrbitInfo& o : os.list) {
    if (!profile.entries.count(o.id)) {
      out.push_back("missing entry for orbit " + o.id);
      continue;
    }
    const OrbitValue& v = profile.entries.at(o.id);
    const Fq& field = orbit_field(rf, o);
    check_entry_fields(v, field, o.id, out);
    if (!(v.rho.field == field) || (v.lambda && !(v.lambda->field == field))) continue;

    if (!v.d.infinite) {
      if (!is_integer(v.d.value * o.e))
        out.push_back("orbit " + o.id + ": depth not in (1/e)Z");
      if (profile.bounded && v.d.value < 0)
        out.push_back("orbit " + o.id + ": negative depth on a bounded element");
    }
    if (!depth_is_zero(v.d) && !(v.rho == fq_one(field)))
      out.push_back("orbit " + o.id + ": rho must be 1 away from depth zero");
    if (depth_is_zero(v.d) && v.lambda &&
        !(v.rho == fq_add(fq_one(field), *v.lambda)))
      out.push_back("orbit " + o.id + ": rho != 1 + lambda at depth zero");
    if (depth_is_zero(v.d) && o.kind == OrbitKind::symmetric_unramified) {
      if (o.f % 2 != 0) {
        out.push_back("orbit " + o.id + ": symmetric-unramified orbit with odd residue degree");
      } else if (!v.rho.is_zero() &&
                 !(fq_norm_in_field(v.rho, field.k / 2) == fq_one(field))) {
        out.push_back("orbit " + o.id + ": depth-zero residue is not norm-one");
      }
    }
    if (depth_is_zero(v.d) && o.kind == OrbitKind::symmetric_ramified &&
        !(fq_mul(v.rho, v.rho) == fq_one(field)))
      out.push_back("orbit " + o.id + ": depth-zero residue on a ramified orbit must square to 1");

    // negation rules across distinct paired orbits
    if (o.neg_id != o.id && profile.entries.count(o.neg_id)) {
      const OrbitValue& w = profile.entries.at(o.neg_id);
      if (!(w.d == v.d)) out.push_back("orbit " + o.id + ": negative pair depth mismatch");
      if (!w.rho.is_zero() && !(w.rho == fq_inv(v.rho)))
        out.push_back("orbit " + o.id + ": rho of the negative pair is not rho^{-1}");
      if (v.lambda && w.lambda && !v.lambda->is_zero()) {
        const FqElem expected = depth_is_zero(v.d)
                                    ? fq_neg(fq_mul(*v.lambda, fq_inv(v.rho)))
                                    : fq_neg(*v.lambda);
        if (!(*w.lambda == expected))
          out.push_back("orbit " + o.id + ": lambda of the negative pair violates the negation rule");
      }
    }
  }
  return out;
}

ElementProfile complete_negatives(const ElementProfile& profile, const OrbitSet& os,
                                  const ResidueField& rf) {
  (void)rf;  // fields of derived entries are inherited from the stored ones
  ElementProfile out = profile;
  for (const OrbitInfo& o : os.list) {
    if (!out.entries.count(o.id) || out.entries.count(o.neg_id) || o.neg_id == o.id) continue;
    const OrbitValue& v = out.entries.at(o.id);
    OrbitValue w;
    w.d = v.d;
    w.rho = fq_inv(v.rho);
    if (v.lambda) {
      w.lambda = depth_is_zero(v.d) ? fq_neg(fq_mul(*v.lambda, fq_inv(v.rho)))
                                    : fq_neg(*v.lambda);
    }
    out.entries[o.neg_id] = std::move(w);
  }
  return out;
}

const FqElem& CovectorProfile::nu_of(const std::string& orbit_id) const {
  auto it = nu.find(orbit_id);
  if (it == nu.end())
    throw ValidationError("covector has no leading residue for orbit " + orbit_id);
  return it->second;
}

CovectorProfile make_covector(const Rational& r,
                              const std::map<std::string, RawCovectorEntry>& raw,
                              const OrbitSet& os, const ResidueField& rf) {
  CovectorProfile cov;
  cov.r = r;
  for (const auto& [id, entry] : raw) {
    if (!os.has_key(id)) throw ValidationError("covector entry for unknown orbit " + id);
    if (entry.d.infinite) {
      cov.levi_orbits.insert(id);
      if (entry.nu) throw ValidationError("orbit " + id + ": Levi orbits carry no residue");
    } else {
      if (entry.d.plus || !(entry.d.value == -r))
        throw ValidationError("orbit " + id + ": generic covector entries have depth exactly -r");
      if (!entry.nu) throw ValidationError("orbit " + id + ": missing leading residue");
      cov.nu[id] = *entry.nu;
    }
  }
  // fill negatives: Levi membership mirrors, residues negate
  for (const auto& [id, entry] : raw) {
    const OrbitInfo& o = os.by_key(id);
    if (o.neg_id == id || raw.count(o.neg_id)) continue;
    if (entry.d.infinite)
      cov.levi_orbits.insert(o.neg_id);
    else
      cov.nu[o.neg_id] = fq_neg(*entry.nu);
  }
  const auto problems = validate_covector(cov, os, rf);
  if (!problems.empty()) throw ValidationError("invalid covector: " + problems.front());
  return cov;
}

std::vector<std::string> validate_covector(const CovectorProfile& cov, const OrbitSet& os,
                                           const ResidueField& rf) {
  std::vector<std::string> out;
  for (const std::string& id : cov.levi_orbits)
    if (!os.has_key(id)) out.push_back("Levi set names unknown orbit " + id);
  for (const auto& [id, residue] : cov.nu) {
    (void)residue;
    if (!os.has_key(id)) out.push_back("residue for unknown orbit " + id);
  }
  for (const OrbitInfo& o : os.list) {
    const bool in_levi = cov.in_levi(o.id);
    if (in_levi != cov.in_levi(o.neg_id))
      out.push_back("orbit " + o.id + ": Levi subset is not negation-closed");
    if (in_levi) {
      if (cov.nu.count(o.id))
        out.push_back("orbit " + o.id + ": Levi orbit carries a residue");
      continue;
    }
    if (!cov.nu.count(o.id)) {
      out.push_back("orbit " + o.id + ": missing leading residue");
      continue;
    }
    // genericity: the depth off the Levi is exactly -r, which must lie in Z_a
    if (!is_integer(cov.r * o.e))
      out.push_back("orbit " + o.id + ": -r does not lie in (1/e)Z");
    const FqElem& residue = cov.nu.at(o.id);
    const Fq& field = orbit_field(rf, o);
    if (!(residue.field == field))
      out.push_back("orbit " + o.id + ": residue lies in the wrong field");
    else if (residue.is_zero())
      out.push_back("orbit " + o.id + ": residue must be a unit");
    // negation rule when both stored
    if (o.neg_id != o.id && cov.nu.count(o.neg_id) && residue.field == field &&
        cov.nu.at(o.neg_id).field == field && !(cov.nu.at(o.neg_id) == fq_neg(residue)))
      out.push_back("orbit " + o.id + ": residue of the negative pair is not negated");
  }
  return out;
}

std::set<std::string> centralizer_orbits(const Approximation& ap, const OrbitSet& os) {
  std::set<std::string> out;
  const Depth cut = Depth::of(ap.r);
  for (const OrbitInfo& o : os.list) {
    const Depth& d = ap.gamma.at(o.id).d;
    if (cut <= d) out.insert(o.id);
  }
  return out;
}

ElementProfile head_profile(const Approximation& ap, const OrbitSet& os,
                            const ResidueField& rf) {
  const std::set<std::string> centralizer = centralizer_orbits(ap, os);
  ElementProfile head;
  head.bounded = ap.gamma.bounded;
  for (const OrbitInfo& o : os.list) {
    if (centralizer.count(o.id)) {
      OrbitValue v;
      v.d = Depth::infinity();
      v.rho = fq_one(orbit_field(rf, o));
      head.entries[o.id] = std::move(v);
    } else {
      head.entries[o.id] = ap.gamma.at(o.id);
    }
  }
  return head;
}

namespace {
std::string relabel(const TransportResult& tr, const std::string& id) {
  auto it = tr.orbit_map.find(id);
  if (it == tr.orbit_map.end())
    throw ValidationError("transport map has no image for orbit " + id);
  return it->second;
}
}  // namespace

ElementProfile transport_profile(const ElementProfile& profile, const TransportResult& tr) {
  ElementProfile out;
  out.bounded = profile.bounded;
  for (const auto& [id, value] : profile.entries) out.entries[relabel(tr, id)] = value;
  return out;
}

CovectorProfile transport_covector(const CovectorProfile& cov, const TransportResult& tr) {
  CovectorProfile out;
  out.r = cov.r;
  for (const std::string& id : cov.levi_orbits) out.levi_orbits.insert(relabel(tr, id));
  for (const auto& [id, residue] : cov.nu) out.nu[relabel(tr, id)] = residue;
  return out;
}

}  // namespace padchar
