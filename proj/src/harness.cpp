#include "padchar/harness.hpp"

#include <set>

namespace padchar {

FqElem random_unit(std::mt19937_64& rng, const Fq& field) {
  std::uniform_int_distribution<long long> pick(1, field.q() - 1);
  return fq_nth(field, pick(rng));
}

namespace {

FqElem random_unit_not_one(std::mt19937_64& rng, const Fq& field) {
  for (;;) {
    FqElem x = random_unit(rng, field);
    if (!(x == fq_one(field))) return x;
  }
}

// depth-zero residue respecting the orbit kind
FqElem random_residue(std::mt19937_64& rng, const Fq& field, const OrbitInfo& o) {
  switch (o.kind) {
    case OrbitKind::nonsymmetric:
      return random_unit_not_one(rng, field);
    case OrbitKind::symmetric_unramified: {
      // norm-one elements are exactly the (q0-1)-th powers (Hilbert 90)
      const long long q0 = pow_checked(field.p, field.k / 2);
      for (;;) {
        FqElem x = fq_pow(random_unit(rng, field), q0 - 1);
        if (!(x == fq_one(field))) return x;
      }
    }
    case OrbitKind::symmetric_ramified:
      return fq_from_int(field, -1);  // the only unit squaring to 1 besides 1
  }
  throw ValidationError("unreachable orbit kind");
}

}  // namespace

ElementProfile random_profile(std::mt19937_64& rng, const OrbitSet& os,
                              const ResidueField& rf, const ProfileOptions& opt) {
  ElementProfile out;
  out.bounded = !opt.allow_negative;
  std::uniform_int_distribution<int> pct(0, 99);
  for (const OrbitInfo& o : os.list) {
    if (out.entries.count(o.id)) continue;
    if (o.neg_id != o.id && out.entries.count(o.neg_id)) continue;  // derived below
    const Fq& field = orbit_field(rf, o);
    OrbitValue v;
    if (pct(rng) < opt.infinite_percent) {
      v.d = Depth::infinity();
      v.rho = fq_one(field);
    } else {
      const long long lo = opt.allow_negative ? -opt.max_depth_steps
                                              : (opt.allow_depth_zero ? 0 : 1);
      std::uniform_int_distribution<long long> steps(lo, opt.max_depth_steps);
      const long long k = steps(rng);
      v.d = Depth::of(Rational(k) / Rational(o.e));
      if (k == 0) {
        v.rho = random_residue(rng, field, o);
        v.lambda = fq_sub(v.rho, fq_one(field));
      } else {
        v.rho = fq_one(field);
        v.lambda = random_unit(rng, field);
      }
    }
    out.entries[o.id] = std::move(v);
  }
  return complete_negatives(out, os, rf);
}

CovectorProfile random_covector(std::mt19937_64& rng, const Rational& r,
                                const OrbitSet& os, const ResidueField& rf) {
  std::map<std::string, RawCovectorEntry> raw;
  std::uniform_int_distribution<int> coin(0, 1);
  for (const OrbitInfo& o : os.list) {
    if (raw.count(o.id)) continue;
    if (o.neg_id != o.id && raw.count(o.neg_id)) continue;
    RawCovectorEntry e;
    if (coin(rng)) {
      e.d = Depth::infinity();
    } else {
      e.d = Depth::of(-r);
      e.nu = random_unit(rng, orbit_field(rf, o));
    }
    raw[o.id] = e;
  }
  return make_covector(r, raw, os, rf);
}

ApartmentPoint random_point(std::mt19937_64& rng, const OrbitSet& os) {
  std::map<std::string, Rational> cosets;
  std::uniform_int_distribution<int> sixth(0, 5);
  std::uniform_int_distribution<int> coin(0, 1);
  for (const OrbitInfo& o : os.list) {
    if (cosets.count(o.id)) continue;
    if (o.neg_id != o.id && cosets.count(o.neg_id)) continue;  // derived
    const int k = o.symmetric() ? 3 * coin(rng) : sixth(rng);
    cosets[o.id] = Rational(k) / Rational(6 * o.e);
  }
  return point_from_cosets("random", cosets, os);
}

std::vector<Mat> weyl_group(const RootDatum& rd) {
  std::set<Mat> seen;
  std::vector<Mat> queue{mat_identity(rd.rank)};
  seen.insert(queue.front());
  std::vector<Mat> gens;
  for (const Vec& root : rd.roots) gens.push_back(reflection_matrix(rd, root));
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const Mat& g : gens) {
      Mat next = mat_mul(g, queue[i]);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return queue;
}

std::vector<Mat> transportable_weyl(const RootDatum& rd, const GaloisModel& gm, long long q) {
  std::vector<Mat> out;
  for (const Mat& w : weyl_group(rd)) {
    try {
      weyl_transport(rd, gm, w, q);
      out.push_back(w);
    } catch (const ValidationError&) {
    }
  }
  return out;
}

}  // namespace padchar
