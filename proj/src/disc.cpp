#include "padchar/disc.hpp"

namespace padchar {

Rational disc_val_gamma(const ElementProfile& profile, const OrbitSet& os) {
  Rational v(0);
  for (const OrbitInfo& o : os.list) {
    const OrbitValue& val = profile.at(o.id);
    if (!val.d.infinite) v += Rational(o.n) * val.d.value;
  }
  return v;
}

Rational disc_val_xstar(const CovectorProfile& cov, const OrbitSet& os) {
  Rational v(0);
  for (const OrbitInfo& o : os.list)
    if (!cov.in_levi(o.id)) v -= Rational(o.n) * cov.r;
  return v;
}

bool check_part_disc(const Approximation& ap, const OrbitSet& os, const ResidueField& rf) {
  const Rational whole = disc_val_gamma(ap.gamma, os);
  // head side: depths below the cut survive, centralized orbits become 1
  Rational split = disc_val_gamma(head_profile(ap, os, rf), os);
  // tail side: the deep depths, summed over the centralizer root system only
  for (const std::string& id : centralizer_orbits(ap, os)) {
    const OrbitValue& v = ap.gamma.at(id);
    if (!v.d.infinite) split += Rational(os.by_key(id).n) * v.d.value;
  }
  return whole == split;
}

}  // namespace padchar
