#include "padchar/signs.hpp"

namespace padchar {

namespace {

int parity_sign(long long k) { return ((k % 2) + 2) % 2 == 0 ? 1 : -1; }

// alpha(gamma) != 1 and (r - d)/2 in ord_x(alpha).
bool in_minus_set(const SignContext& ctx, const OrbitInfo& o) {
  const OrbitValue& val = ctx.gamma.at(o.id);
  if (val.d.infinite) return false;
  return ord_x_contains(ctx.x, o, (ctx.r - val.d.value) / 2);
}

// r/2 in ord_x(alpha).
bool in_half_set(const SignContext& ctx, const OrbitInfo& o) {
  return ord_x_contains(ctx.x, o, ctx.r / 2);
}

bool depth_zero(const OrbitValue& val) { return !val.d.infinite && val.d.value == 0; }

}  // namespace

std::vector<std::string> validate_context(const SignContext& ctx) {
  std::vector<std::string> out;
  for (const std::string& v : validate_profile(ctx.gamma, ctx.os, ctx.rf))
    out.push_back("gamma: " + v);
  for (const std::string& v : validate_covector(ctx.cov, ctx.os, ctx.rf))
    out.push_back("xstar: " + v);
  if (ctx.cov.r != ctx.r) out.push_back("covector depth does not match the context depth");
  for (const OrbitInfo& o : ctx.os.list)
    if (!ctx.x.cosets.count(o.id)) out.push_back("point is missing orbit " + o.id);
  if (ctx.rk_G < 0 || ctx.rk_Gprime < 0 || ctx.rk_H < 0 || ctx.rk_Hprime < 0)
    out.push_back("split ranks must be nonnegative");
  if (ctx.rk_Gprime > ctx.rk_G) out.push_back("rank of G' exceeds rank of G");
  if (!out.empty()) return out;  // the placement check below needs valid data

  const RootSets rs = root_sets(ctx);
  for (const std::string& id : rs.of_pair) {
    if (!ctx.os.by_key(id).ramified()) continue;
    if (!ctx.ram.count(id)) out.push_back("orbit " + id + ": ramified sign data missing");
  }
  for (const auto& [id, extras] : ctx.ram) {
    if (!ctx.os.has_key(id)) {
      out.push_back("ramified sign data for unknown orbit " + id);
      continue;
    }
    const OrbitInfo& o = ctx.os.by_key(id);
    if (!o.ramified()) {
      out.push_back("orbit " + id + ": ramified sign data on a non-ramified orbit");
      continue;
    }
    if (!rs.of_pair.count(id))
      out.push_back("orbit " + id + ": ramified sign data outside the pair root set");
    if (extras.w_unit.field != orbit_field(ctx.rf, o) || extras.w_unit.is_zero())
      out.push_back("orbit " + id + ": w_unit must be a unit in the orbit field");
    if (extras.rank_pm < 1) out.push_back("orbit " + id + ": rank_pm must be positive");
    if (extras.kottwitz_sign != 1 && extras.kottwitz_sign != -1)
      out.push_back("orbit " + id + ": kottwitz sign must be +1 or -1");
  }
  return out;
}

RootSets root_sets(const SignContext& ctx) {
  RootSets rs;
  for (const OrbitInfo& o : ctx.os.list) {
    if (in_half_set(ctx, o)) rs.at_half_r.insert(o.id);
    if (in_minus_set(ctx, o)) {
      rs.at_half_r_minus.insert(o.id);
      if (!ctx.cov.in_levi(o.id)) rs.of_pair.insert(o.id);
    }
  }
  return rs;
}

std::string level_str(Level l) {
  switch (l) {
    case Level::G: return "G";
    case Level::Gprime: return "G'";
    case Level::H: return "H";
    case Level::Hprime: return "H'";
  }
  throw ValidationError("unknown level");
}

std::set<std::string> level_orbits(const SignContext& ctx, Level l) {
  std::set<std::string> out;
  switch (l) {
    case Level::G:
      for (const OrbitInfo& o : ctx.os.list) out.insert(o.id);
      return out;
    case Level::Gprime:
      return ctx.cov.levi_orbits;
    case Level::H:
      return centralizer_orbits({ctx.r, ctx.gamma}, ctx.os);
    case Level::Hprime:
      for (const std::string& id : centralizer_orbits({ctx.r, ctx.gamma}, ctx.os))
        if (ctx.cov.in_levi(id)) out.insert(id);
      return out;
  }
  throw ValidationError("unknown level");
}

int tilde_e(const SignContext& ctx, Level l) {
  const std::set<std::string> lv = level_orbits(ctx, l);
  long long count = 0;
  for (const OrbitInfo& o : ctx.os.list)
    if (lv.count(o.id) && in_minus_set(ctx, o)) ++count;
  return parity_sign(count);
}

int eps_unram(const SignContext& ctx, Level l) {
  const std::set<std::string> lv = level_orbits(ctx, l);
  int sign = 1;
  for (const OrbitInfo& o : ctx.os.list) {
    if (o.kind != OrbitKind::symmetric_unramified) continue;
    if (!lv.count(o.id) || !in_half_set(ctx, o)) continue;
    const OrbitValue& val = ctx.gamma.at(o.id);
    if (!depth_zero(val)) continue;  // rho is 1 there, so the factor is +1
    const Fq& field = orbit_field(ctx.rf, o);
    if (fq_norm_in_field(val.rho, field.k / 2) != fq_one(field))
      throw ValidationError("orbit " + o.id + ": depth-zero residue is not norm-one");
    sign *= fq_norm_one_sgn(val.rho);
  }
  return sign;
}

int eps_nosymm(const SignContext& ctx, Level l) {
  const std::set<std::string> lv = level_orbits(ctx, l);
  int sign = 1;
  std::set<std::string> seen;  // one factor per +-pair; both members agree
  for (const OrbitInfo& o : ctx.os.list) {
    if (o.symmetric() || seen.count(o.id)) continue;
    if (!lv.count(o.id) || !in_half_set(ctx, o)) continue;
    seen.insert(o.id);
    seen.insert(o.neg_id);
    const OrbitValue& val = ctx.gamma.at(o.id);
    if (depth_zero(val)) sign *= fq_sgn(val.rho);
  }
  return sign;
}

int eps_noram(const SignContext& ctx, Level l) {
  return eps_nosymm(ctx, l) * eps_unram(ctx, l);
}

int e_quot(const SignContext& ctx, Quotient which) {
  if (which == Quotient::Pi) return e_quot(ctx, Quotient::GG) * e_quot(ctx, Quotient::HH);
  const std::set<std::string> h = centralizer_orbits({ctx.r, ctx.gamma}, ctx.os);
  bool odd = false;
  for (const OrbitInfo& o : ctx.os.list) {
    if (ctx.cov.in_levi(o.id)) continue;
    if (which == Quotient::HH && !h.count(o.id)) continue;
    const OrbitValue& val = ctx.gamma.at(o.id);
    if (val.d.infinite) continue;
    const Rational ex = Rational(o.e) * (ctx.r - val.d.value);
    if (!is_integer(ex))
      throw ValidationError("orbit " + o.id + ": exponent e(r - d) is not an integer");
    if (boost::multiprecision::numerator(ex) % 2 != 0 && o.n % 2 != 0) odd = !odd;
  }
  return odd ? -1 : 1;
}

FourthRoot eps_ram(const SignContext& ctx, Quotient which) {
  if (which == Quotient::Pi)
    return eps_ram(ctx, Quotient::GG) / eps_ram(ctx, Quotient::HH);
  const std::set<std::string> h = centralizer_orbits({ctx.r, ctx.gamma}, ctx.os);
  FourthRoot out = FourthRoot::one();
  for (const OrbitInfo& o : ctx.os.list) {
    if (!o.ramified() || ctx.cov.in_levi(o.id) || !in_minus_set(ctx, o)) continue;
    if (which == Quotient::HH && !h.count(o.id)) continue;
    auto it = ctx.ram.find(o.id);
    if (it == ctx.ram.end())
      throw ValidationError("orbit " + o.id + ": ramified sign data missing");
    if (o.e % ctx.rf.p == 0)
      throw ValidationError("orbit " + o.id +
                            ": ramification index is divisible by the residue characteristic");
    const RamifiedExtras& extras = it->second;
    const Fq& field = orbit_field(ctx.rf, o);
    const OrbitValue& val = ctx.gamma.at(o.id);
    const FqElem half_e = fq_mul(fq_from_int(field, o.e), fq_inv(fq_from_int(field, 2)));
    const FqElem t = fq_mul(fq_mul(half_e, extras.w_unit),
                            fq_mul(ctx.cov.nu_of(o.id), *val.lambda));
    if (t.is_zero())
      throw ValidationError("orbit " + o.id + ": ramified sign residue t is zero");
    FourthRoot factor = gauss_sum(ctx.rf.q()).negated().pow(o.f);
    if (extras.rank_pm % 2 == 0) factor = factor.negated();  // (-1)^(rank_pm - 1)
    out = out * factor * FourthRoot::from_sign(fq_sgn(t)) *
          FourthRoot::from_sign(extras.kottwitz_sign);
  }
  return out;
}

SignReport assemble(const SignContext& ctx) {
  SignReport rep;
  for (Level l : {Level::G, Level::Gprime, Level::H, Level::Hprime}) {
    LevelSigns s;
    s.tilde_e = tilde_e(ctx, l);
    s.eps_unram = eps_unram(ctx, l);
    s.eps_nosymm = eps_nosymm(ctx, l);
    s.eps_noram = s.eps_unram * s.eps_nosymm;
    rep.levels[level_str(l)] = s;
  }
  auto ratio = [](const LevelSigns& a, const LevelSigns& b) {
    LevelSigns s;
    s.tilde_e = a.tilde_e * b.tilde_e;
    s.eps_unram = a.eps_unram * b.eps_unram;
    s.eps_nosymm = a.eps_nosymm * b.eps_nosymm;
    s.eps_noram = a.eps_noram * b.eps_noram;
    return s;
  };
  rep.quot_gg = ratio(rep.levels.at("G"), rep.levels.at("G'"));
  rep.quot_hh = ratio(rep.levels.at("H"), rep.levels.at("H'"));
  rep.quot_pi = ratio(rep.quot_gg, rep.quot_hh);
  rep.e_gg = e_quot(ctx, Quotient::GG);
  rep.e_hh = e_quot(ctx, Quotient::HH);
  rep.e_pi = rep.e_gg * rep.e_hh;
  rep.ram_gg = eps_ram(ctx, Quotient::GG);
  rep.ram_hh = eps_ram(ctx, Quotient::HH);
  rep.ram_pi = rep.ram_gg / rep.ram_hh;
  rep.composed = rep.ram_pi * FourthRoot::from_sign(rep.quot_pi.eps_noram) *
                 FourthRoot::from_sign(rep.quot_pi.tilde_e);
  return rep;
}

bool check_stable_sign_identity(const SignContext& ctx) {
  const int lhs = tilde_e(ctx, Level::G) * tilde_e(ctx, Level::Gprime) *
                  tilde_e(ctx, Level::H) * tilde_e(ctx, Level::Hprime);
  const int rhs = parity_sign(ctx.rk_G - ctx.rk_Gprime) *
                  parity_sign(ctx.rk_H - ctx.rk_Hprime) * e_quot(ctx, Quotient::Pi);
  return lhs == rhs;
}

SignContext transport_context(const SignContext& ctx, const Mat& w) {
  const TransportResult tr = weyl_transport(ctx.rd, ctx.gm, w, ctx.rf.q());
  SignContext moved;
  moved.rd = ctx.rd;
  moved.gm = tr.transported;
  moved.os = orbits(ctx.rd, build_group(ctx.rd, tr.transported), ctx.rf.q());
  moved.rf = ctx.rf;
  moved.x = transport_point(ctx.x, tr);
  moved.r = ctx.r;
  moved.gamma = transport_profile(ctx.gamma, tr);
  moved.cov = transport_covector(ctx.cov, tr);
  for (const auto& [id, extras] : ctx.ram) moved.ram[tr.orbit_map.at(id)] = extras;
  moved.rk_G = ctx.rk_G;
  moved.rk_Gprime = ctx.rk_Gprime;
  moved.rk_H = ctx.rk_H;
  moved.rk_Hprime = ctx.rk_Hprime;
  return moved;
}

bool check_stable_invariance(const SignContext& ctx, const Mat& w) {
  const SignContext moved = transport_context(ctx, w);
  for (Quotient q : {Quotient::GG, Quotient::HH, Quotient::Pi}) {
    if (e_quot(ctx, q) != e_quot(moved, q)) return false;
    if (eps_ram(ctx, q) != eps_ram(moved, q)) return false;
  }
  return true;
}

}  // namespace padchar
