#include <padchar/charform.hpp>

#include <set>
#include <utility>

namespace padchar {

namespace {

void accumulate(std::map<std::string, QI>& symbols, const std::string& tag, const QI& coeff) {
  auto [it, fresh] = symbols.try_emplace(tag, coeff);
  if (!fresh) it->second = it->second + coeff;
  if (it->second.is_zero()) symbols.erase(it);
}

bool same_profile(const ElementProfile& a, const ElementProfile& b) {
  return a.bounded == b.bounded && a.entries == b.entries;
}

// The context the class terms are evaluated in: gamma cut to its head.
SignContext head_context(const SignContext& ctx) {
  SignContext h = ctx;
  h.gamma = head_profile(Approximation{ctx.r, ctx.gamma}, ctx.os, ctx.rf);
  return h;
}

bool well_shaped(const Mat& w, int rank) {
  if (static_cast<int>(w.size()) != rank) return false;
  for (const Vec& row : w)
    if (static_cast<int>(row.size()) != rank) return false;
  return true;
}

// The head context moved onto the class: the pair's data is transported
// along w (gamma comes along too, but a class only contributes when the
// transported head is the head, so on contributors gamma is unchanged), and
// an override point replaces the transported one.
struct ClassView {
  bool contains = false;
  SignContext ctx;
};

ClassView view_class(const SignContext& hctx, const ConjClass& c) {
  ClassView out;
  if (!well_shaped(c.w, hctx.rd.rank))
    throw ValidationError("class " + c.class_id + ": the transport must be a rank x rank matrix");
  if (c.w == mat_identity(hctx.rd.rank)) {
    out.contains = true;
    out.ctx = hctx;
    if (c.point) out.ctx.x = *c.point;
    return out;
  }
  TransportResult tr;
  try {
    tr = weyl_transport(hctx.rd, hctx.gm, c.w, hctx.rf.q());
  } catch (const std::exception& e) {
    throw ValidationError("class " + c.class_id + ": " + e.what());
  }
  for (const auto& [from, to] : tr.orbit_map)
    if (!hctx.os.has_key(to))
      throw ValidationError("class " + c.class_id +
                            ": transport does not preserve the orbit classes");
  SignContext moved = transport_context(hctx, c.w);
  out.contains = same_profile(moved.gamma, hctx.gamma);
  if (!out.contains) return out;
  if (c.point) moved.x = *c.point;
  out.ctx = std::move(moved);
  return out;
}

void require_unique_ids(const ConjClassTable& t) {
  std::set<std::string> seen;
  for (const ConjClass& c : t.classes)
    if (!seen.insert(c.class_id).second)
      throw ValidationError("duplicate class id " + c.class_id);
}

int rank_parity_sign(long long rk) { return rk % 2 == 0 ? 1 : -1; }

const QI& character_of(const CharOracle& chi, const std::string& class_id) {
  auto it = chi.values.find(class_id);
  if (it == chi.values.end()) throw ValidationError("no character value for class " + class_id);
  return it->second;
}

const OracleValue& orbital_of(const OrbitalOracle& orb, const std::string& class_id,
                              const std::string& element_id) {
  auto it = orb.entries.find({class_id, element_id});
  if (it == orb.entries.end())
    throw ValidationError(std::string("no ") + (orb.stable_mode ? "stable " : "") +
                          "orbital value for class " + class_id + " (element " + element_id +
                          ")");
  return it->second;
}

enum class Mode { plain, twisted };

CharResult eval_classes(const SignContext& ctx, const ConjClassTable& t, const CharOracle& chi,
                        const OrbitalOracle& orb, const std::string& element_id, Mode mode) {
  if (orb.stable_mode)
    throw ValidationError("class evaluation needs a class-mode orbital oracle");
  require_unique_ids(t);
  const SignContext hctx = head_context(ctx);
  CharResult res;
  for (const ConjClass& c : t.classes) {
    const ClassView view = view_class(hctx, c);
    if (!view.contains) continue;
    const SignReport rep = assemble(view.ctx);
    CharTerm term;
    term.class_id = c.class_id;
    term.noram = rep.quot_pi.eps_noram;
    term.sign = mode == Mode::plain ? rep.composed
                                    : rep.ram_pi * FourthRoot::from_sign(rep.quot_pi.tilde_e);
    term.character = character_of(chi, c.class_id);
    term.orbital = orbital_of(orb, c.class_id, element_id);
    term.value = term.orbital.as_value().scaled(QI::of(term.sign) * term.character);
    res.total = res.total + term.value;
    res.terms.push_back(std::move(term));
  }
  return res;
}

}  // namespace

CharValue CharValue::of(const QI& c) {
  CharValue v;
  v.constant = c;
  return v;
}

CharValue CharValue::symbol(const std::string& tag, const QI& coeff) {
  CharValue v;
  if (!coeff.is_zero()) v.symbols[tag] = coeff;
  return v;
}

CharValue CharValue::operator+(const CharValue& o) const {
  CharValue out = *this;
  out.constant = out.constant + o.constant;
  for (const auto& [tag, coeff] : o.symbols) accumulate(out.symbols, tag, coeff);
  return out;
}

CharValue CharValue::scaled(const QI& c) const {
  CharValue out;
  if (c.is_zero()) return out;
  out.constant = constant * c;
  for (const auto& [tag, coeff] : symbols) out.symbols.emplace(tag, coeff * c);
  return out;
}

bool CharValue::operator==(const CharValue& o) const {
  return constant == o.constant && symbols == o.symbols;
}

bool CharValue::is_zero() const { return constant.is_zero() && symbols.empty(); }

std::string CharValue::str() const {
  if (is_zero()) return "0";
  std::vector<std::string> pieces;
  if (!constant.is_zero()) pieces.push_back(qi_str(constant));
  for (const auto& [tag, coeff] : symbols) {
    if (coeff == QI::of(Rational(1))) {
      pieces.push_back("[" + tag + "]");
    } else if (coeff == QI::of(Rational(-1))) {
      pieces.push_back("-[" + tag + "]");
    } else {
      std::string cs = qi_str(coeff);
      if (coeff.re != 0 && coeff.im != 0) cs = "(" + cs + ")";
      pieces.push_back(cs + " [" + tag + "]");
    }
  }
  std::string out = pieces.front();
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].front() == '-')
      out += " - " + pieces[i].substr(1);
    else
      out += " + " + pieces[i];
  }
  return out;
}

OracleValue OracleValue::number(const QI& v) {
  OracleValue o;
  o.value = v;
  return o;
}

OracleValue OracleValue::symbol(const std::string& tag, const QI& coeff) {
  OracleValue o;
  o.value = coeff;
  o.tag = tag;
  return o;
}

CharValue OracleValue::as_value() const {
  return tag.empty() ? CharValue::of(value) : CharValue::symbol(tag, value);
}

bool OracleValue::operator==(const OracleValue& o) const {
  return value == o.value && tag == o.tag;
}

std::vector<std::string> validate_table(const SignContext& ctx, const ConjClassTable& t) {
  std::vector<std::string> out;
  const Mat id = mat_identity(ctx.rd.rank);
  std::set<std::string> seen;
  std::map<std::string, std::pair<bool, std::string>> group_keys;  // group -> (rational, stable)
  bool unnamed = false;
  bool base_found = false;
  std::set<std::string> rational_groups;
  for (const ConjClass& c : t.classes) {
    if (c.class_id.empty()) {
      if (!unnamed) out.push_back("every class needs a nonempty id");
      unnamed = true;
      continue;
    }
    if (!seen.insert(c.class_id).second) out.push_back("duplicate class id " + c.class_id);
    if (c.group_id.empty() || c.stable_id.empty())
      out.push_back("class " + c.class_id + ": grouping keys must be nonempty");
    const auto [it, fresh] =
        group_keys.try_emplace(c.group_id, std::make_pair(c.rational, c.stable_id));
    if (!fresh) {
      if (it->second.first != c.rational)
        out.push_back("rational orbit " + c.group_id +
                      " mixes rational and stable-only classes");
      if (it->second.second != c.stable_id)
        out.push_back("rational orbit " + c.group_id + " splits across stable classes");
    }
    if (c.rational && !c.group_id.empty()) rational_groups.insert(c.group_id);
    if (!well_shaped(c.w, ctx.rd.rank)) {
      out.push_back("class " + c.class_id + ": the transport must be a rank x rank matrix");
    } else if (!(c.w == id)) {
      try {
        const TransportResult tr = weyl_transport(ctx.rd, ctx.gm, c.w, ctx.rf.q());
        for (const auto& [from, to] : tr.orbit_map)
          if (!ctx.os.has_key(to)) {
            out.push_back("class " + c.class_id +
                          ": transport does not preserve the orbit classes");
            break;
          }
      } catch (const std::exception& e) {
        out.push_back("class " + c.class_id + ": " + e.what());
      }
    } else if (c.rational) {
      base_found = true;
    }
    if (c.point)
      for (const OrbitInfo& o : ctx.os.list)
        if (c.point->cosets.count(o.id) == 0) {
          out.push_back("class " + c.class_id + ": override point is missing orbit " + o.id);
          break;
        }
  }
  if (!base_found) out.push_back("no rational base class with the identity transport");
  if (rational_groups.size() > 1)
    out.push_back("rational classes span more than one rational orbit");
  return out;
}

bool class_contains_head(const SignContext& ctx, const ConjClass& c) {
  return view_class(head_context(ctx), c).contains;
}

CharResult eval_char(const SignContext& ctx, const ConjClassTable& t, const CharOracle& chi,
                     const OrbitalOracle& orb, const std::string& element_id) {
  return eval_classes(ctx, t, chi, orb, element_id, Mode::plain);
}

CharResult eval_twisted_char(const SignContext& ctx, const ConjClassTable& t,
                             const CharOracle& chi, const OrbitalOracle& orb,
                             const std::string& element_id) {
  if (!ctx.cov.levi_orbits.empty())
    throw ValidationError("twisted induction needs a toral pair");
  return eval_classes(ctx, t, chi, orb, element_id, Mode::twisted);
}

CharResult eval_stable_sum(const SignContext& ctx, const ConjClassTable& t,
                           const CharOracle& chi, const OrbitalOracle& orb,
                           const std::string& element_id) {
  if (!ctx.cov.levi_orbits.empty()) throw ValidationError("stable sums need a toral pair");
  if (build_group(ctx.rd, ctx.gm).inertia.size() != 1)
    throw ValidationError("stable sums need a Galois model with trivial inertia");
  if (!orb.stable_mode)
    throw ValidationError("stable sums need a stable-mode orbital oracle");
  require_unique_ids(t);
  const SignContext hctx = head_context(ctx);

  struct Member {
    const ConjClass* c;
    ClassView view;
  };
  std::vector<std::string> order;
  std::map<std::string, std::vector<Member>> groups;
  for (const ConjClass& c : t.classes) {
    auto [it, fresh] = groups.try_emplace(c.stable_id);
    if (fresh) order.push_back(c.stable_id);
    it->second.push_back(Member{&c, view_class(hctx, c)});
  }

  CharResult res;
  for (const std::string& sid : order) {
    const std::vector<Member>& members = groups[sid];
    bool any = false;
    bool all = true;
    for (const Member& m : members) {
      any = any || m.view.contains;
      all = all && m.view.contains;
    }
    if (!any) continue;
    if (!all)
      throw ValidationError("stable class " + sid +
                            " mixes classes containing and avoiding the head");
    const Member& rep = members.front();
    if (!check_stable_sign_identity(rep.view.ctx))
      throw ValidationError("stable sign identity fails on class " + rep.c->class_id +
                            "; check the declared ranks");
    const SignReport srep = assemble(rep.view.ctx);
    CharTerm term;
    term.class_id = rep.c->class_id;
    term.noram = srep.quot_pi.eps_noram;
    term.sign = srep.ram_pi * FourthRoot::from_sign(srep.e_pi) *
                FourthRoot::from_sign(rank_parity_sign(ctx.rk_H));
    term.character = character_of(chi, rep.c->class_id);
    term.orbital = orbital_of(orb, rep.c->class_id, element_id);
    for (const Member& m : members) {
      auto cit = chi.values.find(m.c->class_id);
      if (cit != chi.values.end() && !(cit->second == term.character))
        throw ValidationError("character values differ within stable class " + sid);
      auto oit = orb.entries.find({m.c->class_id, element_id});
      if (oit != orb.entries.end() && !(oit->second == term.orbital))
        throw ValidationError("stable orbital values differ within stable class " + sid);
    }
    term.value = term.orbital.as_value().scaled(QI::of(term.sign) * term.character);
    res.total = res.total + term.value;
    res.terms.push_back(std::move(term));
  }
  return res;
}

std::map<std::string, int> noram_factors(const SignContext& ctx, const ConjClassTable& t) {
  require_unique_ids(t);
  const SignContext hctx = head_context(ctx);
  std::map<std::string, int> out;
  for (const ConjClass& c : t.classes) {
    const ClassView view = view_class(hctx, c);
    if (!view.contains) continue;
    out[c.class_id] = assemble(view.ctx).quot_pi.eps_noram;
  }
  return out;
}

MovedScenario transport_scenario(const SignContext& ctx, const ConjClassTable& t,
                                 const Mat& w) {
  const TransportResult tr = weyl_transport(ctx.rd, ctx.gm, w, ctx.rf.q());
  MovedScenario out;
  out.ctx = transport_context(ctx, w);
  const Mat winv = mat_inverse(w);
  for (const ConjClass& c : t.classes) {
    ConjClass moved = c;
    moved.w = mat_mul(mat_mul(w, c.w), winv);
    if (c.point) moved.point = transport_point(*c.point, tr);
    out.table.classes.push_back(std::move(moved));
  }
  return out;
}

bool stability_check(const SignContext& ctx, const ConjClassTable& t, const CharOracle& chi,
                     const OrbitalOracle& orb, const std::string& element_id, const Mat& w) {
  const CharResult base = eval_stable_sum(ctx, t, chi, orb, element_id);
  const MovedScenario ms = transport_scenario(ctx, t, w);
  const CharResult moved = eval_stable_sum(ms.ctx, ms.table, chi, orb, element_id);
  return base.total == moved.total;
}

}  // namespace padchar
