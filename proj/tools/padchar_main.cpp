// padchar: scenario-driven driver for the exact character-formula toolkit.
//
//   padchar signs     <scenario.json>            sign calculus report
//   padchar disc      <scenario.json>            reduced-discriminant valuations
//   padchar mp-verify --system A1|A2|C2|B2       randomized cardinality checks
//   padchar char      <scenario.json> [--twisted|--stable]
//   padchar stability <scenario.json> [--twist SPEC] [--trials N]
//   padchar validate  <scenario.json>
//
// Every command accepts --report out.json for a machine-readable summary.
// Randomized commands take --seed (or the PADCHAR_SEED environment variable)
// and are deterministic given the seed.  Exit codes: 0 success, 1 validation
// failure, 2 computation mismatch.

#include <CLI11.hpp>
#include <json.hpp>

#include <padchar/harness.hpp>
#include <padchar/mp.hpp>
#include <padchar/scenario.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

using namespace padchar;
using Json = nlohmann::json;

namespace {

std::string sgn_str(int s) { return s > 0 ? "+1" : "-1"; }

std::string set_str(const std::set<std::string>& s) {
  std::string out = "{";
  for (const std::string& id : s) out += (out.size() > 1 ? ", " : "") + id;
  return out + "}";
}

void write_report(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write report " + path);
  out << j.dump(2) << "\n";
}

Json level_json(const LevelSigns& l) {
  return Json{{"tilde_e", l.tilde_e},
              {"eps_unram", l.eps_unram},
              {"eps_nosymm", l.eps_nosymm},
              {"eps_noram", l.eps_noram}};
}

Json mat_json(const Mat& m) { return Json(m); }

// ---- signs -----------------------------------------------------------------

int cmd_signs(const CookedScenario& c, const std::string& name,
              const std::string& report_path) {
  const SignReport rep = assemble(c.ctx);
  const RootSets rs = root_sets(c.ctx);

  std::cout << "scenario: " << name << " (base point " << c.ctx.x.name
            << ", r = " << rational_str(c.ctx.r) << ")\n";
  std::cout << "root sets: at_half_r = " << set_str(rs.at_half_r)
            << ", at_half_r_minus = " << set_str(rs.at_half_r_minus)
            << ", pair = " << set_str(rs.of_pair) << "\n";
  std::cout << "level   tilde_e  eps_unram  eps_nosymm  eps_noram\n";
  for (const std::string l : {"G", "G'", "H", "H'"}) {
    const LevelSigns& s = rep.levels.at(l);
    std::cout << l << (l.size() == 1 ? "     " : "    ") << "  " << sgn_str(s.tilde_e)
              << "       " << sgn_str(s.eps_unram) << "         " << sgn_str(s.eps_nosymm)
              << "          " << sgn_str(s.eps_noram) << "\n";
  }
  std::cout << "quotient pi: tilde_e = " << sgn_str(rep.quot_pi.tilde_e)
            << ", eps_unram = " << sgn_str(rep.quot_pi.eps_unram)
            << ", eps_nosymm = " << sgn_str(rep.quot_pi.eps_nosymm)
            << ", eps_noram = " << sgn_str(rep.quot_pi.eps_noram) << "\n";
  std::cout << "e: G/G' = " << sgn_str(rep.e_gg) << ", H/H' = " << sgn_str(rep.e_hh)
            << ", pi = " << sgn_str(rep.e_pi) << "\n";
  std::cout << "ram: G/G' = " << rep.ram_gg.str() << ", H/H' = " << rep.ram_hh.str()
            << ", pi = " << rep.ram_pi.str() << "\n";
  std::cout << "composed: " << rep.composed.str() << "\n";

  // per-orbit depth-zero contributions to the unramified sign
  Json contrib = Json::object();
  for (const std::string& id : rs.at_half_r) {
    const OrbitInfo& o = c.os.by_key(id);
    const OrbitValue& v = c.ctx.gamma.at(id);
    if (v.d.infinite || !(v.d.value == 0)) continue;
    if (o.kind == OrbitKind::symmetric_unramified) {
      const int s = fq_norm_one_sgn(v.rho);
      std::cout << "unram contribution: orbit " << id << " -> " << sgn_str(s) << "\n";
      contrib[id] = s;
    } else if (o.kind == OrbitKind::nonsymmetric && id >= o.neg_id) {
      const int s = fq_sgn(v.rho);
      std::cout << "nosymm contribution: pair {" << o.neg_id << ", " << id << "} -> "
                << sgn_str(s) << "\n";
      contrib[id] = s;
    }
  }

  Json j;
  j["command"] = "signs";
  j["scenario"] = name;
  j["root_sets"] = Json{{"at_half_r", rs.at_half_r},
                        {"at_half_r_minus", rs.at_half_r_minus},
                        {"pair", rs.of_pair}};
  Json levels = Json::object();
  for (const auto& [l, s] : rep.levels) levels[l] = level_json(s);
  j["levels"] = std::move(levels);
  j["quotients"] = Json{{"GG", level_json(rep.quot_gg)},
                        {"HH", level_json(rep.quot_hh)},
                        {"pi", level_json(rep.quot_pi)}};
  j["e"] = Json{{"GG", rep.e_gg}, {"HH", rep.e_hh}, {"pi", rep.e_pi}};
  j["ram"] = Json{{"GG", rep.ram_gg.str()}, {"HH", rep.ram_hh.str()}, {"pi", rep.ram_pi.str()}};
  j["composed"] = rep.composed.str();
  j["depth_zero_contributions"] = std::move(contrib);
  write_report(report_path, j);
  return 0;
}

// ---- disc ------------------------------------------------------------------

int cmd_disc(const CookedScenario& c, const std::string& name,
             const std::string& report_path) {
  const Rational vg = disc_val_gamma(c.ctx.gamma, c.os);
  const Rational vx = disc_val_xstar(c.ctx.cov, c.os);
  const bool split_ok = check_part_disc(Approximation{c.ctx.r, c.ctx.gamma}, c.os, c.rf);

  std::cout << "scenario: " << name << " (q = " << c.rf.q() << ")\n";
  std::cout << "ord |D_G(gamma)| = " << rational_str(vg) << "  (|D_G(gamma)| = q^-"
            << rational_str(vg) << ")\n";
  std::cout << "ord |D_G(X*)| = " << rational_str(vx) << "\n";
  std::cout << "head/tail factorization at r = " << rational_str(c.ctx.r) << ": "
            << (split_ok ? "ok" : "MISMATCH") << "\n";

  Json j;
  j["command"] = "disc";
  j["scenario"] = name;
  j["val_gamma"] = rational_str(vg);
  j["val_xstar"] = rational_str(vx);
  j["factorization_ok"] = split_ok;
  write_report(report_path, j);
  return split_ok ? 0 : 2;
}

// ---- mp-verify ---------------------------------------------------------------

struct SystemFixture {
  RootDatum rd;
  GaloisModel gm;
  long long q;
};

SystemFixture system_fixture(const std::string& system) {
  const Mat rot{{0, -1}, {1, -1}};
  if (system == "A1")
    return {make_root_datum(1, {{1}, {-1}}, {{2}, {-2}}),
            GaloisModel{{}, mat_identity(1), {}}, 5};
  if (system == "A2")
    return {make_root_datum(2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}},
                            {{2, -1}, {-2, 1}, {-1, 2}, {1, -2}, {1, 1}, {-1, -1}}),
            GaloisModel{{}, rot, {}}, 5};
  if (system == "C2")
    return {make_root_datum(
                2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}},
                {{2, -2}, {-2, 2}, {-1, 2}, {1, -2}, {0, 2}, {0, -2}, {1, 0}, {-1, 0}}),
            GaloisModel{{}, Mat{{-1, 0}, {0, -1}}, {}}, 3};
  if (system == "B2")
    return {make_root_datum(
                2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}},
                {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}}),
            GaloisModel{{}, mat_identity(2), {}}, 5};
  throw ValidationError("unknown root system " + system + " (expected A1, A2, C2, or B2)");
}

// f <= g, plus-free, negation-symmetric finiteness, pair sums in Z_alpha
void random_fg(std::mt19937_64& rng, const OrbitSet& os, DepthFunction& f,
               DepthFunction& g) {
  std::uniform_int_distribution<long long> base(-4, 8);
  std::uniform_int_distribution<long long> bump(0, 2);
  std::uniform_int_distribution<long long> skew(-2, 2);
  std::uniform_int_distribution<int> coin(0, 9);
  const Rational tf(base(rng), 2);
  f.torus_value = Depth::of(tf);
  g.torus_value = Depth::of(tf + Rational(bump(rng), 2));
  for (const OrbitInfo& o : os.list) {
    if (f.at.count(o.id)) continue;
    if (coin(rng) < 2) {
      f.at[o.id] = f.at[o.neg_id] = Depth::infinity();
      g.at[o.id] = g.at[o.neg_id] = Depth::infinity();
      continue;
    }
    const Rational fa(base(rng), 2 * o.e);
    const Rational fneg = fa + Rational(skew(rng), o.e);
    const long long parity = coin(rng) % 2;
    f.at[o.id] = Depth::of(fa);
    f.at[o.neg_id] = Depth::of(fneg);
    g.at[o.id] = Depth::of(fa + Rational(2 * bump(rng) + parity, 2 * o.e));
    g.at[o.neg_id] = Depth::of(fneg + Rational(2 * bump(rng) + parity, 2 * o.e));
  }
}

int cmd_mp_verify(const std::string& system, long long trials, std::uint64_t seed,
                  const std::string& report_path) {
  const SystemFixture fix = system_fixture(system);
  const ResidueField rf{fix.q, 1};
  const GaloisGroup gg = build_group(fix.rd, fix.gm);
  const OrbitSet os = orbits(fix.rd, gg, rf.q());
  const TorusLattice tl = TorusLattice::unramified(fix.rd.rank, rf.q());

  std::mt19937_64 rng(seed);
  long long gxf_pass = 0, const_pass = 0, cor_pass = 0;
  std::vector<std::string> failures;
  for (long long trial = 0; trial < trials; ++trial) {
    DepthFunction f, g;
    random_fg(rng, os, f, g);
    const ApartmentPoint pt = random_point(rng, os);
    try {
      if (verify_gxf_card(pt, os, f, g, tl, rf)) ++gxf_pass;
      else failures.push_back("gxf trial " + std::to_string(trial) + ": sides differ");
    } catch (const ValidationError& e) {
      failures.push_back("gxf trial " + std::to_string(trial) + ": " + e.what());
    }

    SignContext ctx;
    ctx.rd = fix.rd;
    ctx.gm = fix.gm;
    ctx.os = os;
    ctx.rf = rf;
    ctx.x = random_point(rng, os);
    ctx.r = Rational(1 + static_cast<long long>(rng() % 3));
    ctx.gamma = random_profile(rng, os, rf);
    ctx.cov = random_covector(rng, ctx.r, os, rf);
    try {
      index_product_const(ctx, tl);
      ++const_pass;
    } catch (const ValidationError& e) {
      failures.push_back("const trial " + std::to_string(trial) + ": " + e.what());
    }
    try {
      index_product_cor(ctx, tl);
      ++cor_pass;
    } catch (const ValidationError& e) {
      failures.push_back("cor trial " + std::to_string(trial) + ": " + e.what());
    }
  }

  std::cout << "system " << system << " (q = " << fix.q << "), seed " << seed << ": "
            << "gxf " << gxf_pass << "/" << trials << ", const " << const_pass << "/"
            << trials << ", cor " << cor_pass << "/" << trials << "\n";
  for (const std::string& msg : failures) std::cerr << msg << "\n";

  Json j;
  j["command"] = "mp-verify";
  j["system"] = system;
  j["seed"] = seed;
  j["trials"] = trials;
  j["gxf_pass"] = gxf_pass;
  j["const_pass"] = const_pass;
  j["cor_pass"] = cor_pass;
  j["failures"] = failures;
  write_report(report_path, j);
  return failures.empty() ? 0 : 2;
}

// ---- char --------------------------------------------------------------------

int cmd_char(const CookedScenario& c, const std::string& name, bool twisted, bool stable,
             const std::string& report_path) {
  const std::string mode = stable ? "stable" : twisted ? "twisted" : "plain";

  // list every missing oracle entry up front
  std::vector<std::string> missing;
  std::vector<std::pair<std::string, bool>> contains;
  for (const ConjClass& cls : c.table.classes)
    contains.emplace_back(cls.class_id, class_contains_head(c.ctx, cls));
  const OrbitalOracle& oracle = stable ? c.stable_orbital : c.orbital;
  std::set<std::string> seen_stable;
  for (std::size_t i = 0; i < c.table.classes.size(); ++i) {
    if (!contains[i].second) continue;
    const ConjClass& cls = c.table.classes[i];
    if (!c.theta.values.count(cls.class_id))
      missing.push_back("theta value for class " + cls.class_id);
    const bool first_of_stable = seen_stable.insert(cls.stable_id).second;
    const bool needs_orbital = stable ? first_of_stable : true;
    if (needs_orbital && !oracle.entries.count({cls.class_id, c.element}))
      missing.push_back((stable ? std::string("stable orbital value for class ")
                                : std::string("orbital value for class ")) +
                        cls.class_id + " (element " + c.element + ")");
  }
  if (!missing.empty()) {
    for (const std::string& m : missing) std::cerr << "missing " << m << "\n";
    return 1;
  }

  const CharResult res = stable
                             ? eval_stable_sum(c.ctx, c.table, c.theta, c.stable_orbital,
                                               c.element)
                             : twisted ? eval_twisted_char(c.ctx, c.table, c.theta,
                                                           c.orbital, c.element)
                                       : eval_char(c.ctx, c.table, c.theta, c.orbital,
                                                   c.element);

  std::cout << "scenario: " << name << " (" << mode << " induction)\n";
  std::cout << "value: " << res.total.str() << "\n";
  for (const CharTerm& t : res.terms)
    std::cout << "  class " << t.class_id << ": sign " << t.sign.str() << ", noram "
              << sgn_str(t.noram) << ", theta " << qi_str(t.character) << ", orbital "
              << t.orbital.as_value().str() << ", term " << t.value.str() << "\n";
  std::string skipped;
  for (const auto& [id, in] : contains)
    if (!in) skipped += (skipped.empty() ? "" : ", ") + id;
  if (!skipped.empty())
    std::cout << "classes not carrying the head: " << skipped << "\n";

  Json j;
  j["command"] = "char";
  j["scenario"] = name;
  j["mode"] = mode;
  j["value"] = res.total.str();
  Json terms = Json::array();
  for (const CharTerm& t : res.terms)
    terms.push_back(Json{{"class", t.class_id},
                         {"sign", t.sign.str()},
                         {"noram", t.noram},
                         {"theta", qi_str(t.character)},
                         {"orbital", t.orbital.as_value().str()},
                         {"term", t.value.str()}});
  j["terms"] = std::move(terms);
  write_report(report_path, j);
  return 0;
}

// ---- stability -----------------------------------------------------------------

Mat parse_twist(const std::string& spec, const CookedScenario& c) {
  if (spec == "identity") return mat_identity(c.ctx.rd.rank);
  if (spec == "minus") {
    Mat m = mat_identity(c.ctx.rd.rank);
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = -1;
    return m;
  }
  if (spec.rfind("refl:", 0) == 0)
    return reflection_matrix(c.ctx.rd, parse_vec_key(spec.substr(5)));
  if (!spec.empty() && spec.front() == '[') {
    Json j;
    try {
      j = Json::parse(spec);
    } catch (const std::exception& e) {
      throw ValidationError(std::string("twist: invalid matrix: ") + e.what());
    }
    Mat m;
    for (const Json& row : j) {
      Vec r;
      for (const Json& v : row) {
        if (!v.is_number_integer()) throw ValidationError("twist: matrix entries must be integers");
        r.push_back(v.get<long long>());
      }
      m.push_back(std::move(r));
    }
    return m;
  }
  throw ValidationError("unrecognized twist " + spec +
                        " (expected identity, minus, refl:<root>, or a JSON matrix)");
}

int cmd_stability(const CookedScenario& c, const std::string& name,
                  const std::string& twist_spec, long long trials, std::uint64_t seed,
                  const std::string& report_path) {
  const CharValue base =
      eval_stable_sum(c.ctx, c.table, c.theta, c.stable_orbital, c.element).total;
  std::cout << "scenario: " << name << ", stable sum " << base.str() << "\n";

  std::vector<Mat> twists;
  if (!twist_spec.empty()) twists.push_back(parse_twist(twist_spec, c));
  if (trials > 0) {
    const std::vector<Mat> pool = transportable_weyl(c.ctx.rd, c.ctx.gm, c.rf.q());
    std::mt19937_64 rng(seed);
    for (long long i = 0; i < trials; ++i) twists.push_back(pool[rng() % pool.size()]);
  }

  bool all_equal = true;
  Json twist_rows = Json::array();
  for (const Mat& w : twists) {
    const MovedScenario moved = transport_scenario(c.ctx, c.table, w);
    const CharValue other =
        eval_stable_sum(moved.ctx, moved.table, c.theta, c.stable_orbital, c.element).total;
    const bool equal = other == base;
    all_equal = all_equal && equal;
    std::cout << "twist " << mat_json(w).dump() << ": "
              << (equal ? "stable sums agree" : "MISMATCH: " + other.str()) << "\n";
    twist_rows.push_back(Json{{"w", mat_json(w)}, {"equal", equal}, {"value", other.str()}});
  }

  // anti-test: keep the unramified sign and watch stability fail across
  // classes whose signs differ
  const std::map<std::string, int> factors = noram_factors(c.ctx, c.table);
  const bool r_even = is_integer(c.ctx.r / 2);
  std::string neg_class, pos_class;
  for (const auto& [id, s] : factors) (s < 0 ? neg_class : pos_class) = id;
  Json anti;
  anti["noram"] = factors;
  anti["r_parity"] = r_even ? "even" : "odd";
  if (!neg_class.empty() && !pos_class.empty()) {
    const CharValue plain = eval_char(c.ctx, c.table, c.theta, c.orbital, c.element).total;
    const CharValue twisted =
        eval_twisted_char(c.ctx, c.table, c.theta, c.orbital, c.element).total;
    std::cout << "anti-test (r " << (r_even ? "even" : "odd")
              << "): without the twist the unramified sign is " << sgn_str(-1)
              << " at class " << neg_class << " but " << sgn_str(1) << " at class "
              << pos_class << "; plain sum " << plain.str() << " vs twisted "
              << twisted.str() << "\n";
    anti["discrepancy"] = Json{{"negative_class", neg_class},
                               {"positive_class", pos_class},
                               {"ratio", -1},
                               {"plain", plain.str()},
                               {"twisted", twisted.str()}};
  } else {
    std::cout << "anti-test: the unramified sign is constant across the classes here\n";
  }

  Json j;
  j["command"] = "stability";
  j["scenario"] = name;
  j["stable_sum"] = base.str();
  j["twists"] = std::move(twist_rows);
  j["anti_test"] = std::move(anti);
  write_report(report_path, j);
  return all_equal ? 0 : 2;
}

// ---- validate -------------------------------------------------------------------

int cmd_validate(const Scenario& sc, const std::string& report_path) {
  const std::vector<std::string> diags = validate_scenario(sc);
  const Scenario again = parse_scenario(serialize_scenario(sc));
  const bool round_trip = again == sc;
  if (diags.empty() && round_trip) {
    std::cout << "scenario valid; canonical form round-trips\n";
  } else {
    for (const std::string& d : diags) std::cerr << d << "\n";
    if (!round_trip) std::cerr << "serialization round-trip failed\n";
  }
  Json j;
  j["command"] = "validate";
  j["diagnostics"] = diags;
  j["round_trip"] = round_trip;
  write_report(report_path, j);
  return diags.empty() && round_trip ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ingredients of positive-depth character formulas"};
  app.require_subcommand(1);

  std::string scenario_path, report_path, system = "A1", twist_spec;
  long long trials = 200;
  std::uint64_t seed = 12345;

  auto add_common = [&](CLI::App* cmd, bool with_scenario) {
    if (with_scenario)
      cmd->add_option("scenario", scenario_path, "scenario JSON file")->required();
    cmd->add_option("--report", report_path, "write a JSON report here");
  };

  CLI::App* signs = app.add_subcommand("signs", "sign calculus of the pair");
  add_common(signs, true);
  CLI::App* disc = app.add_subcommand("disc", "reduced-discriminant valuations");
  add_common(disc, true);
  CLI::App* mp = app.add_subcommand("mp-verify", "randomized cardinality identities");
  add_common(mp, false);
  mp->add_option("--system", system, "root system: A1, A2, C2, or B2");
  mp->add_option("--trials", trials, "number of randomized instances");
  mp->add_option("--seed", seed, "RNG seed")->envname("PADCHAR_SEED");
  CLI::App* chr = app.add_subcommand("char", "evaluate the character sum");
  add_common(chr, true);
  bool twisted = false, stable = false;
  chr->add_flag("--twisted", twisted, "drop the unramified quadratic sign");
  chr->add_flag("--stable", stable, "stable sum over stable classes");
  CLI::App* stab = app.add_subcommand("stability", "compare stable sums across twists");
  add_common(stab, true);
  stab->add_option("--twist", twist_spec,
                   "identity | minus | refl:<root key> | JSON matrix");
  long long stab_trials = 0;
  stab->add_option("--trials", stab_trials, "additional random twists");
  stab->add_option("--seed", seed, "RNG seed")->envname("PADCHAR_SEED");
  CLI::App* val = app.add_subcommand("validate", "audit a scenario file");
  add_common(val, true);

  CLI11_PARSE(app, argc, argv);

  try {
    if (mp->parsed()) return cmd_mp_verify(system, trials, seed, report_path);
    const Scenario sc = load_scenario(scenario_path);
    if (val->parsed()) return cmd_validate(sc, report_path);
    const CookedScenario cooked = cook_scenario(sc);
    const std::string name = sc.name.empty() ? scenario_path : sc.name;
    if (signs->parsed()) return cmd_signs(cooked, name, report_path);
    if (disc->parsed()) return cmd_disc(cooked, name, report_path);
    if (chr->parsed()) {
      if (twisted && stable)
        throw ValidationError("--twisted and --stable are mutually exclusive");
      return cmd_char(cooked, name, twisted, stable, report_path);
    }
    if (stab->parsed())
      return cmd_stability(cooked, name, twist_spec, stab_trials, seed, report_path);
  } catch (const ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
