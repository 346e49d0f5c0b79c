#include <padchar/scenario.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <utility>

namespace padchar {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw ValidationError("scenario: " + msg); }

const Json& need(const Json& o, const std::string& key) {
  if (!o.is_object() || !o.contains(key)) fail("missing field " + key);
  return o.at(key);
}

std::string want_string(const Json& v, const std::string& what) {
  if (!v.is_string()) fail(what + " must be a string");
  return v.get<std::string>();
}

long long want_int(const Json& v, const std::string& what) {
  if (!v.is_number_integer()) fail(what + " must be an integer");
  return v.get<long long>();
}

bool want_bool(const Json& v, const std::string& what) {
  if (!v.is_boolean()) fail(what + " must be a boolean");
  return v.get<bool>();
}

Rational want_rational(const Json& v, const std::string& what) {
  return parse_rational(want_string(v, what));
}

Depth want_depth(const Json& v, const std::string& what) {
  const std::string s = want_string(v, what);
  if (s == "inf") return Depth::infinity();
  if (!s.empty() && s.back() == '+')
    return Depth::of_plus(parse_rational(s.substr(0, s.size() - 1)));
  return Depth::of(parse_rational(s));
}

std::vector<long long> want_coeffs(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of integers");
  std::vector<long long> out;
  for (const Json& e : v) out.push_back(want_int(e, what));
  return out;
}

Mat want_mat(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of integer rows");
  Mat out;
  for (const Json& row : v) out.push_back(want_coeffs(row, what));
  return out;
}

std::vector<Mat> want_mats(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of matrices");
  std::vector<Mat> out;
  for (const Json& m : v) out.push_back(want_mat(m, what));
  return out;
}

std::vector<Vec> want_vecs(const Json& v, const std::string& what) {
  if (!v.is_array()) fail(what + " must be an array of integer vectors");
  std::vector<Vec> out;
  for (const Json& e : v) out.push_back(want_coeffs(e, what));
  return out;
}

OracleValue want_oracle_value(const Json& v, const std::string& what) {
  if (v.contains("symbol")) {
    const std::string tag = want_string(v.at("symbol"), what + " symbol");
    QI coeff = QI::of(Rational(1));
    if (v.contains("coeff")) coeff = parse_qi(want_string(v.at("coeff"), what + " coeff"));
    return OracleValue::symbol(tag, coeff);
  }
  return OracleValue::number(parse_qi(want_string(need(v, "value"), what + " value")));
}

void read_oracle_entries(const Json& v, const std::string& what,
                         std::map<std::pair<std::string, std::string>, OracleValue>& out) {
  if (!v.is_array()) fail(what + " must be an array of entries");
  for (const Json& e : v) {
    const std::string cls = want_string(need(e, "class"), what + " class");
    const std::string elem = want_string(need(e, "element"), what + " element");
    if (!out.emplace(std::make_pair(cls, elem), want_oracle_value(e, what)).second)
      fail("duplicate " + what + " entry for class " + cls + " (element " + elem + ")");
  }
}

Json from_coeffs(const std::vector<long long>& c) { return Json(c); }

Json from_mat(const Mat& m) {
  Json out = Json::array();
  for (const Vec& row : m) out.push_back(from_coeffs(row));
  return out;
}

Json from_mats(const std::vector<Mat>& ms) {
  Json out = Json::array();
  for (const Mat& m : ms) out.push_back(from_mat(m));
  return out;
}

Json from_vecs(const std::vector<Vec>& vs) {
  Json out = Json::array();
  for (const Vec& v : vs) out.push_back(from_coeffs(v));
  return out;
}

Json from_oracle_entries(const std::map<std::pair<std::string, std::string>, OracleValue>& m) {
  Json out = Json::array();
  for (const auto& [key, value] : m) {
    Json e;
    e["class"] = key.first;
    e["element"] = key.second;
    if (value.tag.empty()) {
      e["value"] = qi_str(value.value);
    } else {
      e["symbol"] = value.tag;
      e["coeff"] = qi_str(value.value);
    }
    out.push_back(e);
  }
  return out;
}

bool depth_is_zero(const Depth& d) { return !d.infinite && !d.plus && d.value == 0; }

}  // namespace

CookedScenario cook_scenario(const Scenario& sc) {
  CookedScenario out;
  RootDatum rd = make_root_datum(sc.rank, sc.roots, sc.coroots);
  GaloisModel gm{sc.inertia, sc.frobenius, sc.extra};
  out.rf = ResidueField{sc.p, static_cast<int>(sc.f)};
  out.gg = build_group(rd, gm);
  out.os = orbits(rd, out.gg, out.rf.q());

  for (const auto& [name, cosets] : sc.points)
    out.points.emplace(name, point_from_cosets(name, cosets, out.os));
  if (!out.points.count(sc.x))
    throw ValidationError("scenario: x names no point (" + sc.x + ")");

  ElementProfile profile;
  for (const auto& [id, raw] : sc.gamma) {
    const Fq& field = orbit_field(out.rf, out.os.by_key(id));
    OrbitValue v;
    v.d = raw.d;
    v.rho = raw.rho ? fq_from_coeffs(field, *raw.rho) : fq_one(field);
    if (raw.lambda)
      v.lambda = fq_from_coeffs(field, *raw.lambda);
    else if (depth_is_zero(v.d))
      v.lambda = fq_sub(v.rho, fq_one(field));
    profile.entries[id] = v;
  }
  profile = complete_negatives(profile, out.os, out.rf);

  std::map<std::string, RawCovectorEntry> raw_cov;
  for (const std::string& id : sc.levi) {
    if (sc.nu.count(id))
      throw ValidationError("scenario: orbit " + id +
                            " is both on the Levi and carries a residue");
    raw_cov[id] = RawCovectorEntry{Depth::infinity(), {}};
  }
  for (const auto& [id, coeffs] : sc.nu)
    raw_cov[id] = RawCovectorEntry{
        Depth::of(-sc.depth_r), fq_from_coeffs(orbit_field(out.rf, out.os.by_key(id)), coeffs)};

  SignContext ctx;
  ctx.rd = std::move(rd);
  ctx.gm = std::move(gm);
  ctx.os = out.os;
  ctx.rf = out.rf;
  ctx.x = out.points.at(sc.x);
  ctx.r = sc.depth_r;
  ctx.gamma = std::move(profile);
  ctx.cov = make_covector(sc.depth_r, raw_cov, out.os, out.rf);
  for (const auto& [id, ex] : sc.ramified_extras) {
    RamifiedExtras e;
    e.w_unit = fq_from_coeffs(orbit_field(out.rf, out.os.by_key(id)), ex.w_unit);
    e.rank_pm = ex.rank_pm;
    e.kottwitz_sign = ex.kottwitz_sign;
    ctx.ram[id] = std::move(e);
  }
  ctx.rk_G = sc.ranks.G;
  ctx.rk_Gprime = sc.ranks.Gprime;
  ctx.rk_H = sc.ranks.H;
  ctx.rk_Hprime = sc.ranks.Hprime;
  const auto problems = validate_context(ctx);
  if (!problems.empty()) throw ValidationError("context: " + problems.front());
  out.ctx = std::move(ctx);

  for (const ScenarioClassSpec& spec : sc.classes) {
    ConjClass c;
    c.class_id = spec.id;
    c.w = spec.w;
    c.rational = spec.rational;
    c.group_id = spec.group;
    c.stable_id = spec.stable;
    if (!spec.point.empty()) {
      const auto it = out.points.find(spec.point);
      if (it == out.points.end())
        throw ValidationError("class " + spec.id + ": unknown point " + spec.point);
      c.point = it->second;
    }
    out.table.classes.push_back(std::move(c));
  }

  out.theta.values = sc.theta_values;
  out.orbital.entries = sc.orbital;
  out.stable_orbital.entries = sc.stable_orbital;
  out.stable_orbital.stable_mode = true;
  out.element = sc.element;
  return out;
}

std::vector<std::string> validate_scenario(const Scenario& sc) {
  std::vector<std::string> out;
  CookedScenario cooked;
  try {
    cooked = cook_scenario(sc);
  } catch (const ValidationError& e) {
    out.push_back(e.what());
    return out;
  }

  if (!cooked.table.classes.empty()) {
    for (std::string& d : validate_table(cooked.ctx, cooked.table)) out.push_back(std::move(d));
    std::set<std::string> ids;
    for (const ConjClass& c : cooked.table.classes) ids.insert(c.class_id);
    for (const auto& [id, v] : sc.theta_values) {
      (void)v;
      if (!ids.count(id)) out.push_back("theta value for unknown class " + id);
    }
    for (const auto& [key, v] : sc.orbital) {
      (void)v;
      if (!ids.count(key.first)) out.push_back("orbital entry for unknown class " + key.first);
    }
    for (const auto& [key, v] : sc.stable_orbital) {
      (void)v;
      if (!ids.count(key.first))
        out.push_back("stable orbital entry for unknown class " + key.first);
    }
  } else if (!sc.theta_values.empty() || !sc.orbital.empty() || !sc.stable_orbital.empty()) {
    out.push_back("oracle values without classes");
  }

  if (sc.flags.unramified_split && cooked.gg.inertia.size() != 1)
    out.push_back("flagged unramified-split but inertia acts nontrivially");
  return out;
}

Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw ValidationError(std::string("scenario: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("top level must be an object");

  Scenario sc;
  const std::string schema = want_string(need(j, "schema"), "schema");
  if (schema != "padchar/1") fail("unsupported schema " + schema);
  if (j.contains("name")) sc.name = want_string(j.at("name"), "name");

  const Json& rd = need(j, "root_datum");
  sc.rank = static_cast<int>(want_int(need(rd, "rank"), "rank"));
  sc.roots = want_vecs(need(rd, "roots"), "roots");
  sc.coroots = want_vecs(need(rd, "coroots"), "coroots");

  const Json& gal = need(j, "galois");
  if (gal.contains("inertia")) sc.inertia = want_mats(gal.at("inertia"), "inertia");
  sc.frobenius = want_mat(need(gal, "frobenius"), "frobenius");
  if (gal.contains("extra")) sc.extra = want_mats(gal.at("extra"), "extra");

  const Json& rf = need(j, "residue_field");
  sc.p = want_int(need(rf, "p"), "residue_field p");
  sc.f = want_int(need(rf, "f"), "residue_field f");

  const Json& pts = need(j, "points");
  if (!pts.is_object()) fail("points must be an object");
  for (auto it = pts.begin(); it != pts.end(); ++it) {
    if (!it.value().is_object()) fail("point " + it.key() + " must be an object");
    for (auto c = it.value().begin(); c != it.value().end(); ++c)
      sc.points[it.key()][c.key()] = want_rational(c.value(), "point " + it.key());
  }
  sc.x = want_string(need(j, "x"), "x");

  const Json& gamma = need(j, "gamma");
  if (!gamma.is_object()) fail("gamma must be an object");
  for (auto it = gamma.begin(); it != gamma.end(); ++it) {
    const Json& e = it.value();
    ScenarioGammaEntry entry;
    entry.d = want_depth(need(e, "d"), "gamma " + it.key() + " depth");
    if (e.contains("rho")) entry.rho = want_coeffs(e.at("rho"), "gamma " + it.key() + " rho");
    if (e.contains("lambda"))
      entry.lambda = want_coeffs(e.at("lambda"), "gamma " + it.key() + " lambda");
    sc.gamma[it.key()] = std::move(entry);
  }

  const Json& xstar = need(j, "xstar");
  if (xstar.contains("levi"))
    for (const Json& id : xstar.at("levi")) sc.levi.insert(want_string(id, "xstar levi"));
  if (xstar.contains("nu")) {
    const Json& nu = xstar.at("nu");
    if (!nu.is_object()) fail("xstar nu must be an object");
    for (auto it = nu.begin(); it != nu.end(); ++it)
      sc.nu[it.key()] = want_coeffs(it.value(), "xstar nu " + it.key());
  }
  sc.depth_r = want_rational(need(j, "depth_r"), "depth_r");

  if (j.contains("ranks")) {
    const Json& ranks = j.at("ranks");
    if (ranks.contains("G")) sc.ranks.G = want_int(ranks.at("G"), "rank G");
    if (ranks.contains("Gprime")) sc.ranks.Gprime = want_int(ranks.at("Gprime"), "rank Gprime");
    if (ranks.contains("H")) sc.ranks.H = want_int(ranks.at("H"), "rank H");
    if (ranks.contains("Hprime")) sc.ranks.Hprime = want_int(ranks.at("Hprime"), "rank Hprime");
  }

  if (j.contains("ramified_extras")) {
    const Json& ram = j.at("ramified_extras");
    if (!ram.is_object()) fail("ramified_extras must be an object");
    for (auto it = ram.begin(); it != ram.end(); ++it) {
      const Json& e = it.value();
      ScenarioExtras ex;
      if (e.contains("w_unit"))
        ex.w_unit = want_coeffs(e.at("w_unit"), "ramified_extras " + it.key() + " w_unit");
      if (e.contains("rank_pm"))
        ex.rank_pm = want_int(e.at("rank_pm"), "ramified_extras " + it.key() + " rank_pm");
      if (e.contains("kottwitz_sign"))
        ex.kottwitz_sign = static_cast<int>(
            want_int(e.at("kottwitz_sign"), "ramified_extras " + it.key() + " kottwitz_sign"));
      sc.ramified_extras[it.key()] = std::move(ex);
    }
  }

  if (j.contains("classes")) {
    const Json& classes = j.at("classes");
    if (!classes.is_array()) fail("classes must be an array");
    for (const Json& e : classes) {
      ScenarioClassSpec spec;
      spec.id = want_string(need(e, "id"), "class id");
      spec.w = want_mat(need(e, "w"), "class " + spec.id + " transport");
      if (e.contains("rational"))
        spec.rational = want_bool(e.at("rational"), "class " + spec.id + " rational");
      spec.group = want_string(need(e, "group"), "class " + spec.id + " group");
      spec.stable = want_string(need(e, "stable"), "class " + spec.id + " stable");
      if (e.contains("point"))
        spec.point = want_string(e.at("point"), "class " + spec.id + " point");
      sc.classes.push_back(std::move(spec));
    }
  }

  if (j.contains("element")) sc.element = want_string(j.at("element"), "element");

  if (j.contains("theta_values")) {
    const Json& theta = j.at("theta_values");
    if (!theta.is_object()) fail("theta_values must be an object");
    for (auto it = theta.begin(); it != theta.end(); ++it)
      sc.theta_values[it.key()] = parse_qi(want_string(it.value(), "theta " + it.key()));
  }

  if (j.contains("oracles")) {
    const Json& oracles = j.at("oracles");
    if (oracles.contains("orbital"))
      read_oracle_entries(oracles.at("orbital"), "orbital", sc.orbital);
    if (oracles.contains("stable_orbital"))
      read_oracle_entries(oracles.at("stable_orbital"), "stable orbital", sc.stable_orbital);
  }

  if (j.contains("flags")) {
    const Json& flags = j.at("flags");
    if (flags.contains("unramified_split"))
      sc.flags.unramified_split = want_bool(flags.at("unramified_split"), "unramified_split");
    if (flags.contains("maximally_split_levi"))
      sc.flags.maximally_split_levi =
          want_bool(flags.at("maximally_split_levi"), "maximally_split_levi");
  }
  return sc;
}

std::string serialize_scenario(const Scenario& sc) {
  Json j;
  j["schema"] = "padchar/1";
  if (!sc.name.empty()) j["name"] = sc.name;

  Json rd;
  rd["rank"] = sc.rank;
  rd["roots"] = from_vecs(sc.roots);
  rd["coroots"] = from_vecs(sc.coroots);
  j["root_datum"] = std::move(rd);

  Json gal;
  gal["inertia"] = from_mats(sc.inertia);
  gal["frobenius"] = from_mat(sc.frobenius);
  if (!sc.extra.empty()) gal["extra"] = from_mats(sc.extra);
  j["galois"] = std::move(gal);

  j["residue_field"] = Json{{"p", sc.p}, {"f", sc.f}};

  Json pts = Json::object();
  for (const auto& [name, cosets] : sc.points) {
    Json pt = Json::object();
    for (const auto& [id, coset] : cosets) pt[id] = rational_str(coset);
    pts[name] = std::move(pt);
  }
  j["points"] = std::move(pts);
  j["x"] = sc.x;

  Json gamma = Json::object();
  for (const auto& [id, entry] : sc.gamma) {
    Json e;
    e["d"] = entry.d.str();
    if (entry.rho) e["rho"] = from_coeffs(*entry.rho);
    if (entry.lambda) e["lambda"] = from_coeffs(*entry.lambda);
    gamma[id] = std::move(e);
  }
  j["gamma"] = std::move(gamma);

  Json xstar;
  if (!sc.levi.empty()) xstar["levi"] = Json(sc.levi);
  Json nu = Json::object();
  for (const auto& [id, coeffs] : sc.nu) nu[id] = from_coeffs(coeffs);
  xstar["nu"] = std::move(nu);
  j["xstar"] = std::move(xstar);

  j["depth_r"] = rational_str(sc.depth_r);
  j["ranks"] = Json{{"G", sc.ranks.G},
                    {"Gprime", sc.ranks.Gprime},
                    {"H", sc.ranks.H},
                    {"Hprime", sc.ranks.Hprime}};

  if (!sc.ramified_extras.empty()) {
    Json ram = Json::object();
    for (const auto& [id, ex] : sc.ramified_extras)
      ram[id] = Json{{"w_unit", from_coeffs(ex.w_unit)},
                     {"rank_pm", ex.rank_pm},
                     {"kottwitz_sign", ex.kottwitz_sign}};
    j["ramified_extras"] = std::move(ram);
  }

  if (!sc.classes.empty()) {
    Json classes = Json::array();
    for (const ScenarioClassSpec& spec : sc.classes) {
      Json e;
      e["id"] = spec.id;
      e["w"] = from_mat(spec.w);
      e["rational"] = spec.rational;
      e["group"] = spec.group;
      e["stable"] = spec.stable;
      if (!spec.point.empty()) e["point"] = spec.point;
      classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
  }

  j["element"] = sc.element;

  if (!sc.theta_values.empty()) {
    Json theta = Json::object();
    for (const auto& [id, v] : sc.theta_values) theta[id] = qi_str(v);
    j["theta_values"] = std::move(theta);
  }

  if (!sc.orbital.empty() || !sc.stable_orbital.empty()) {
    Json oracles;
    if (!sc.orbital.empty()) oracles["orbital"] = from_oracle_entries(sc.orbital);
    if (!sc.stable_orbital.empty())
      oracles["stable_orbital"] = from_oracle_entries(sc.stable_orbital);
    j["oracles"] = std::move(oracles);
  }

  j["flags"] = Json{{"unramified_split", sc.flags.unramified_split},
                    {"maximally_split_levi", sc.flags.maximally_split_levi}};
  return j.dump(2) + "\n";
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("scenario: cannot read file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

}  // namespace padchar
