#include "padchar/rootgal.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace padchar {

// ---- small exact linear algebra ---------------------------------------------

Mat mat_identity(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  if (m.empty() || m[0].size() != v.size())
    throw ValidationError("matrix/vector shape mismatch");
  Vec out(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  if (a.empty() || b.empty() || a[0].size() != b.size())
    throw ValidationError("matrix shape mismatch");
  Mat c(a.size(), Vec(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Mat mat_transpose(const Mat& m) {
  Mat t(m[0].size(), Vec(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[0].size(); ++j) t[j][i] = m[i][j];
  return t;
}

Mat mat_inverse(const Mat& m) {
  const int n = static_cast<int>(m.size());
  // Gauss-Jordan over exact rationals, then demand integer entries.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(m[i].size()) != n) throw ValidationError("matrix not square");
    for (int j = 0; j < n; ++j) a[i][j] = Rational(m[i][j]);
    a[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw ValidationError("matrix not invertible");
    std::swap(a[col], a[pivot]);
    const Rational lead = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col];
      for (int j = 0; j < 2 * n; ++j) a[row][j] -= factor * a[col][j];
    }
  }
  Mat inv(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(a[i][n + j]))
        throw ValidationError("matrix inverse is not integral");
      inv[i][j] = to_ll(boost::multiprecision::numerator(a[i][n + j]));
    }
  return inv;
}

Mat contragredient(const Mat& m) { return mat_transpose(mat_inverse(m)); }

Vec vec_neg(const Vec& v) {
  Vec out = v;
  for (auto& x : out) x = -x;
  return out;
}

std::string vec_key(const Vec& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

Vec parse_vec_key(const std::string& s) {
  Vec out;
  std::stringstream ss(s);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    std::size_t used = 0;
    long long val = 0;
    try {
      val = std::stoll(piece, &used);
    } catch (const std::exception&) {
      throw ValidationError("bad vector key: '" + s + "'");
    }
    if (used != piece.size()) throw ValidationError("bad vector key: '" + s + "'");
    out.push_back(val);
  }
  if (out.empty()) throw ValidationError("empty vector key");
  return out;
}

// ---- root data ---------------------------------------------------------------

bool RootDatum::is_root(const Vec& v) const {
  return std::find(roots.begin(), roots.end(), v) != roots.end();
}

const Vec& RootDatum::coroot_of(const Vec& root) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == root) return coroots[i];
  throw ValidationError("not a root: " + vec_key(root));
}

long long RootDatum::pair(const Vec& x, const Vec& ydual) {
  if (x.size() != ydual.size()) throw ValidationError("pairing shape mismatch");
  long long s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * ydual[i];
  return s;
}

RootDatum make_root_datum(int rank, std::vector<Vec> roots, std::vector<Vec> coroots) {
  if (rank < 1) throw ValidationError("rank must be positive");
  if (roots.size() != coroots.size())
    throw ValidationError("roots and coroots must match up");
  RootDatum rd;
  rd.rank = rank;
  rd.roots = std::move(roots);
  rd.coroots = std::move(coroots);

  std::set<Vec> seen;
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    const Vec& a = rd.roots[i];
    if (static_cast<int>(a.size()) != rank || static_cast<int>(rd.coroots[i].size()) != rank)
      throw ValidationError("root/coroot of wrong dimension");
    if (std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; }))
      throw ValidationError("zero vector listed as a root");
    if (!seen.insert(a).second) throw ValidationError("duplicate root " + vec_key(a));
    if (RootDatum::pair(a, rd.coroots[i]) != 2)
      throw ValidationError("pairing <a, a^vee> != 2 at root " + vec_key(a));
  }
  for (std::size_t i = 0; i < rd.roots.size(); ++i) {
    const Vec& a = rd.roots[i];
    // negation closure, with the matched coroot negated as well
    bool found_neg = false;
    for (std::size_t j = 0; j < rd.roots.size(); ++j)
      if (rd.roots[j] == vec_neg(a)) {
        if (rd.coroots[j] != vec_neg(rd.coroots[i]))
          throw ValidationError("coroot of -a is not -(coroot of a) at " + vec_key(a));
        found_neg = true;
      }
    if (!found_neg) throw ValidationError("root set not symmetric at " + vec_key(a));
    // reduced
    Vec twice = a;
    for (auto& x : twice) x *= 2;
    if (seen.count(twice))
      throw ValidationError("root system not reduced at " + vec_key(a));
    // the reflection permutes the roots
    for (const Vec& b : rd.roots) {
      Vec image = b;
      const long long c = RootDatum::pair(b, rd.coroots[i]);
      for (int t = 0; t < rank; ++t) image[t] -= c * a[t];
      if (!seen.count(image))
        throw ValidationError("reflection in " + vec_key(a) + " does not preserve the roots");
    }
  }
  return rd;
}

Mat reflection_matrix(const RootDatum& rd, const Vec& root) {
  const Vec& cv = rd.coroot_of(root);
  Mat m = mat_identity(rd.rank);
  for (int i = 0; i < rd.rank; ++i)
    for (int j = 0; j < rd.rank; ++j) m[i][j] -= root[i] * cv[j];
  return m;
}

// ---- Galois model ------------------------------------------------------------

bool GaloisGroup::in_group(const Mat& m) const {
  return std::binary_search(elements.begin(), elements.end(), m);
}

bool GaloisGroup::in_inertia(const Mat& m) const {
  return std::binary_search(inertia.begin(), inertia.end(), m);
}

namespace {

constexpr std::size_t kGroupCap = 4096;

std::vector<Mat> close_group(const std::vector<Mat>& generators, int rank) {
  std::set<Mat> seen{mat_identity(rank)};
  std::vector<Mat> queue{mat_identity(rank)};
  while (!queue.empty()) {
    const Mat cur = queue.back();
    queue.pop_back();
    for (const Mat& g : generators) {
      Mat nxt = mat_mul(cur, g);
      if (seen.insert(nxt).second) {
        if (seen.size() > kGroupCap)
          throw ValidationError("Galois model does not generate a small finite group");
        queue.push_back(std::move(nxt));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

void check_generator(const RootDatum& rd, const Mat& g) {
  if (static_cast<int>(g.size()) != rd.rank)
    throw ValidationError("generator has wrong rank");
  const Mat dual = contragredient(g);
  for (const Vec& a : rd.roots) {
    const Vec image = mat_apply(g, a);
    if (!rd.is_root(image))
      throw ValidationError("generator does not preserve the root set (image of " +
                            vec_key(a) + " is " + vec_key(image) + ")");
    if (rd.coroot_of(image) != mat_apply(dual, rd.coroot_of(a)))
      throw ValidationError("generator does not act contragrediently on coroots at " +
                            vec_key(a));
  }
}

}  // namespace

GaloisGroup build_group(const RootDatum& rd, const GaloisModel& gm) {
  std::vector<Mat> gens = gm.inertia_generators;
  gens.push_back(gm.frobenius);
  gens.insert(gens.end(), gm.extra_generators.begin(), gm.extra_generators.end());
  for (const Mat& g : gens) check_generator(rd, g);

  GaloisGroup gg;
  gg.rank = rd.rank;
  gg.frobenius = gm.frobenius;
  gg.elements = close_group(gens, rd.rank);
  gg.inertia = close_group(gm.inertia_generators, rd.rank);

  for (const Mat& h : gg.inertia)
    if (!gg.in_group(h)) throw ValidationError("inertia escapes the group");  // unreachable

  // inertia is normal
  for (const Mat& g : gg.elements) {
    const Mat ginv = mat_inverse(g);
    for (const Mat& h : gg.inertia)
      if (!gg.in_inertia(mat_mul(mat_mul(g, h), ginv)))
        throw ValidationError("inertia subgroup is not normal");
  }

  // Frobenius generates the quotient: its image must have full order
  // |group| / |inertia| there.
  if (gg.elements.size() % gg.inertia.size() != 0)
    throw ValidationError("inertia size does not divide group size");  // unreachable
  const std::size_t quotient_order = gg.elements.size() / gg.inertia.size();
  Mat power = mat_identity(rd.rank);
  std::size_t frob_image_order = 0;
  for (std::size_t j = 1; j <= quotient_order; ++j) {
    power = mat_mul(power, gm.frobenius);
    if (gg.in_inertia(power)) {
      frob_image_order = j;
      break;
    }
  }
  if (frob_image_order != quotient_order)
    throw ValidationError("Frobenius does not generate the quotient by inertia");
  return gg;
}

// ---- orbits ------------------------------------------------------------------

std::string orbit_kind_str(OrbitKind k) {
  switch (k) {
    case OrbitKind::nonsymmetric: return "nonsymmetric";
    case OrbitKind::symmetric_unramified: return "symmetric-unramified";
    default: return "symmetric-ramified";
  }
}

bool OrbitInfo::contains(const Vec& r) const {
  return std::binary_search(members.begin(), members.end(), r);
}

const OrbitInfo& OrbitSet::of_root(const Vec& r) const {
  auto it = by_root.find(r);
  if (it == by_root.end()) throw ValidationError("no orbit contains " + vec_key(r));
  return list[it->second];
}

const OrbitInfo& OrbitSet::by_key(const std::string& id) const {
  auto it = by_id.find(id);
  if (it == by_id.end()) throw ValidationError("no orbit with key '" + id + "'");
  return list[it->second];
}

OrbitSet orbits(const RootDatum& rd, const GaloisGroup& gg, long long q) {
  factor_prime_power(q);  // validates: odd prime power

  std::set<Vec> assigned;
  std::vector<OrbitInfo> list;
  for (const Vec& a : rd.roots) {
    if (assigned.count(a)) continue;
    std::set<Vec> members;
    for (const Mat& g : gg.elements) members.insert(mat_apply(g, a));
    OrbitInfo info;
    info.members.assign(members.begin(), members.end());
    info.rep = *std::max_element(members.begin(), members.end());
    info.id = vec_key(info.rep);
    info.n = static_cast<long long>(members.size());

    std::set<Vec> inertia_orbit;
    for (const Mat& h : gg.inertia) inertia_orbit.insert(mat_apply(h, info.rep));
    info.e = static_cast<long long>(inertia_orbit.size());
    if (info.n % info.e != 0)
      throw ValidationError("inertia orbit size does not divide orbit size");  // unreachable
    info.f = info.n / info.e;
    info.q_alpha = pow_checked(q, static_cast<int>(info.f));

    const Vec neg = vec_neg(info.rep);
    const bool symmetric = members.count(neg) != 0;
    const bool ramified = inertia_orbit.count(neg) != 0;
    info.kind = !symmetric ? OrbitKind::nonsymmetric
                           : (ramified ? OrbitKind::symmetric_ramified
                                       : OrbitKind::symmetric_unramified);
    if (symmetric) {
      const auto& pool = ramified ? gg.inertia : gg.elements;
      for (const Mat& g : pool)
        if (mat_apply(g, info.rep) == neg) {
          if (!ramified && gg.in_inertia(g)) continue;
          info.sigma_witness = g;
          break;
        }
      if (!info.sigma_witness)
        throw ValidationError("no sign witness found for a symmetric orbit");  // unreachable
    }
    assigned.insert(members.begin(), members.end());
    list.push_back(std::move(info));
  }

  std::sort(list.begin(), list.end(),
            [](const OrbitInfo& a, const OrbitInfo& b) { return a.rep < b.rep; });
  OrbitSet out;
  out.list = std::move(list);
  for (std::size_t i = 0; i < out.list.size(); ++i) {
    out.by_id[out.list[i].id] = static_cast<int>(i);
    for (const Vec& m : out.list[i].members) out.by_root[m] = static_cast<int>(i);
  }
  // negation pairing, plus the cross-orbit invariant checks
  for (auto& info : out.list) {
    const OrbitInfo& neg = out.of_root(vec_neg(info.rep));
    info.neg_id = neg.id;
    if (neg.n != info.n || neg.e != info.e || neg.f != info.f || neg.kind != info.kind)
      throw ValidationError("negative orbit has mismatched invariants");  // unreachable
    if (info.symmetric() != (info.neg_id == info.id))
      throw ValidationError("symmetry/negation bookkeeping is inconsistent");  // unreachable
  }
  return out;
}

TransportResult weyl_transport(const RootDatum& rd, const GaloisModel& gm, const Mat& w,
                               long long q) {
  check_generator(rd, w);  // root-preserving + contragredient on coroots
  const Mat winv = mat_inverse(w);

  TransportResult result;
  result.transported.frobenius = mat_mul(mat_mul(w, gm.frobenius), winv);
  for (const Mat& g : gm.inertia_generators)
    result.transported.inertia_generators.push_back(mat_mul(mat_mul(w, g), winv));
  for (const Mat& g : gm.extra_generators)
    result.transported.extra_generators.push_back(mat_mul(mat_mul(w, g), winv));

  const OrbitSet before = orbits(rd, build_group(rd, gm), q);
  const OrbitSet after = orbits(rd, build_group(rd, result.transported), q);
  for (const OrbitInfo& o : before.list) {
    const OrbitInfo& image = after.of_root(mat_apply(w, o.rep));
    if (image.n != o.n || image.e != o.e || image.f != o.f || image.q_alpha != o.q_alpha ||
        image.kind != o.kind)
      throw ValidationError("transport along w does not preserve orbit invariants");
    result.orbit_map[o.id] = image.id;
  }
  return result;
}

}  // namespace padchar
