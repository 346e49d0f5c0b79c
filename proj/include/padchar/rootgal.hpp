#pragma once

// Based root data, finite Galois models acting on the character lattice, and
// the partition of the roots into Galois orbits with the
// nonsymmetric / symmetric-unramified / symmetric-ramified trichotomy and the
// per-orbit field invariants (n, e, f, q_alpha).

#include <padchar/arith.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace padchar {

using Vec = std::vector<long long>;  // lattice vector
using Mat = std::vector<Vec>;        // row-major, acts on column vectors

Mat mat_identity(int n);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_transpose(const Mat& m);
Mat mat_inverse(const Mat& m);       // exact; throws unless invertible over Z
Mat contragredient(const Mat& m);    // inverse transpose (action on the dual)
Vec vec_neg(const Vec& v);

// Orbit/scenario key for a lattice vector: comma-joined coordinates, "2,-1".
std::string vec_key(const Vec& v);
Vec parse_vec_key(const std::string& s);

struct RootDatum {
  int rank = 0;
  std::vector<Vec> roots;    // may be empty (torus)
  std::vector<Vec> coroots;  // matched by index

  bool is_root(const Vec& v) const;
  const Vec& coroot_of(const Vec& root) const;  // throws if not a root
  static long long pair(const Vec& x, const Vec& ydual);  // integer dot pairing
};

// Validates: matched pairings equal 2, no duplicate roots, negation closure
// (with negated coroots), reducedness, and that every reflection
// s_a(b) = b - <b, a^vee> a permutes the root set.
RootDatum make_root_datum(int rank, std::vector<Vec> roots, std::vector<Vec> coroots);

// The reflection in a root, as a matrix on X*.
Mat reflection_matrix(const RootDatum& rd, const Vec& root);

// Finite Galois model: generators of the image of Galois in Aut(X*), with a
// designated inertia subgroup and Frobenius representative.
struct GaloisModel {
  std::vector<Mat> inertia_generators;
  Mat frobenius;
  std::vector<Mat> extra_generators;
};

struct GaloisGroup {
  int rank = 0;
  std::vector<Mat> elements;  // the full finite group, sorted
  std::vector<Mat> inertia;   // sorted subset
  Mat frobenius;

  bool in_group(const Mat& m) const;
  bool in_inertia(const Mat& m) const;
};

// Closes the generators into a finite group and validates the model:
// every element preserves the root set and acts contragrediently on the
// matched coroots, inertia is normal, and Frobenius generates the
// (necessarily cyclic) quotient group/inertia.
GaloisGroup build_group(const RootDatum& rd, const GaloisModel& gm);

enum class OrbitKind { nonsymmetric, symmetric_unramified, symmetric_ramified };
std::string orbit_kind_str(OrbitKind k);

struct OrbitInfo {
  std::string id;            // vec_key of the representative
  Vec rep;                   // lexicographically greatest member
  std::vector<Vec> members;  // sorted ascending
  long long n = 0;           // orbit size
  long long e = 0;           // inertia-orbit size (Z_alpha = (1/e) Z)
  long long f = 0;           // n / e
  long long q_alpha = 0;     // q^f
  OrbitKind kind = OrbitKind::nonsymmetric;
  std::optional<Mat> sigma_witness;  // sends rep to -rep when symmetric;
                                     // lies in inertia exactly when ramified
  std::string neg_id;        // orbit of -rep; equals id iff symmetric

  bool symmetric() const { return kind != OrbitKind::nonsymmetric; }
  bool ramified() const { return kind == OrbitKind::symmetric_ramified; }
  bool contains(const Vec& r) const;
};

struct OrbitSet {
  std::vector<OrbitInfo> list;  // sorted by representative, ascending
  std::map<std::string, int> by_id;
  std::map<Vec, int> by_root;

  const OrbitInfo& of_root(const Vec& r) const;
  const OrbitInfo& by_key(const std::string& id) const;
  bool has_key(const std::string& id) const { return by_id.count(id) != 0; }
};

// Partition of the root set into Galois orbits over a residue field of
// cardinality q (an odd prime power).
OrbitSet orbits(const RootDatum& rd, const GaloisGroup& gg, long long q);

// Transport along a root-preserving lattice automorphism w: the induced
// bijection on orbit keys together with the conjugated Galois model
// w g w^{-1}.  Orbit invariants (n, e, f, q, kind) are asserted equal across
// the bijection.
struct TransportResult {
  std::map<std::string, std::string> orbit_map;  // old key -> new key
  GaloisModel transported;
};

TransportResult weyl_transport(const RootDatum& rd, const GaloisModel& gm, const Mat& w,
                               long long q);

}  // namespace padchar
