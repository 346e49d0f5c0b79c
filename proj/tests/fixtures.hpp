#pragma once

// Shared hand-built root data and Galois models used across the test suite.

#include <padchar/rootgal.hpp>

namespace fixtures {

using padchar::GaloisModel;
using padchar::Mat;
using padchar::RootDatum;
using padchar::Vec;

inline Mat minus_identity(int n) {
  Mat m = padchar::mat_identity(n);
  for (int i = 0; i < n; ++i) m[i][i] = -1;
  return m;
}

// A1, adjoint lattice: roots +-(1), coroots +-(2).
inline RootDatum a1() {
  return padchar::make_root_datum(1, {{1}, {-1}}, {{2}, {-2}});
}

// A2 in the root-lattice basis (alpha, beta).
inline RootDatum a2() {
  return padchar::make_root_datum(2,
                                  {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}},
                                  {{2, -1}, {-2, 1}, {-1, 2}, {1, -2}, {1, 1}, {-1, -1}});
}

// B2: short roots +-(1,0), +-(0,1); long roots +-(1,1), +-(1,-1).
inline RootDatum b2() {
  return padchar::make_root_datum(
      2,
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}},
      {{2, 0}, {-2, 0}, {0, 2}, {0, -2}, {1, 1}, {-1, -1}, {1, -1}, {-1, 1}});
}

// C2 in the root-lattice basis (alpha short, beta long):
// roots +-alpha, +-beta, +-(alpha+beta), +-(2alpha+beta).
inline RootDatum c2() {
  return padchar::make_root_datum(
      2,
      {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}, {2, 1}, {-2, -1}},
      {{2, -2}, {-2, 2}, {-1, 2}, {1, -2}, {0, 2}, {0, -2}, {1, 0}, {-1, 0}});
}

// Torus: no roots at all.
inline RootDatum torus(int rank) { return padchar::make_root_datum(rank, {}, {}); }

// Split: trivial inertia and trivial Frobenius.
inline GaloisModel split_model(int rank) {
  return GaloisModel{{}, padchar::mat_identity(rank), {}};
}

// Unramified elliptic: trivial inertia, Frobenius acts by inversion.
inline GaloisModel elliptic_model(int rank) {
  return GaloisModel{{}, minus_identity(rank), {}};
}

// Ramified: inertia acts by inversion, Frobenius trivial.
inline GaloisModel ramified_model(int rank) {
  return GaloisModel{{minus_identity(rank)}, padchar::mat_identity(rank), {}};
}

// A2 with Frobenius of order 3: alpha -> beta -> -(alpha+beta) -> alpha.
inline Mat a2_rotation() { return Mat{{0, -1}, {1, -1}}; }

inline GaloisModel rotation_model() { return GaloisModel{{}, a2_rotation(), {}}; }

// A named root-datum/Galois-model/q triple, for sweeping property tests
// over every structurally distinct situation the library handles.
struct Family {
  std::string name;
  RootDatum rd;
  GaloisModel gm;
  long long q;
};

inline std::vector<Family> families() {
  return {
      {"a1-split", a1(), split_model(1), 5},
      {"a1-elliptic", a1(), elliptic_model(1), 3},
      {"a1-ramified", a1(), ramified_model(1), 7},
      {"a2-rotation", a2(), rotation_model(), 5},
      {"c2-split", c2(), split_model(2), 3},
      {"c2-elliptic", c2(), elliptic_model(2), 3},
      {"b2-split", b2(), split_model(2), 5},
      {"torus", torus(2), split_model(2), 3},
  };
}

}  // namespace fixtures
