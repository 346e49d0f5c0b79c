#pragma once

// Seeded random generators of coherent inputs (element profiles, generic
// covectors, Weyl transports) shared by the property tests and the fuzzing
// subcommands of the CLI.

#include <padchar/elements.hpp>

#include <random>
#include <vector>

namespace padchar {

struct ProfileOptions {
  long long max_depth_steps = 6;  // finite depths drawn from {0/e, ..., max/e}
  int infinite_percent = 20;      // chance per orbit of root value exactly 1
  bool allow_depth_zero = true;
  bool allow_negative = false;    // unbounded profiles with depths >= -max/e
};

// A random profile satisfying every validation rule: depths in (1/e)Z,
// depth-zero residues of the right kind (norm-one on symmetric-unramified
// orbits, -1 on ramified ones), negation pairs derived.
ElementProfile random_profile(std::mt19937_64& rng, const OrbitSet& os,
                              const ResidueField& rf, const ProfileOptions& opt = {});

// A random generic covector of depth -r: a random negation-closed Levi
// subset, random unit residues with negated pairs elsewhere.  r must lie in
// Z_alpha for every orbit kept off the Levi, so callers pick r accordingly.
CovectorProfile random_covector(std::mt19937_64& rng, const Rational& r,
                                const OrbitSet& os, const ResidueField& rf);

// A uniformly random unit of the field.
FqElem random_unit(std::mt19937_64& rng, const Fq& field);

// A random apartment point: per +-pair a coset k/(6e) with k in 0..5, where
// symmetric orbits are restricted to the two antisymmetry-compatible values
// 0 and 1/(2e).
ApartmentPoint random_point(std::mt19937_64& rng, const OrbitSet& os);

// The full Weyl group of the datum: closure of the root reflections.
std::vector<Mat> weyl_group(const RootDatum& rd);

// The Weyl elements w for which weyl_transport accepts (rd, gm, w): those
// normalizing the Galois model's action up to the validation contract.
std::vector<Mat> transportable_weyl(const RootDatum& rd, const GaloisModel& gm, long long q);

}  // namespace padchar
