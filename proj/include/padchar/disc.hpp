#pragma once

// Reduced discriminant valuations: the exact rational v with |D_G| = q^{-v},
// computed from root depths, and the factorization of |D_G(gamma)| across a
// cut-depth approximation.

#include <padchar/elements.hpp>

namespace padchar {

// Valuation of D_G(gamma).  Each root alpha with alpha(gamma) != 1
// contributes ord_gamma(alpha), so an orbit at finite depth d contributes
// n * d; orbits with root value 1 are excluded from the product.
Rational disc_val_gamma(const ElementProfile& profile, const OrbitSet& os);

// Valuation of D_G(X*) for a generic covector: every orbit off the Levi has
// ord exactly -r and contributes n * (-r).
Rational disc_val_xstar(const CovectorProfile& cov, const OrbitSet& os);

// |D_G(gamma)| = |D_G(gamma_{<r})| * |D_H(gamma_{>=r})| as valuations.  The
// head carries the shallow depths and the tail the deep ones, so both sides
// agree for every coherent profile; exposed as a self-test.
bool check_part_disc(const Approximation& ap, const OrbitSet& os, const ResidueField& rf);

}  // namespace padchar
