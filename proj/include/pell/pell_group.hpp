#pragma once

#include <vector>

#include "pell/field.hpp"

namespace pell {

// Affine point of a conic x^2 - d*y^2 = c over a prime field.
struct PellPoint {
    Fe x;
    Fe y;
    bool operator==(const PellPoint& other) const = default;
};

// A generalized Pell conic x^2 - d*y^2 = c together with its chosen
// identity point (a, b); necessarily c = a^2 - d*b^2.  The classic Pell
// conic is c = 1 with identity (1, 0).  For chi(d) = -1 the classic curve
// is a cyclic group of order p + 1 under the Brahmagupta product.
struct ConicParams {
    Fe d;
    Fe c;
    PellPoint identity;
    Fe c_inv;  // cached 1/c

    // Classic conic: c = 1, identity (1, 0).  d must be nonzero.
    static ConicParams classic(const Field& f, const Fe& d);

    // Generalized conic through (a, b) with c = a^2 - d*b^2.  Throws
    // ZeroInverse if the conic is degenerate (c = 0) and DegenerateIdentity
    // if a = 0, which would break the parameter map.
    static ConicParams with_identity(const Field& f, const Fe& d, const PellPoint& id);
};

bool on_conic(const Field& f, const PellPoint& pt, const Fe& d, const Fe& c);

// Brahmagupta product on x^2 - d*y^2 = c:
//   (x1, y1) * (x2, y2) = (x1*x2 + d*y1*y2, x1*y2 + y1*x2).
// Costs exactly 5 field multiplications.  For c = 1 this is the classic
// group law with identity (1, 0) and inverse (x, -y).
PellPoint brahmagupta(const Field& f, const PellPoint& p1, const PellPoint& p2, const Fe& d);

// (x, -y); the classic-group inverse.
PellPoint conjugate(const Field& f, const PellPoint& pt);

// Group law of the generalized conic with identity (a, b):
//   P * Q = (1/c) * ((a, -b) x P x Q)
// where x is the Brahmagupta product and the scalar acts on both
// coordinates.
PellPoint gen_brahmagupta(const Field& f, const PellPoint& p1, const PellPoint& p2,
                          const ConicParams& cp);

// Inverse for the generalized law: (1/c) * ((a, b) x (a, b) x (x, -y)).
PellPoint gen_inverse(const Field& f, const PellPoint& pt, const ConicParams& cp);

// Group isomorphism C_d -> C_{d'} for d = d' * s^2, mapping (x, y) to
// (x, s*y) on the classic conics.  Throws BadScale unless d = d' * s^2.
PellPoint iso_scale(const Field& f, const PellPoint& pt, const Fe& s, const Fe& d,
                    const Fe& d_prime);

// Isomorphism from the classic conic (c = 1) onto the generalized conic:
// phi(P) = (a, b) x P.  phi_inv is its inverse, division by (a, b) under
// the generalized law.
PellPoint phi(const Field& f, const PellPoint& pt, const ConicParams& cp);
PellPoint phi_inv(const Field& f, const PellPoint& pt, const ConicParams& cp);

// Isomorphism between two generalized conics sharing the same d: the
// product of dst's identity with P under src's law, which sends src's
// identity to dst's identity and coincides with phi_dst after phi_inv_src.
// Throws std::invalid_argument if the two conics disagree on d.
PellPoint gen_iso(const Field& f, const PellPoint& pt, const ConicParams& src,
                  const ConicParams& dst);

// P^e under the classic (c = 1) law by left-to-right square-and-multiply,
// consuming exponent bits most-significant first.  Square and multiply
// steps are Brahmagupta products (4 and 5 field multiplications); no
// inversions.  e >= 0; e = 0 gives the identity.  Counts one group_exp.
PellPoint point_pow(const Field& f, const PellPoint& pt, const mpz_class& e, const Fe& d);

// All affine points of x^2 - d*y^2 = c, ascending in x and then y.
// Throws TooLarge for p > 2^16: this is a test helper, not a production
// path.
std::vector<PellPoint> enumerate_conic(const Field& f, const Fe& d, const Fe& c);

// Uniform generator of the classic conic group (order p + 1), found by
// drawing random points and keeping the first one whose order is exactly
// p + 1.  Requires chi(d) = -1.  Safe-order contexts test the order with
// two exponentiations; bare-prime contexts fall back to factoring p + 1,
// which is only allowed for p < 2^20.
PellPoint random_generator(const Field& f, const Fe& d, Rng& rng);

}  // namespace pell
