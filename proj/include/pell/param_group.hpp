#pragma once

#include <utility>

#include "pell/pell_group.hpp"

namespace pell {

// Element of the parameter group P_{d,q} = F_q + {alpha}: either a finite
// slope value m or the point at infinity alpha of the parameter line.
// Alpha is the group identity.
class Parameter {
public:
    static Parameter alpha() { return Parameter(); }
    static Parameter finite(Fe m) { return Parameter(std::move(m)); }

    bool is_alpha() const { return alpha_; }

    // Only valid when !is_alpha().
    const Fe& value() const { return m_; }

    bool operator==(const Parameter& other) const {
        return alpha_ == other.alpha_ && (alpha_ || m_ == other.m_);
    }

private:
    Parameter() : alpha_(true) {}
    explicit Parameter(Fe m) : m_(std::move(m)), alpha_(false) {}

    Fe m_;
    bool alpha_;
};

// Group law induced on parameters by the Brahmagupta product:
//   m1 * m2 = (m1*m2 + d) / (m1 + m2),   and alpha where m1 + m2 = 0.
// Alpha is the identity; the inverse of m is -m.  Costs 2 multiplications
// and 1 inversion on the generic path.
Parameter param_mul(const Field& f, const Parameter& u, const Parameter& v, const Fe& d);

Parameter param_inverse(const Field& f, const Parameter& u);

// Parameterization of the generalized conic with identity (a, b):
//   (x, y) |-> (x + a) / (y - b)         for y != b,
//   (a, b)  |-> alpha,
//   (-a, b) |-> -b*d / a.
// With chi(d) = -1 every conic point lands in F_q + {alpha} and the map is
// a group isomorphism onto the parameter group.  The classic conic uses
// (a, b) = (1, 0), giving the familiar (x + 1) / y.
Parameter param_of_point(const Field& f, const PellPoint& pt, const ConicParams& cp);

// Inverse map.  For finite m with m^2 != d:
//   u = (a*m + b*d) / (m^2 - d),  point = (2*m*u - a, 2*u + b).
// alpha maps to the identity (a, b).  Throws SingularParameter when
// m^2 = d (possible only for chi(d) != -1).
PellPoint point_of_param(const Field& f, const Parameter& u, const ConicParams& cp);

// u^e in the parameter group by the numerator/denominator square-and-
// multiply (modified More's algorithm): carries the pair (N, D) standing
// for N/D, consumes exponent bits most-significant first from (1, 0), and
// performs the single division N/D at the end.  Per-bit costs in field
// multiplications: square 4, multiply 3; plus 1 multiplication and exactly
// 1 inversion for the final division.  A zero final denominator means the
// result is alpha (no inversion happens).  alpha^e = alpha; e = 0 gives
// alpha.  Counts one group_exp.
Parameter param_pow(const Field& f, const Parameter& u, const mpz_class& e, const Fe& d);

// Element x + t*y of F_q[t] / (t^2 - d).
struct QuadExt {
    Fe x;
    Fe y;
    bool operator==(const QuadExt& other) const = default;
};

QuadExt quadext_mul(const Field& f, const QuadExt& a, const QuadExt& b, const Fe& d);

// Independent oracle for param_pow: expands (m + t)^e = A_e + B_e*t in the
// quadratic extension by plain square-and-multiply and returns (A_e, B_e).
// The Redei rational function value is then A_e / B_e, with B_e = 0
// signalling alpha.
std::pair<Fe, Fe> redei_pair(const Field& f, const Fe& m, const mpz_class& e, const Fe& d);

// Parameter-group isomorphism P_{d',q} -> P_{d,q} with d = d' * s^2:
// m |-> s * m (alpha to alpha).  Scaling a point's y by s divides its d by
// s^2 while scaling a parameter by s multiplies its d by s^2, so this is
// iso_scale read backwards through the parameterization.  s must be
// nonzero.
Parameter param_iso_scale(const Field& f, const Parameter& u, const Fe& s);

// Uniform generator of the parameter group (order p + 1): random finite
// parameters until one has full order.  Same order-test rules as
// random_generator.
Parameter random_param_generator(const Field& f, const Fe& d, Rng& rng);

}  // namespace pell
