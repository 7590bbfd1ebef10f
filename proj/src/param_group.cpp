#include "pell/param_group.hpp"

#include <stdexcept>

#include "pell/errors.hpp"
#include "pell/ops.hpp"

namespace pell {

Parameter param_mul(const Field& f, const Parameter& u, const Parameter& v, const Fe& d) {
    if (u.is_alpha()) return v;
    if (v.is_alpha()) return u;
    const Fe& m1 = u.value();
    const Fe& m2 = v.value();
    Fe den = f.add(m1, m2);
    if (den == 0) return Parameter::alpha();
    Fe num = f.add(f.mul(m1, m2), d);
    return Parameter::finite(f.mul(num, f.inv(den)));
}

Parameter param_inverse(const Field& f, const Parameter& u) {
    if (u.is_alpha()) return u;
    return Parameter::finite(f.neg(u.value()));
}

Parameter param_of_point(const Field& f, const PellPoint& pt, const ConicParams& cp) {
    const Fe& a = cp.identity.x;
    const Fe& b = cp.identity.y;
    if (pt.y == b) {
        if (pt.x == a) return Parameter::alpha();
        if (a == 0)
            throw DegenerateIdentity("param_of_point: identity with a = 0");
        // the antipode (-a, b): slope of the vertical tangent direction
        return Parameter::finite(f.neg(f.mul(f.mul(b, cp.d), f.inv(a))));
    }
    return Parameter::finite(f.mul(f.add(pt.x, a), f.inv(f.sub(pt.y, b))));
}

PellPoint point_of_param(const Field& f, const Parameter& u, const ConicParams& cp) {
    if (u.is_alpha()) return cp.identity;
    const Fe& m = u.value();
    const Fe& a = cp.identity.x;
    const Fe& b = cp.identity.y;
    Fe den = f.sub(f.sqr(m), cp.d);
    if (den == 0) throw SingularParameter("point_of_param: m^2 = d");
    Fe w = f.mul(f.add(f.mul(a, m), f.mul(b, cp.d)), f.inv(den));
    Fe t = f.mul(m, w);
    return {f.sub(f.add(t, t), a), f.add(f.add(w, w), b)};
}

Parameter param_pow(const Field& f, const Parameter& u, const mpz_class& e, const Fe& d) {
    if (e < 0) throw std::invalid_argument("param_pow: negative exponent");
    ++op_counts().group_exp;
    if (u.is_alpha() || e == 0) return Parameter::alpha();
    const Fe& m = u.value();
    // (N, D) tracks the expansion (m + t)^k = N + D*t in F_q[t]/(t^2 - d),
    // so N/D follows the parameter group law; the division happens once at
    // the end.
    Fe n = 1, dd = 0;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        Fe n2 = f.add(f.sqr(n), f.mul(d, f.sqr(dd)));  // square: 4 muls
        Fe d2 = f.mul(n, dd);
        d2 = f.add(d2, d2);
        n = n2;
        dd = d2;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i))) {
            n2 = f.add(f.mul(n, m), f.mul(d, dd));  // multiply: 3 muls
            d2 = f.add(n, f.mul(dd, m));
            n = n2;
            dd = d2;
        }
    }
    if (dd == 0) return Parameter::alpha();
    return Parameter::finite(f.mul(n, f.inv(dd)));
}

QuadExt quadext_mul(const Field& f, const QuadExt& a, const QuadExt& b, const Fe& d) {
    Fe x = f.add(f.mul(a.x, b.x), f.mul(d, f.mul(a.y, b.y)));
    Fe y = f.add(f.mul(a.x, b.y), f.mul(a.y, b.x));
    return {x, y};
}

std::pair<Fe, Fe> redei_pair(const Field& f, const Fe& m, const mpz_class& e, const Fe& d) {
    if (e < 0) throw std::invalid_argument("redei_pair: negative exponent");
    QuadExt acc{1, 0};
    QuadExt base{m, 1};
    if (e > 0) {
        for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
            acc = quadext_mul(f, acc, acc, d);
            if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
                acc = quadext_mul(f, acc, base, d);
        }
    }
    return {acc.x, acc.y};
}

Parameter param_iso_scale(const Field& f, const Parameter& u, const Fe& s) {
    if (s == 0) throw std::invalid_argument("param_iso_scale: s must be nonzero");
    if (u.is_alpha()) return u;
    return Parameter::finite(f.mul(s, u.value()));
}

namespace {

bool param_has_full_order(const Field& f, const Fe& m, const Fe& d, const mpz_class& e) {
    return !param_pow(f, Parameter::finite(m), e, d).is_alpha();
}

std::vector<mpz_class> trial_factor(mpz_class n) {
    std::vector<mpz_class> factors;
    for (mpz_class q = 2; q * q <= n; q == 2 ? q = 3 : q += 2) {
        if (n % q == 0) {
            factors.push_back(q);
            while (n % q == 0) n /= q;
        }
    }
    if (n > 1) factors.push_back(n);
    return factors;
}

}  // namespace

Parameter random_param_generator(const Field& f, const Fe& d, Rng& rng) {
    if (f.chi(d) != -1)
        throw std::invalid_argument("random_param_generator: chi(d) must be -1");
    mpz_class order = f.p() + 1;
    std::vector<mpz_class> factors;
    if (f.p_prime()) {
        factors = {2, *f.p_prime()};
    } else if (f.p() < (1u << 20)) {
        factors = trial_factor(order);
    } else {
        throw std::invalid_argument(
            "generator search needs a safe-order context for large fields");
    }
    for (;;) {
        Fe m = f.random_element(rng);
        bool full = true;
        for (const mpz_class& q : factors) {
            if (!param_has_full_order(f, m, d, order / q)) {
                full = false;
                break;
            }
        }
        if (full) return Parameter::finite(m);
    }
}

}  // namespace pell
