#include "pell/pell_group.hpp"

#include <stdexcept>

#include "pell/errors.hpp"
#include "pell/ops.hpp"

namespace pell {

ConicParams ConicParams::classic(const Field& f, const Fe& d) {
    if (d == 0) throw std::invalid_argument("ConicParams: d must be nonzero");
    ConicParams cp;
    cp.d = d;
    cp.c = 1;
    cp.identity = PellPoint{1, 0};
    cp.c_inv = 1;
    (void)f;
    return cp;
}

ConicParams ConicParams::with_identity(const Field& f, const Fe& d, const PellPoint& id) {
    if (d == 0) throw std::invalid_argument("ConicParams: d must be nonzero");
    if (id.x == 0)
        throw DegenerateIdentity("conic identity with a = 0 has no parameter map");
    ConicParams cp;
    cp.d = d;
    cp.c = f.sub(f.sqr(id.x), f.mul(d, f.sqr(id.y)));
    if (cp.c == 0) throw ZeroInverse();
    cp.identity = id;
    cp.c_inv = f.inv(cp.c);
    return cp;
}

bool on_conic(const Field& f, const PellPoint& pt, const Fe& d, const Fe& c) {
    return f.sub(f.sqr(pt.x), f.mul(d, f.sqr(pt.y))) == c;
}

PellPoint brahmagupta(const Field& f, const PellPoint& p1, const PellPoint& p2, const Fe& d) {
    Fe x = f.add(f.mul(p1.x, p2.x), f.mul(d, f.mul(p1.y, p2.y)));
    Fe y = f.add(f.mul(p1.x, p2.y), f.mul(p1.y, p2.x));
    return {x, y};
}

PellPoint conjugate(const Field& f, const PellPoint& pt) { return {pt.x, f.neg(pt.y)}; }

namespace {

// Brahmagupta square: x' = x^2 + d*y^2, y' = 2*x*y; 4 multiplications.
PellPoint brahmagupta_sqr(const Field& f, const PellPoint& p, const Fe& d) {
    Fe x = f.add(f.sqr(p.x), f.mul(d, f.sqr(p.y)));
    Fe y = f.mul(p.x, p.y);
    y = f.add(y, y);
    return {x, y};
}

PellPoint scale(const Field& f, const Fe& k, const PellPoint& p) {
    return {f.mul(k, p.x), f.mul(k, p.y)};
}

}  // namespace

PellPoint gen_brahmagupta(const Field& f, const PellPoint& p1, const PellPoint& p2,
                          const ConicParams& cp) {
    PellPoint t = brahmagupta(f, conjugate(f, cp.identity), p1, cp.d);
    t = brahmagupta(f, t, p2, cp.d);
    return scale(f, cp.c_inv, t);
}

PellPoint gen_inverse(const Field& f, const PellPoint& pt, const ConicParams& cp) {
    PellPoint t = brahmagupta(f, cp.identity, cp.identity, cp.d);
    t = brahmagupta(f, t, conjugate(f, pt), cp.d);
    return scale(f, cp.c_inv, t);
}

PellPoint iso_scale(const Field& f, const PellPoint& pt, const Fe& s, const Fe& d,
                    const Fe& d_prime) {
    if (f.mul(d_prime, f.sqr(s)) != d)
        throw BadScale("iso_scale: d != d' * s^2");
    return {pt.x, f.mul(s, pt.y)};
}

PellPoint phi(const Field& f, const PellPoint& pt, const ConicParams& cp) {
    return brahmagupta(f, cp.identity, pt, cp.d);
}

PellPoint phi_inv(const Field& f, const PellPoint& pt, const ConicParams& cp) {
    return gen_brahmagupta(f, PellPoint{1, 0}, pt, cp);
}

PellPoint gen_iso(const Field& f, const PellPoint& pt, const ConicParams& src,
                  const ConicParams& dst) {
    if (src.d != dst.d)
        throw std::invalid_argument("gen_iso: conics must share d");
    return gen_brahmagupta(f, dst.identity, pt, src);
}

PellPoint point_pow(const Field& f, const PellPoint& pt, const mpz_class& e, const Fe& d) {
    if (e < 0) throw std::invalid_argument("point_pow: negative exponent");
    ++op_counts().group_exp;
    PellPoint acc{1, 0};
    if (e == 0) return acc;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = brahmagupta_sqr(f, acc, d);
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
            acc = brahmagupta(f, acc, pt, d);
    }
    return acc;
}

std::vector<PellPoint> enumerate_conic(const Field& f, const Fe& d, const Fe& c) {
    if (f.p() > 65536)
        throw TooLarge("enumerate_conic: field too large to enumerate");
    std::vector<PellPoint> pts;
    Fe d_inv = f.inv(d);
    for (Fe x = 0; x < f.p(); ++x) {
        Fe yy = f.mul(f.sub(f.sqr(x), c), d_inv);
        int ch = f.chi(yy);
        if (ch == 0) {
            pts.push_back({x, 0});
        } else if (ch == 1) {
            Fe y = f.sqrt(yy);
            pts.push_back({x, y});
            pts.push_back({x, f.neg(y)});
        }
    }
    return pts;
}

namespace {

// Prime factors of n by trial division; only for small n.
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

// Order test used by both generator searches: the group has order p + 1,
// so an element generates iff e^((p+1)/f) != id for every prime f | p + 1.
// Safe-order contexts have p + 1 = 2 * p'.
template <typename Elem, typename PowFn, typename IdPred>
static bool has_full_order(const Field& f, const Elem& e, PowFn&& powf, IdPred&& is_id) {
    mpz_class order = f.p() + 1;
    if (f.p_prime()) {
        return !is_id(powf(e, order / 2)) && !is_id(powf(e, order / *f.p_prime()));
    }
    if (f.p() >= (1u << 20))
        throw std::invalid_argument(
            "generator search needs a safe-order context for large fields");
    for (const mpz_class& q : trial_factor(order))
        if (is_id(powf(e, order / q))) return false;
    return true;
}

PellPoint random_generator(const Field& f, const Fe& d, Rng& rng) {
    if (f.chi(d) != -1)
        throw std::invalid_argument("random_generator: chi(d) must be -1");
    const PellPoint id{1, 0};
    for (;;) {
        // m |-> ((m^2+d)/(m^2-d), 2m/(m^2-d)) is a bijection onto the conic
        // minus the identity, so this draws uniformly among the p
        // non-identity points; m^2 = d cannot happen since chi(d) = -1.
        Fe m = f.random_element(rng);
        Fe u = f.mul(m, f.inv(f.sub(f.sqr(m), d)));
        Fe t = f.mul(m, u);
        PellPoint cand{f.sub(f.add(t, t), Fe(1)), f.add(u, u)};
        if (has_full_order(
                f, cand, [&](const PellPoint& p, const mpz_class& e) { return point_pow(f, p, e, d); },
                [&](const PellPoint& p) { return p == id; }))
            return cand;
    }
}

}  // namespace pell
