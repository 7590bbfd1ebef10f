#include "pell/field.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "pell/errors.hpp"
#include "pell/ops.hpp"

namespace pell {

OpCounts& op_counts() {
    thread_local OpCounts counts;
    return counts;
}

Field::Field(mpz_class p) : p_(std::move(p)) {
    if (p_ < 3 || mpz_even_p(p_.get_mpz_t()))
        throw std::invalid_argument("Field: modulus must be an odd prime >= 3");
    bits_ = static_cast<unsigned>(mpz_sizeinbase(p_.get_mpz_t(), 2));
}

Field::Field(mpz_class p, mpz_class p_prime) : Field(std::move(p)) {
    if (p_ != 2 * p_prime - 1)
        throw std::invalid_argument("Field: p = 2*p' - 1 violated");
    p_prime_ = std::move(p_prime);
}

Fe Field::reduce(const mpz_class& x) const {
    Fe r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Fe Field::add(const Fe& a, const Fe& b) const {
    Fe r = a + b;
    if (r >= p_) r -= p_;
    return r;
}

Fe Field::sub(const Fe& a, const Fe& b) const {
    Fe r = a - b;
    if (r < 0) r += p_;
    return r;
}

Fe Field::neg(const Fe& a) const { return a == 0 ? a : Fe(p_ - a); }

Fe Field::mul(const Fe& a, const Fe& b) const {
    ++op_counts().field_mul;
    Fe r = a * b;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Fe Field::sqr(const Fe& a) const {
    ++op_counts().field_mul;
    Fe r = a * a;
    mpz_mod(r.get_mpz_t(), r.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Fe Field::inv(const Fe& a) const {
    if (a == 0) throw ZeroInverse();
    ++op_counts().field_inv;
    Fe r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Fe Field::pow(const Fe& a, const mpz_class& e) const {
    if (e < 0) throw std::invalid_argument("Field::pow: negative exponent");
    if (e == 0) return 1;  // including 0^0 = 1
    Fe r;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p_.get_mpz_t());
    return r;
}

int Field::chi(const Fe& a) const {
    if (a == 0) return 0;
    Fe e = pow(a, (p_ - 1) / 2);
    return e == 1 ? 1 : -1;
}

Fe Field::sqrt(const Fe& a) const {
    if (a == 0) return 0;
    if (chi(a) != 1) throw NotASquare();
    Fe r;
    if (mpz_fdiv_ui(p_.get_mpz_t(), 4) == 3) {
        r = pow(a, (p_ + 1) / 4);
    } else {
        // Tonelli-Shanks: p - 1 = q * 2^s with q odd
        mpz_class q = p_ - 1;
        unsigned long s = mpz_scan1(q.get_mpz_t(), 0);
        mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), s);
        Fe z = min_nonsquare();
        Fe c = pow(z, q);
        Fe t = pow(a, q);
        r = pow(a, (q + 1) / 2);
        unsigned long m = s;
        while (t != 1) {
            // least i with t^(2^i) = 1
            unsigned long i = 0;
            Fe t2 = t;
            while (t2 != 1) {
                t2 = sqr(t2);
                ++i;
            }
            Fe b = c;
            for (unsigned long j = 0; j + i + 1 < m; ++j) b = sqr(b);
            m = i;
            c = sqr(b);
            t = mul(t, c);
            r = mul(r, b);
        }
    }
    Fe other = p_ - r;
    return r <= other ? r : other;
}

Fe Field::random_element(Rng& rng) const { return rng.below(p_); }

Fe Field::random_nonsquare(Rng& rng) const {
    for (;;) {
        Fe d = rng.below(p_);
        if (chi(d) == -1) return d;
    }
}

Fe Field::min_nonsquare() const {
    for (Fe d = 2;; ++d) {
        if (chi(d) == -1) return d;
    }
}

namespace {

const std::vector<unsigned long>& small_primes() {
    // odd primes below 2^20, for trial division and the double-prime sieve
    static const std::vector<unsigned long> table = [] {
        const unsigned long limit = 1u << 20;
        std::vector<bool> composite(limit, false);
        std::vector<unsigned long> primes;
        for (unsigned long i = 3; i < limit; i += 2) {
            if (composite[i]) continue;
            primes.push_back(i);
            for (unsigned long j = i * i; j < limit; j += 2 * i)
                composite[j] = true;
        }
        return primes;
    }();
    return table;
}

bool miller_rabin_round(const mpz_class& n, const mpz_class& base, const mpz_class& d,
                        unsigned long r) {
    mpz_class x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return true;
    for (unsigned long i = 1; i < r; ++i) {
        x = x * x % n;
        if (x == n - 1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Miller-Rabin with the single base 2; cheap candidate filter.
bool probable_prime_base2(const mpz_class& n) {
    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    return miller_rabin_round(n, 2, d, r);
}

}  // namespace

bool is_probable_prime(const mpz_class& n, Rng& rng, int rounds) {
    if (n < 2) return false;
    if (n == 2) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (unsigned long q : small_primes()) {
        if (mpz_class(q) * q > n) break;
        if (mpz_divisible_ui_p(n.get_mpz_t(), q)) return n == q;
        if (q > 1000) break;  // the rest is Miller-Rabin's job
    }
    mpz_class d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (int i = 0; i < rounds; ++i) {
        // uniform base in [2, n - 2]; tiny n have few bases, duplicates are fine
        mpz_class base = n > 4 ? mpz_class(2 + rng.below(n - 3)) : mpz_class(2);
        if (!miller_rabin_round(n, base, d, r)) return false;
    }
    return true;
}

namespace {

constexpr int kPrimeRounds = 64;

// Rejection sampling over the p' range; fine while candidates are dense.
Field gen_context_small(unsigned n, Rng& rng) {
    mpz_class lo = (mpz_class(1) << (n - 2)) + 1;
    mpz_class hi = mpz_class(1) << (n - 1);
    for (;;) {
        mpz_class pp = rng.range(lo, hi);
        mpz_setbit(pp.get_mpz_t(), 0);  // odd
        if (pp < lo || pp > hi) continue;
        if (!is_probable_prime(pp, rng, kPrimeRounds)) continue;
        mpz_class p = 2 * pp - 1;
        if (!is_probable_prime(p, rng, kPrimeRounds)) continue;
        return Field(p, pp);
    }
}

}  // namespace

Field gen_context(unsigned n, Rng& rng) {
    if (n < 8) throw std::invalid_argument("gen_context: n must be at least 8");
    if (n < 32) return gen_context_small(n, rng);

    // Sieve a random window of odd p' candidates, striking multiples of
    // small primes out of both arithmetic progressions p' = base + 2i and
    // p = 2*p' - 1 at once, then Miller-Rabin the survivors.
    const auto& primes = small_primes();
    const unsigned long sieve_bound =
        std::min<unsigned long>(1u << 20, std::max<unsigned long>(1u << 12, n * n));
    const unsigned long window = 1u << 15;  // candidates per window

    mpz_class lo = (mpz_class(1) << (n - 2)) + 1;
    mpz_class hi = mpz_class(1) << (n - 1);
    std::vector<bool> struck(window);

    for (;;) {
        mpz_class base = rng.range(lo, hi - 2 * static_cast<long>(window));
        mpz_setbit(base.get_mpz_t(), 0);
        struck.assign(window, false);

        for (unsigned long s : primes) {
            if (s >= sieve_bound) break;
            unsigned long rem = mpz_fdiv_ui(base.get_mpz_t(), s);
            unsigned long inv2 = (s + 1) / 2;                       // 1/2 mod s
            unsigned long inv4 = (unsigned long)((__uint128_t)inv2 * inv2 % s);
            // base + 2i = 0 (mod s)
            unsigned long i0 = (unsigned long)((__uint128_t)(s - rem) % s * inv2 % s);
            for (unsigned long i = i0; i < window; i += s) struck[i] = true;
            // 2*(base + 2i) - 1 = 0 (mod s)  =>  4i = 1 - 2*base (mod s)
            unsigned long t = (1 + 2 * (s - rem)) % s;
            unsigned long i1 = (unsigned long)((__uint128_t)t * inv4 % s);
            for (unsigned long i = i1; i < window; i += s) struck[i] = true;
        }

        for (unsigned long i = 0; i < window; ++i) {
            if (struck[i]) continue;
            mpz_class pp = base + 2 * static_cast<long>(i);
            if (!probable_prime_base2(pp)) continue;
            mpz_class p = 2 * pp - 1;
            if (!probable_prime_base2(p)) continue;
            if (!is_probable_prime(pp, rng, kPrimeRounds)) continue;
            if (!is_probable_prime(p, rng, kPrimeRounds)) continue;
            return Field(p, pp);
        }
    }
}

}  // namespace pell
