#pragma once

#include <gmpxx.h>

#include <optional>

#include "pell/rng.hpp"

namespace pell {

// Field element, kept as a canonical residue in [0, p).
using Fe = mpz_class;

// Prime-field context.  All arithmetic is explicit through this class; an
// Fe carries no pointer back to its field.  Mixing residues of different
// fields is a caller bug.
//
// Contexts produced by gen_context have safe order: p = 2*p' - 1 with p and
// p' both prime, so the Pell groups below have order p + 1 = 2*p'.  Such a
// context keeps p' for the fast generator-order test.  Contexts built from
// a bare prime (small test fields) work everywhere except where noted.
class Field {
public:
    // p must be an odd prime >= 3 (primality is the caller's responsibility;
    // gen_context and the tests only construct verified primes).
    explicit Field(mpz_class p);

    // Safe-order form: requires p = 2*p_prime - 1.
    Field(mpz_class p, mpz_class p_prime);

    const mpz_class& p() const { return p_; }
    const std::optional<mpz_class>& p_prime() const { return p_prime_; }

    // Bit length of p.
    unsigned bits() const { return bits_; }

    // Canonical residue of an arbitrary integer.
    Fe reduce(const mpz_class& x) const;

    Fe add(const Fe& a, const Fe& b) const;
    Fe sub(const Fe& a, const Fe& b) const;
    Fe neg(const Fe& a) const;
    Fe mul(const Fe& a, const Fe& b) const;
    Fe sqr(const Fe& a) const;

    // Throws ZeroInverse on a = 0.
    Fe inv(const Fe& a) const;

    // a^e mod p for e >= 0, with pow(0, 0) = 1.
    Fe pow(const Fe& a, const mpz_class& e) const;

    // Quadratic character by Euler's criterion: +1 for a nonzero square,
    // -1 for a non-square, 0 for a = 0.
    int chi(const Fe& a) const;

    // Tonelli-Shanks square root; returns the smaller of the two roots
    // (as canonical residues).  Throws NotASquare on chi(a) = -1.
    Fe sqrt(const Fe& a) const;

    Fe random_element(Rng& rng) const;

    // Uniform over the non-squares (rejection sampling).
    Fe random_nonsquare(Rng& rng) const;

    // Smallest d >= 2 with chi(d) = -1.
    Fe min_nonsquare() const;

    bool operator==(const Field& other) const { return p_ == other.p_; }

private:
    mpz_class p_;
    std::optional<mpz_class> p_prime_;
    unsigned bits_;
};

// Miller-Rabin with `rounds` uniformly random bases (plus a small trial
// division prefilter).  Composites slip through with probability at most
// 4^-rounds.
bool is_probable_prime(const mpz_class& n, Rng& rng, int rounds = 64);

// Generates a safe-order prime context: picks p' uniformly among n'-bit
// primes (n' = n - 1) until p = 2*p' - 1 is an n-bit prime as well.  Both
// primality checks use 64 Miller-Rabin rounds.  Requires n >= 8.
Field gen_context(unsigned n, Rng& rng);

}  // namespace pell
