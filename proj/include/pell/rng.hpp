#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>

namespace pell {

// Deterministic random source (Mersenne Twister).  Equal seeds give equal
// streams, which the benchmark harness and the tests rely on.
class Rng {
public:
    explicit Rng(std::uint64_t seed);
    explicit Rng(const mpz_class& seed);

    // Nondeterministic seed from the OS entropy source.
    static Rng from_entropy();

    // Uniform in [0, bound).  bound must be positive.
    mpz_class below(const mpz_class& bound);

    // Uniform n-bit value, i.e. in [0, 2^n).
    mpz_class bits(unsigned n);

    // Uniform in [lo, hi] inclusive.
    mpz_class range(const mpz_class& lo, const mpz_class& hi);

    std::uint64_t u64();

private:
    gmp_randclass state_;
};

// Mixes a base seed with distinguishing tags (scheme index, bit size,
// repetition number, ...) into an independent-looking stream seed.
std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags);

}  // namespace pell
