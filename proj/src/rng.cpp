#include "pell/rng.hpp"

#include <random>
#include <stdexcept>

namespace pell {

Rng::Rng(std::uint64_t seed) : state_(gmp_randinit_mt) {
    mpz_class s;
    mpz_import(s.get_mpz_t(), 1, 1, sizeof(seed), 0, 0, &seed);
    state_.seed(s);
}

Rng::Rng(const mpz_class& seed) : state_(gmp_randinit_mt) { state_.seed(seed); }

Rng Rng::from_entropy() {
    std::random_device rd;
    mpz_class s = 0;
    for (int i = 0; i < 4; ++i) {
        s <<= 32;
        s += static_cast<unsigned long>(rd());
    }
    return Rng(s);
}

mpz_class Rng::below(const mpz_class& bound) {
    if (bound <= 0) throw std::invalid_argument("Rng::below: bound must be positive");
    return state_.get_z_range(bound);
}

mpz_class Rng::bits(unsigned n) { return state_.get_z_bits(n); }

mpz_class Rng::range(const mpz_class& lo, const mpz_class& hi) {
    if (lo > hi) throw std::invalid_argument("Rng::range: empty range");
    return lo + below(hi - lo + 1);
}

std::uint64_t Rng::u64() {
    mpz_class v = bits(64);
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, v.get_mpz_t());
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    // splitmix64 finalizer over the concatenated inputs
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    // The tag enters raw: xoring two finalizer images would make the seed
    // and the first tag interchangeable.
    std::uint64_t h = mix(seed);
    for (std::uint64_t t : tags) h = mix(h ^ t);
    return h;
}

}  // namespace pell
