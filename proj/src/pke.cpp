#include "pell/pke.hpp"

#include <stdexcept>

#include "pell/errors.hpp"

namespace pell {

const std::string& to_string(SchemeId scheme) {
    static const std::string names[] = {"points", "params", "alt"};
    return names[static_cast<int>(scheme)];
}

SchemeId scheme_from_string(const std::string& token) {
    if (token == "points") return SchemeId::points;
    if (token == "params") return SchemeId::parameters;
    if (token == "alt") return SchemeId::alternative;
    throw std::invalid_argument("unknown scheme: " + token);
}

SchemeSetup keygen_setup_on(SchemeId scheme, const Field& f, Rng& rng) {
    SchemeSetup s{scheme, f, 0, PellPoint{}};
    switch (scheme) {
        case SchemeId::points:
            s.d = f.random_nonsquare(rng);
            s.generator = random_generator(f, s.d, rng);
            break;
        case SchemeId::parameters:
            s.d = f.random_nonsquare(rng);
            s.generator = random_param_generator(f, s.d, rng);
            break;
        case SchemeId::alternative:
            s.d = f.min_nonsquare();
            s.generator = random_param_generator(f, s.d, rng);
            break;
    }
    return s;
}

SchemeSetup keygen_setup(SchemeId scheme, unsigned n, Rng& rng) {
    Field f = gen_context(n, rng);
    return keygen_setup_on(scheme, f, rng);
}

std::pair<PublicKey, SecretKey> keygen_keys(const SchemeSetup& setup, Rng& rng) {
    const Field& f = setup.field;
    mpz_class sk = 2 + rng.below(f.p() - 1);  // uniform in {2, ..., q}
    PublicKey pk{setup.scheme, f, setup.d, PointsKeys{}};
    if (setup.scheme == SchemeId::points) {
        const auto& g = std::get<PellPoint>(setup.generator);
        pk.keys = PointsKeys{g, point_pow(f, g, sk, setup.d)};
    } else {
        const auto& g = std::get<Parameter>(setup.generator);
        pk.keys = ParamKeys{g, param_pow(f, g, sk, setup.d)};
    }
    return {pk, SecretKey{sk}};
}

std::pair<PublicKey, SecretKey> keygen(SchemeId scheme, unsigned n, Rng& rng) {
    SchemeSetup setup = keygen_setup(scheme, n, rng);
    return keygen_keys(setup, rng);
}

unsigned capacity_bits(SchemeId scheme, unsigned n, unsigned r_pad) {
    if (r_pad < 1) throw std::invalid_argument("capacity_bits: r_pad must be >= 1");
    if (n < r_pad + 2) throw std::invalid_argument("capacity_bits: field too small for pad");
    unsigned per_coord = n - 1 - r_pad;
    return scheme == SchemeId::alternative ? 2 * per_coord : per_coord;
}

PellPoint encode_point(const Field& f, const mpz_class& msg, const Fe& d, unsigned r_pad) {
    if (r_pad < 1) throw std::invalid_argument("encode_point: r_pad must be >= 1");
    if (msg < 0) throw std::invalid_argument("encode_point: negative message");
    mpz_class base = msg << r_pad;
    if (base >= f.p()) throw MessageTooLarge("encode_point: message does not fit the field");
    mpz_class window = mpz_class(1) << r_pad;
    for (mpz_class k = 0; k < window; ++k) {
        Fe y = base + k;
        if (y >= f.p()) break;
        Fe t = f.add(f.mul(d, f.sqr(y)), Fe(1));
        if (f.chi(t) != -1) return {f.sqrt(t), y};
    }
    throw EncodingFailure("encode_point: no embedding in the search window");
}

mpz_class decode_point(const PellPoint& pt, unsigned r_pad) {
    mpz_class msg;
    mpz_fdiv_q_2exp(msg.get_mpz_t(), pt.y.get_mpz_t(), r_pad);
    return msg;
}

AltEncoding encode_alt(const Field& f, const mpz_class& msg, unsigned r_pad) {
    if (msg < 0) throw std::invalid_argument("encode_alt: negative message");
    unsigned cap_half = capacity_bits(SchemeId::points, f.bits(), r_pad);
    if (msg >= mpz_class(1) << (2 * cap_half))
        throw MessageTooLarge("encode_alt: message does not fit the field");
    mpz_class x_raw, y_raw;
    mpz_fdiv_q_2exp(x_raw.get_mpz_t(), msg.get_mpz_t(), cap_half);
    mpz_fdiv_r_2exp(y_raw.get_mpz_t(), msg.get_mpz_t(), cap_half);
    // y = 0 names no conic point; 1 is free because padded values are
    // either 0 or at least 2^r_pad
    Fe y = y_raw == 0 ? mpz_class(1) : mpz_class(y_raw << r_pad);
    Fe y_sq_inv = f.inv(f.sqr(y));
    mpz_class base = x_raw << r_pad;
    mpz_class window = mpz_class(1) << r_pad;
    for (mpz_class k = 0; k < window; ++k) {
        Fe x = base + k;
        if (x >= f.p()) break;
        Fe t = f.sub(f.sqr(x), Fe(1));
        if (f.chi(t) != -1) continue;  // need chi(d) = -1 and t, y^2 differ by a square
        Fe d = f.mul(t, y_sq_inv);
        Fe m = f.mul(f.add(x, Fe(1)), f.inv(y));
        return {Parameter::finite(m), d};
    }
    throw EncodingFailure("encode_alt: no embedding in the search window");
}

mpz_class decode_alt(const Field& f, const PellPoint& pt, unsigned r_pad) {
    unsigned cap_half = capacity_bits(SchemeId::points, f.bits(), r_pad);
    mpz_class x_raw, y_raw;
    mpz_fdiv_q_2exp(x_raw.get_mpz_t(), pt.x.get_mpz_t(), r_pad);
    if (pt.y != 1) mpz_fdiv_q_2exp(y_raw.get_mpz_t(), pt.y.get_mpz_t(), r_pad);
    return (x_raw << cap_half) | y_raw;
}

namespace {

mpz_class draw_exponent(const Field& f, Rng& rng) { return 2 + rng.below(f.p() - 1); }

}  // namespace

PointsCiphertext encrypt_points(const Field& f, const PointsKeys& keys, const Fe& d,
                                const mpz_class& msg, Rng& rng, unsigned r_pad) {
    mpz_class r = draw_exponent(f, rng);
    PellPoint m = encode_point(f, msg, d, r_pad);
    PellPoint c1 = point_pow(f, keys.g, r, d);
    PellPoint c2 = brahmagupta(f, point_pow(f, keys.h, r, d), m, d);
    return {c1, c2};
}

mpz_class decrypt_points(const Field& f, const Fe& d, const PointsCiphertext& ct,
                         const SecretKey& sk, unsigned r_pad) {
    PellPoint shared = point_pow(f, ct.c1, sk.sk, d);
    PellPoint m = brahmagupta(f, conjugate(f, shared), ct.c2, d);
    return decode_point(m, r_pad);
}

ParamsCiphertext encrypt_params(const Field& f, const ParamKeys& keys, const Fe& d,
                                const mpz_class& msg, Rng& rng) {
    if (msg < 0) throw std::invalid_argument("encrypt_params: negative message");
    if (msg >= f.p()) throw MessageTooLarge("encrypt_params: message must be below q");
    mpz_class r = draw_exponent(f, rng);
    Parameter m = Parameter::finite(msg);
    Parameter c1 = param_pow(f, keys.g, r, d);
    Parameter c2 = param_mul(f, param_pow(f, keys.h, r, d), m, d);
    return {c1, c2};
}

mpz_class decrypt_params(const Field& f, const Fe& d, const ParamsCiphertext& ct,
                         const SecretKey& sk) {
    Parameter shared = param_pow(f, ct.c1, sk.sk, d);
    Parameter m = param_mul(f, param_inverse(f, shared), ct.c2, d);
    if (m.is_alpha()) throw DecodeFailure("decrypt_params: ciphertext decodes to the identity");
    return m.value();
}

AltCiphertext encrypt_alt(const Field& f, const ParamKeys& keys, const Fe& d_prime,
                          const mpz_class& msg, Rng& rng, unsigned r_pad) {
    mpz_class r = draw_exponent(f, rng);
    AltEncoding enc = encode_alt(f, msg, r_pad);
    // both d and d' are non-squares, so d/d' is a square and the scaling
    // parameter isomorphism moves g, h into P_{d,q}
    Fe s = f.sqrt(f.mul(enc.d, f.inv(d_prime)));
    Parameter gs = param_iso_scale(f, keys.g, s);
    Parameter hs = param_iso_scale(f, keys.h, s);
    Parameter c1 = param_pow(f, gs, r, enc.d);
    Parameter c2 = param_mul(f, param_pow(f, hs, r, enc.d), enc.m, enc.d);
    return {c1, c2, enc.d};
}

mpz_class decrypt_alt(const Field& f, const AltCiphertext& ct, const SecretKey& sk,
                      unsigned r_pad) {
    Parameter shared = param_pow(f, ct.c1, sk.sk, ct.d);
    Parameter m = param_mul(f, param_inverse(f, shared), ct.c2, ct.d);
    if (m.is_alpha()) throw DecodeFailure("decrypt_alt: ciphertext decodes to the identity");
    PellPoint pt = point_of_param(f, m, ConicParams::classic(f, ct.d));
    return decode_alt(f, pt, r_pad);
}

Ciphertext encrypt(const PublicKey& pk, const mpz_class& msg, Rng& rng, unsigned r_pad) {
    switch (pk.scheme) {
        case SchemeId::points:
            return {pk.scheme, encrypt_points(pk.field, pk.points(), pk.d, msg, rng, r_pad)};
        case SchemeId::parameters:
            return {pk.scheme, encrypt_params(pk.field, pk.params(), pk.d, msg, rng)};
        case SchemeId::alternative:
            return {pk.scheme, encrypt_alt(pk.field, pk.params(), pk.d, msg, rng, r_pad)};
    }
    throw std::invalid_argument("encrypt: bad scheme");
}

mpz_class decrypt(const PublicKey& pk, const SecretKey& sk, const Ciphertext& ct,
                  unsigned r_pad) {
    if (ct.scheme != pk.scheme)
        throw std::invalid_argument("decrypt: ciphertext scheme does not match key");
    switch (pk.scheme) {
        case SchemeId::points:
            return decrypt_points(pk.field, pk.d, std::get<PointsCiphertext>(ct.body), sk, r_pad);
        case SchemeId::parameters:
            return decrypt_params(pk.field, pk.d, std::get<ParamsCiphertext>(ct.body), sk);
        case SchemeId::alternative:
            return decrypt_alt(pk.field, std::get<AltCiphertext>(ct.body), sk, r_pad);
    }
    throw std::invalid_argument("decrypt: bad scheme");
}

}  // namespace pell
