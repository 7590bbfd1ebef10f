#pragma once

#include <string>
#include <utility>
#include <variant>

#include "pell/param_group.hpp"

namespace pell {

// The three ElGamal variants: "points" works on conic points with the
// Brahmagupta product, "parameters" works on the parameter line through
// the parameterization, and "alternative" moves the public generators into
// a per-message parameter group chosen by the encoder.
enum class SchemeId { points, parameters, alternative };

// Wire / CLI / CSV token: "points", "params", "alt".
const std::string& to_string(SchemeId scheme);
SchemeId scheme_from_string(const std::string& token);

struct PointsKeys {
    PellPoint g;
    PellPoint h;  // g^sk
};

struct ParamKeys {
    Parameter g;
    Parameter h;  // g^sk
};

struct PublicKey {
    SchemeId scheme;
    Field field;
    // Conic coefficient.  For "points" and "parameters" this is a random
    // non-square d; for "alternative" it is the minimal non-square d', the
    // per-message d living in the ciphertext instead.
    Fe d;
    std::variant<PointsKeys, ParamKeys> keys;

    const PointsKeys& points() const { return std::get<PointsKeys>(keys); }
    const ParamKeys& params() const { return std::get<ParamKeys>(keys); }
};

struct SecretKey {
    mpz_class sk;  // in {2, ..., q}
};

// Output of the scheme-parameter half of key generation (context, conic
// coefficient, group generator).  Kept separate so the benchmark can time
// parameter generation and key derivation independently.
struct SchemeSetup {
    SchemeId scheme;
    Field field;
    Fe d;
    std::variant<PellPoint, Parameter> generator;
};

// Generates a fresh safe-order context of n bits, then the scheme
// parameters on it.
SchemeSetup keygen_setup(SchemeId scheme, unsigned n, Rng& rng);

// Scheme parameters on an existing context (used by tests and by the
// full-keygen path after gen_context).
SchemeSetup keygen_setup_on(SchemeId scheme, const Field& f, Rng& rng);

// Draws sk uniformly from {2, ..., q} and derives h = g^sk.
std::pair<PublicKey, SecretKey> keygen_keys(const SchemeSetup& setup, Rng& rng);

std::pair<PublicKey, SecretKey> keygen(SchemeId scheme, unsigned n, Rng& rng);

struct PointsCiphertext {
    PellPoint c1;
    PellPoint c2;
    bool operator==(const PointsCiphertext&) const = default;
};

struct ParamsCiphertext {
    Parameter c1;
    Parameter c2;
    bool operator==(const ParamsCiphertext&) const = default;
};

struct AltCiphertext {
    Parameter c1;
    Parameter c2;
    Fe d;  // per-message conic coefficient chosen by the encoder
    bool operator==(const AltCiphertext&) const = default;
};

struct Ciphertext {
    SchemeId scheme;
    std::variant<PointsCiphertext, ParamsCiphertext, AltCiphertext> body;
};

// Reserve width (bits) of the embedding search window.  Each candidate in
// the window survives with probability about 1/2, so 8 reserved bits push
// the per-message embedding failure rate below 2^-256.  Tiny test fields
// use a smaller pad so that messages exist at all.
inline constexpr unsigned kDefaultPad = 8;

// Plaintext capacity in bits: n - 1 - r_pad per embedded coordinate, twice
// that for "alternative" (it embeds both coordinates).  The -1 keeps every
// padded value below p, which is an n-bit prime and may sit anywhere in
// [2^(n-1), 2^n).  For "parameters" the capacity is a conservative bound:
// encrypt itself accepts any m < q.
unsigned capacity_bits(SchemeId scheme, unsigned n, unsigned r_pad = kDefaultPad);

// Embeds msg into the y-coordinate of a point of x^2 - d*y^2 = 1:
// y = msg * 2^r_pad + k for the first k making 1 + d*y^2 a square, x the
// smaller square root.  Throws MessageTooLarge if msg * 2^r_pad >= p and
// EncodingFailure if no k in the window works.
PellPoint encode_point(const Field& f, const mpz_class& msg, const Fe& d, unsigned r_pad);

// msg = y >> r_pad.
mpz_class decode_point(const PellPoint& pt, unsigned r_pad);

struct AltEncoding {
    Parameter m;
    Fe d;
};

// Splits msg into two halves of capacity_bits/2 bits, embeds them as the
// two padded coordinates of a point (x, y), and chooses the conic the
// point itself dictates: d = (x^2 - 1) / y^2, searching the x window until
// chi(d) = -1.  A zero y half is remapped to y = 1 (no padded value
// collides with it).  Returns the parameter m = (x + 1) / y of the point
// together with d.
AltEncoding encode_alt(const Field& f, const mpz_class& msg, unsigned r_pad);

// Inverse of encode_alt given the decoded point.
mpz_class decode_alt(const Field& f, const PellPoint& pt, unsigned r_pad);

// ElGamal on conic points: C1 = G^r, C2 = H^r x M.
PointsCiphertext encrypt_points(const Field& f, const PointsKeys& keys, const Fe& d,
                                const mpz_class& msg, Rng& rng, unsigned r_pad = kDefaultPad);
mpz_class decrypt_points(const Field& f, const Fe& d, const PointsCiphertext& ct,
                         const SecretKey& sk, unsigned r_pad = kDefaultPad);

// ElGamal on the parameter line: the message is the parameter value itself
// (any m < q; MessageTooLarge otherwise), c1 = g^r, c2 = h^r * m.
ParamsCiphertext encrypt_params(const Field& f, const ParamKeys& keys, const Fe& d,
                                const mpz_class& msg, Rng& rng);
mpz_class decrypt_params(const Field& f, const Fe& d, const ParamsCiphertext& ct,
                         const SecretKey& sk);

// Per-message-conic ElGamal: the encoder picks (m, d) via encode_alt, maps
// the public g, h into P_{d,q} by the s = sqrt(d/d') parameter scaling,
// and ships d in the ciphertext.
AltCiphertext encrypt_alt(const Field& f, const ParamKeys& keys, const Fe& d_prime,
                          const mpz_class& msg, Rng& rng, unsigned r_pad = kDefaultPad);
mpz_class decrypt_alt(const Field& f, const AltCiphertext& ct, const SecretKey& sk,
                      unsigned r_pad = kDefaultPad);

// Scheme dispatch over the per-scheme functions above.  Every encryption
// draws the ephemeral exponent r from rng first, then performs exactly two
// group exponentiations; every decryption performs exactly one.
Ciphertext encrypt(const PublicKey& pk, const mpz_class& msg, Rng& rng,
                   unsigned r_pad = kDefaultPad);
mpz_class decrypt(const PublicKey& pk, const SecretKey& sk, const Ciphertext& ct,
                  unsigned r_pad = kDefaultPad);

}  // namespace pell
