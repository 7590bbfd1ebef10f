#pragma once

#include <string>
#include <vector>

#include "pell/pke.hpp"

namespace pell {

inline constexpr int kWireVersion = 1;

// One serialized object.  The textual wire format is
//
//     pell/<version> <kind> <scheme>\n
//     <label>=<hex>\n
//     ...
//
// with kind one of pk | sk | ct, scheme one of points | params | alt, and
// every value lowercase hex without leading zeros (zero itself is "0").
// Labels come in a fixed canonical order per (kind, scheme); parse_record
// enforces it, which makes serialization canonical and byte-diffable.
// An alpha parameter is stored as the value q: residues are < q, so the
// encoding is unambiguous.
struct WireRecord {
    int version = kWireVersion;
    std::string kind;
    SchemeId scheme = SchemeId::points;
    std::vector<std::pair<std::string, mpz_class>> fields;

    bool operator==(const WireRecord&) const = default;
};

// Canonical label list for a (kind, scheme) pair.  Throws
// std::invalid_argument on an unknown kind.
const std::vector<std::string>& wire_labels(const std::string& kind, SchemeId scheme);

std::string serialize(const WireRecord& rec);

// Strict parse: exact header shape, known version/kind/scheme, canonical
// hex, labels exactly in canonical order, LF line endings, no trailing
// garbage.  Structural only; range checks live in the bind_* functions.
// All violations throw ParseError carrying the 1-based line number.
WireRecord parse_record(const std::string& text);

WireRecord public_key_record(const PublicKey& pk);
WireRecord secret_key_record(const SecretKey& sk, SchemeId scheme);
WireRecord ciphertext_record(const Ciphertext& ct, const PublicKey& pk);

// Semantic validation on top of parse_record, with line-precise errors:
// residues in range, q odd and >= 3, chi(d) = -1, points on their conic,
// sk in {2, ..., q}.  Primality of q and the order of the generator are
// not re-verified here; keys are trusted to come from keygen.
PublicKey bind_public_key(const WireRecord& rec);
SecretKey bind_secret_key(const WireRecord& rec, const PublicKey& pk);
Ciphertext bind_ciphertext(const WireRecord& rec, const PublicKey& pk);

// Serialized-object payload sizes for one field size n, in bits, counting
// one n-bit slot per stored residue (the alternative scheme's d' slot
// counts its true width; it is a small constant by construction).
// Obtained by instantiating each scheme, serializing, and adding up the
// slots, so the numbers reflect what the codec actually emits.
struct SizeReport {
    SchemeId scheme;
    unsigned n;
    unsigned pk_bits;
    unsigned sk_bits;
    unsigned ct_bits;
    unsigned plaintext_bits;  // capacity at the default pad
};

std::vector<SizeReport> measure_sizes(unsigned n, Rng& rng);

}  // namespace pell
