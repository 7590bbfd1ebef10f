#include "pell/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "pell/errors.hpp"

namespace pell {

const std::vector<std::string>& wire_labels(const std::string& kind, SchemeId scheme) {
    static const std::vector<std::string> pk_points{"q", "d", "gx", "gy", "hx", "hy"};
    static const std::vector<std::string> pk_params{"q", "d", "g", "h"};
    static const std::vector<std::string> pk_alt{"q", "dprime", "g", "h"};
    static const std::vector<std::string> sk_any{"sk"};
    static const std::vector<std::string> ct_points{"c1x", "c1y", "c2x", "c2y"};
    static const std::vector<std::string> ct_params{"c1", "c2"};
    static const std::vector<std::string> ct_alt{"c1", "c2", "d"};
    if (kind == "pk") {
        switch (scheme) {
            case SchemeId::points: return pk_points;
            case SchemeId::parameters: return pk_params;
            case SchemeId::alternative: return pk_alt;
        }
    }
    if (kind == "sk") return sk_any;
    if (kind == "ct") {
        switch (scheme) {
            case SchemeId::points: return ct_points;
            case SchemeId::parameters: return ct_params;
            case SchemeId::alternative: return ct_alt;
        }
    }
    throw std::invalid_argument("wire_labels: unknown record kind " + kind);
}

namespace {

std::string hex_of(const mpz_class& v) { return v.get_str(16); }

bool canonical_hex(const std::string& s) {
    if (s.empty()) return false;
    if (s.size() > 1 && s[0] == '0') return false;
    return std::all_of(s.begin(), s.end(),
                       [](char c) { return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'); });
}

}  // namespace

std::string serialize(const WireRecord& rec) {
    std::string out = "pell/" + std::to_string(rec.version) + " " + rec.kind + " " +
                      to_string(rec.scheme) + "\n";
    for (const auto& [label, value] : rec.fields) out += label + "=" + hex_of(value) + "\n";
    return out;
}

WireRecord parse_record(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t nl = text.find('\n', start);
        if (nl == std::string::npos)
            throw ParseError(static_cast<int>(lines.size()) + 1, "missing trailing newline");
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.empty()) throw ParseError(1, "empty input");

    // header: pell/<version> <kind> <scheme>
    const std::string& head = lines[0];
    if (head.find('\r') != std::string::npos) throw ParseError(1, "carriage return in input");
    if (head.rfind("pell/", 0) != 0) throw ParseError(1, "expected 'pell/' header");
    std::size_t sp1 = head.find(' ');
    if (sp1 == std::string::npos) throw ParseError(1, "malformed header");
    std::string ver = head.substr(5, sp1 - 5);
    if (ver != std::to_string(kWireVersion))
        throw ParseError(1, "unsupported version '" + ver + "'");
    std::size_t sp2 = head.find(' ', sp1 + 1);
    if (sp2 == std::string::npos) throw ParseError(1, "malformed header");
    std::string kind = head.substr(sp1 + 1, sp2 - sp1 - 1);
    std::string scheme_tok = head.substr(sp2 + 1);
    if (kind != "pk" && kind != "sk" && kind != "ct")
        throw ParseError(1, "unknown record kind '" + kind + "'");
    if (scheme_tok != "points" && scheme_tok != "params" && scheme_tok != "alt")
        throw ParseError(1, "unknown scheme '" + scheme_tok + "'");

    WireRecord rec;
    rec.version = kWireVersion;
    rec.kind = kind;
    rec.scheme = scheme_from_string(scheme_tok);

    const auto& expected = wire_labels(kind, rec.scheme);
    for (std::size_t i = 0; i < expected.size(); ++i) {
        int lineno = static_cast<int>(i) + 2;
        if (i + 1 >= lines.size())
            throw ParseError(lineno, "missing label '" + expected[i] + "'");
        const std::string& line = lines[i + 1];
        if (line.find('\r') != std::string::npos)
            throw ParseError(lineno, "carriage return in input");
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) throw ParseError(lineno, "expected label=value");
        std::string label = line.substr(0, eq);
        std::string value = line.substr(eq + 1);
        if (label != expected[i]) {
            auto here = std::find(expected.begin(), expected.end(), label);
            if (here == expected.end())
                throw ParseError(lineno, "unknown label '" + label + "'");
            if (static_cast<std::size_t>(here - expected.begin()) < i)
                throw ParseError(lineno, "duplicate label '" + label + "'");
            throw ParseError(lineno, "expected label '" + expected[i] + "'");
        }
        if (!canonical_hex(value))
            throw ParseError(lineno, "non-canonical hex value for '" + label + "'");
        rec.fields.emplace_back(label, mpz_class(value, 16));
    }
    if (lines.size() > expected.size() + 1) {
        int lineno = static_cast<int>(expected.size()) + 2;
        const std::string& line = lines[expected.size() + 1];
        std::size_t eq = line.find('=');
        std::string label = eq == std::string::npos ? line : line.substr(0, eq);
        auto here = std::find(expected.begin(), expected.end(), label);
        if (here != expected.end())
            throw ParseError(lineno, "duplicate label '" + label + "'");
        throw ParseError(lineno, "unexpected extra line");
    }
    return rec;
}

namespace {

// Record fields are positional after parse_record, and the label at index
// i always sits on line i + 2.
const mpz_class& field_at(const WireRecord& rec, std::size_t i) { return rec.fields[i].second; }

int line_of(std::size_t i) { return static_cast<int>(i) + 2; }

void check_residue(const mpz_class& v, const mpz_class& q, std::size_t i,
                   const std::string& label) {
    if (v >= q) throw ParseError(line_of(i), "'" + label + "' is out of range");
}

Parameter bind_param(const mpz_class& v, const mpz_class& q, std::size_t i,
                     const std::string& label) {
    if (v > q) throw ParseError(line_of(i), "'" + label + "' is out of range");
    if (v == q) return Parameter::alpha();
    return Parameter::finite(v);
}

mpz_class alpha_aware(const Parameter& u, const mpz_class& q) {
    return u.is_alpha() ? q : u.value();
}

}  // namespace

WireRecord public_key_record(const PublicKey& pk) {
    WireRecord rec;
    rec.kind = "pk";
    rec.scheme = pk.scheme;
    rec.fields.emplace_back("q", pk.field.p());
    if (pk.scheme == SchemeId::points) {
        const auto& k = pk.points();
        rec.fields.emplace_back("d", pk.d);
        rec.fields.emplace_back("gx", k.g.x);
        rec.fields.emplace_back("gy", k.g.y);
        rec.fields.emplace_back("hx", k.h.x);
        rec.fields.emplace_back("hy", k.h.y);
    } else {
        const auto& k = pk.params();
        rec.fields.emplace_back(pk.scheme == SchemeId::alternative ? "dprime" : "d", pk.d);
        rec.fields.emplace_back("g", alpha_aware(k.g, pk.field.p()));
        rec.fields.emplace_back("h", alpha_aware(k.h, pk.field.p()));
    }
    return rec;
}

WireRecord secret_key_record(const SecretKey& sk, SchemeId scheme) {
    WireRecord rec;
    rec.kind = "sk";
    rec.scheme = scheme;
    rec.fields.emplace_back("sk", sk.sk);
    return rec;
}

WireRecord ciphertext_record(const Ciphertext& ct, const PublicKey& pk) {
    WireRecord rec;
    rec.kind = "ct";
    rec.scheme = ct.scheme;
    const mpz_class& q = pk.field.p();
    if (ct.scheme == SchemeId::points) {
        const auto& body = std::get<PointsCiphertext>(ct.body);
        rec.fields.emplace_back("c1x", body.c1.x);
        rec.fields.emplace_back("c1y", body.c1.y);
        rec.fields.emplace_back("c2x", body.c2.x);
        rec.fields.emplace_back("c2y", body.c2.y);
    } else if (ct.scheme == SchemeId::parameters) {
        const auto& body = std::get<ParamsCiphertext>(ct.body);
        rec.fields.emplace_back("c1", alpha_aware(body.c1, q));
        rec.fields.emplace_back("c2", alpha_aware(body.c2, q));
    } else {
        const auto& body = std::get<AltCiphertext>(ct.body);
        rec.fields.emplace_back("c1", alpha_aware(body.c1, q));
        rec.fields.emplace_back("c2", alpha_aware(body.c2, q));
        rec.fields.emplace_back("d", body.d);
    }
    return rec;
}

PublicKey bind_public_key(const WireRecord& rec) {
    if (rec.kind != "pk") throw ParseError(1, "expected a pk record");
    const mpz_class& q = field_at(rec, 0);
    if (q < 3 || mpz_even_p(q.get_mpz_t()))
        throw ParseError(line_of(0), "'q' must be an odd prime");
    Field f{q};
    const mpz_class& d = field_at(rec, 1);
    const std::string& d_label = rec.fields[1].first;
    if (d == 0) throw ParseError(line_of(1), "'" + d_label + "' is out of range");
    check_residue(d, q, 1, d_label);
    if (f.chi(d) != -1)
        throw ParseError(line_of(1), "'" + d_label + "' is not a non-square");
    if (rec.scheme == SchemeId::alternative && d != f.min_nonsquare())
        throw ParseError(line_of(1), "'dprime' is not the minimal non-square");

    PublicKey pk{rec.scheme, f, d, PointsKeys{}};
    if (rec.scheme == SchemeId::points) {
        for (std::size_t i = 2; i < 6; ++i) check_residue(field_at(rec, i), q, i, rec.fields[i].first);
        PellPoint g{field_at(rec, 2), field_at(rec, 3)};
        PellPoint h{field_at(rec, 4), field_at(rec, 5)};
        if (!on_conic(f, g, d, Fe(1))) throw ParseError(line_of(2), "'g' is not on the conic");
        if (!on_conic(f, h, d, Fe(1))) throw ParseError(line_of(4), "'h' is not on the conic");
        pk.keys = PointsKeys{g, h};
    } else {
        // public parameters are group elements with finite values; alpha
        // (the identity) is never a legitimate key
        check_residue(field_at(rec, 2), q, 2, "g");
        check_residue(field_at(rec, 3), q, 3, "h");
        pk.keys = ParamKeys{Parameter::finite(field_at(rec, 2)),
                            Parameter::finite(field_at(rec, 3))};
    }
    return pk;
}

SecretKey bind_secret_key(const WireRecord& rec, const PublicKey& pk) {
    if (rec.kind != "sk") throw ParseError(1, "expected an sk record");
    if (rec.scheme != pk.scheme) throw ParseError(1, "secret key scheme does not match key");
    const mpz_class& sk = field_at(rec, 0);
    if (sk < 2 || sk > pk.field.p())
        throw ParseError(line_of(0), "'sk' is out of range");
    return SecretKey{sk};
}

Ciphertext bind_ciphertext(const WireRecord& rec, const PublicKey& pk) {
    if (rec.kind != "ct") throw ParseError(1, "expected a ct record");
    if (rec.scheme != pk.scheme) throw ParseError(1, "ciphertext scheme does not match key");
    const Field& f = pk.field;
    const mpz_class& q = f.p();
    Ciphertext ct{rec.scheme, PointsCiphertext{}};
    if (rec.scheme == SchemeId::points) {
        for (std::size_t i = 0; i < 4; ++i) check_residue(field_at(rec, i), q, i, rec.fields[i].first);
        PellPoint c1{field_at(rec, 0), field_at(rec, 1)};
        PellPoint c2{field_at(rec, 2), field_at(rec, 3)};
        if (!on_conic(f, c1, pk.d, Fe(1))) throw ParseError(line_of(0), "'c1' is not on the conic");
        if (!on_conic(f, c2, pk.d, Fe(1))) throw ParseError(line_of(2), "'c2' is not on the conic");
        ct.body = PointsCiphertext{c1, c2};
    } else if (rec.scheme == SchemeId::parameters) {
        ct.body = ParamsCiphertext{bind_param(field_at(rec, 0), q, 0, "c1"),
                                   bind_param(field_at(rec, 1), q, 1, "c2")};
    } else {
        const mpz_class& d = field_at(rec, 2);
        if (d == 0) throw ParseError(line_of(2), "'d' is out of range");
        check_residue(d, q, 2, "d");
        if (f.chi(d) != -1) throw ParseError(line_of(2), "'d' is not a non-square");
        ct.body = AltCiphertext{bind_param(field_at(rec, 0), q, 0, "c1"),
                                bind_param(field_at(rec, 1), q, 1, "c2"), d};
    }
    return ct;
}

std::vector<SizeReport> measure_sizes(unsigned n, Rng& rng) {
    Field f = gen_context(n, rng);
    std::vector<SizeReport> out;
    for (SchemeId scheme :
         {SchemeId::points, SchemeId::parameters, SchemeId::alternative}) {
        auto [pk, sk] = keygen_keys(keygen_setup_on(scheme, f, rng), rng);
        unsigned cap = capacity_bits(scheme, n, kDefaultPad);
        Ciphertext ct = encrypt(pk, rng.bits(cap), rng);

        auto slot_bits = [&](const WireRecord& rec) {
            unsigned total = 0;
            for (const auto& [label, value] : rec.fields)
                total += label == "dprime"
                             ? static_cast<unsigned>(mpz_sizeinbase(value.get_mpz_t(), 2))
                             : n;
            return total;
        };
        SizeReport row;
        row.scheme = scheme;
        row.n = n;
        row.pk_bits = slot_bits(parse_record(serialize(public_key_record(pk))));
        row.sk_bits = slot_bits(parse_record(serialize(secret_key_record(sk, scheme))));
        row.ct_bits = slot_bits(parse_record(serialize(ciphertext_record(ct, pk))));
        row.plaintext_bits = cap;
        out.push_back(row);
    }
    return out;
}

}  // namespace pell
