#include <doctest.h>

#include <set>

#include "pell/errors.hpp"
#include "pell/ops.hpp"
#include "pell/pke.hpp"

using namespace pell;

TEST_CASE("scheme tokens round trip") {
    for (SchemeId s : {SchemeId::points, SchemeId::parameters, SchemeId::alternative})
        CHECK(scheme_from_string(to_string(s)) == s);
    CHECK(to_string(SchemeId::parameters) == "params");
    CHECK_THROWS_AS(scheme_from_string("parameters"), std::invalid_argument);
}

TEST_CASE("capacity_bits reserves the pad and the top bit") {
    CHECK(capacity_bits(SchemeId::points, 256) == 247);
    CHECK(capacity_bits(SchemeId::parameters, 256) == 247);
    CHECK(capacity_bits(SchemeId::alternative, 256) == 494);
    CHECK(capacity_bits(SchemeId::points, 4, 1) == 2);
    CHECK(capacity_bits(SchemeId::alternative, 4, 1) == 4);
    CHECK_THROWS_AS(capacity_bits(SchemeId::points, 256, 0), std::invalid_argument);
    CHECK_THROWS_AS(capacity_bits(SchemeId::points, 9, 8), std::invalid_argument);
}

TEST_CASE("encode_point embeds into the y coordinate, frozen values at p = 11") {
    Field f(mpz_class(11));
    Fe d = 2;
    PellPoint pt = encode_point(f, mpz_class(2), d, 2);
    CHECK(pt == PellPoint{3, 9});  // y = 2*4 + 1, x the smaller root
    CHECK(on_conic(f, pt, d, 1));
    CHECK(decode_point(pt, 2) == 2);

    for (unsigned long msg = 0; msg <= 5; ++msg) {
        PellPoint p = encode_point(f, mpz_class(msg), d, 1);
        CHECK(on_conic(f, p, d, 1));
        CHECK(decode_point(p, 1) == msg);
    }

    CHECK_THROWS_AS(encode_point(f, mpz_class(3), d, 2), MessageTooLarge);  // 3*4 >= 11
    CHECK_THROWS_AS(encode_point(f, mpz_class(-1), d, 1), std::invalid_argument);
}

TEST_CASE("encode_point reports an exhausted search window") {
    // At p = 13, d = 2 the window {6, 7} has 1 + 2y^2 a non-square for both.
    Field f(mpz_class(13));
    CHECK_THROWS_AS(encode_point(f, mpz_class(3), 2, 1), EncodingFailure);
    CHECK(decode_point(encode_point(f, mpz_class(2), 2, 1), 1) == 2);
}

TEST_CASE("encode_alt picks the conic the padded point dictates, frozen at p = 11") {
    Field f(mpz_class(11));

    AltEncoding e5 = encode_alt(f, mpz_class(5), 1);
    CHECK(e5.m == Parameter::finite(mpz_class(2)));
    CHECK(e5.d == 2);

    AltEncoding e15 = encode_alt(f, mpz_class(15), 1);
    CHECK(e15.m == Parameter::finite(mpz_class(3)));
    CHECK(e15.d == 8);

    AltEncoding e8 = encode_alt(f, mpz_class(8), 1);  // low half 0 remaps to y = 1
    CHECK(e8.m == Parameter::finite(mpz_class(6)));
    CHECK(e8.d == 2);

    for (unsigned long msg = 0; msg <= 15; ++msg) {
        AltEncoding enc = encode_alt(f, mpz_class(msg), 1);
        CHECK(f.chi(enc.d) == -1);
        PellPoint pt = point_of_param(f, enc.m, ConicParams::classic(f, enc.d));
        CHECK(decode_alt(f, pt, 1) == msg);
    }

    CHECK_THROWS_AS(encode_alt(f, mpz_class(16), 1), MessageTooLarge);
}

TEST_CASE("keygen draws sk in {2, ..., q} and derives h = g^sk") {
    Field f(mpz_class(13), mpz_class(7));
    Rng rng(31);

    SUBCASE("points") {
        SchemeSetup setup = keygen_setup_on(SchemeId::points, f, rng);
        CHECK(f.chi(setup.d) == -1);
        auto [pk, sk] = keygen_keys(setup, rng);
        CHECK(pk.points().h == point_pow(f, pk.points().g, sk.sk, pk.d));
    }
    SUBCASE("parameters") {
        SchemeSetup setup = keygen_setup_on(SchemeId::parameters, f, rng);
        CHECK(f.chi(setup.d) == -1);
        auto [pk, sk] = keygen_keys(setup, rng);
        CHECK(pk.params().h == param_pow(f, pk.params().g, sk.sk, pk.d));
    }
    SUBCASE("alternative uses the minimal non-square") {
        SchemeSetup setup = keygen_setup_on(SchemeId::alternative, f, rng);
        CHECK(setup.d == f.min_nonsquare());
        CHECK(setup.d == 2);
        auto [pk, sk] = keygen_keys(setup, rng);
        CHECK(pk.params().h == param_pow(f, pk.params().g, sk.sk, pk.d));
    }
    SUBCASE("sk bounds over many draws") {
        SchemeSetup setup = keygen_setup_on(SchemeId::parameters, f, rng);
        std::set<mpz_class> seen;
        for (int i = 0; i < 300; ++i) {
            auto [pk, sk] = keygen_keys(setup, rng);
            CHECK(sk.sk >= 2);
            CHECK(sk.sk <= 13);
            seen.insert(sk.sk);
        }
        CHECK(seen.size() == 12);  // all of {2, ..., 13}
    }
}

TEST_CASE("keygen is deterministic under a fixed seed") {
    Rng a(77), b(77);
    auto [pka, ska] = keygen(SchemeId::points, 32, a);
    auto [pkb, skb] = keygen(SchemeId::points, 32, b);
    CHECK(pka.field.p() == pkb.field.p());
    CHECK(pka.d == pkb.d);
    CHECK(pka.points().g == pkb.points().g);
    CHECK(pka.points().h == pkb.points().h);
    CHECK(ska.sk == skb.sk);
}

TEST_CASE("all schemes round trip exhaustively on a tiny field") {
    Field f(mpz_class(11));
    Rng rng(33);
    for (SchemeId scheme : {SchemeId::points, SchemeId::parameters, SchemeId::alternative}) {
        auto [pk, sk] = keygen_keys(keygen_setup_on(scheme, f, rng), rng);
        unsigned cap =
            scheme == SchemeId::parameters ? 0 : capacity_bits(scheme, f.bits(), 1);
        mpz_class top = scheme == SchemeId::parameters ? f.p() : mpz_class(1) << cap;
        for (mpz_class msg = 0; msg < top; ++msg) {
            Ciphertext ct = encrypt(pk, msg, rng, 1);
            CHECK(decrypt(pk, sk, ct, 1) == msg);
        }
    }
}

TEST_CASE("all schemes round trip at a 256-bit prime") {
    Rng rng(34);
    for (SchemeId scheme : {SchemeId::points, SchemeId::parameters, SchemeId::alternative}) {
        auto [pk, sk] = keygen(scheme, 256, rng);
        const Field& f = pk.field;
        unsigned cap = capacity_bits(scheme, 256);
        for (int i = 0; i < 15; ++i) {
            mpz_class msg = rng.bits(cap);
            Ciphertext ct = encrypt(pk, msg, rng);
            CHECK(decrypt(pk, sk, ct) == msg);
        }
        if (scheme == SchemeId::points) {
            Ciphertext ct = encrypt(pk, rng.bits(cap), rng);
            const auto& body = std::get<PointsCiphertext>(ct.body);
            CHECK(on_conic(f, body.c1, pk.d, 1));
            CHECK(on_conic(f, body.c2, pk.d, 1));
        }
        if (scheme == SchemeId::alternative) {
            Ciphertext ct = encrypt(pk, rng.bits(cap), rng);
            CHECK(f.chi(std::get<AltCiphertext>(ct.body).d) == -1);
        }
    }
}

TEST_CASE("encryption is randomized but reproducible from the seed") {
    Rng rng(35);
    auto [pk, sk] = keygen(SchemeId::points, 64, rng);
    mpz_class msg = 12345;

    Rng r1(100), r2(100), r3(101);
    auto c1 = std::get<PointsCiphertext>(encrypt(pk, msg, r1).body);
    auto c2 = std::get<PointsCiphertext>(encrypt(pk, msg, r2).body);
    auto c3 = std::get<PointsCiphertext>(encrypt(pk, msg, r3).body);
    CHECK(c1 == c2);
    CHECK(c1.c1 != c3.c1);  // fresh ephemeral exponent
    CHECK(decrypt(pk, sk, Ciphertext{SchemeId::points, c3}) == msg);
}

TEST_CASE("oversized messages are rejected per scheme") {
    Rng rng(36);
    Field f(mpz_class(13), mpz_class(7));
    for (SchemeId scheme : {SchemeId::points, SchemeId::parameters, SchemeId::alternative}) {
        auto [pk, sk] = keygen_keys(keygen_setup_on(scheme, f, rng), rng);
        mpz_class big = scheme == SchemeId::alternative ? mpz_class(1 << 4) : mpz_class(13);
        CHECK_THROWS_AS(encrypt(pk, big, rng, 1), MessageTooLarge);
    }
}

TEST_CASE("dishonest ciphertexts surface as decode failures") {
    Field f(mpz_class(13), mpz_class(7));
    Rng rng(37);
    Fe d = 2;
    Parameter g = random_param_generator(f, d, rng);
    SecretKey sk{4};
    Parameter h = param_pow(f, g, sk.sk, d);

    // c2 = h^r with no message folded in decodes to the group identity.
    ParamsCiphertext pct{param_pow(f, g, mpz_class(5), d), param_pow(f, h, mpz_class(5), d)};
    CHECK_THROWS_AS(decrypt_params(f, d, pct, sk), DecodeFailure);

    AltCiphertext act{param_pow(f, g, mpz_class(5), d), param_pow(f, h, mpz_class(5), d), d};
    CHECK_THROWS_AS(decrypt_alt(f, act, sk, 1), DecodeFailure);
}

TEST_CASE("decrypt rejects a ciphertext from a different scheme") {
    Rng rng(38);
    auto [pk_pts, sk_pts] = keygen(SchemeId::points, 32, rng);
    auto [pk_par, sk_par] = keygen(SchemeId::parameters, 32, rng);
    Ciphertext ct = encrypt(pk_pts, mpz_class(9), rng);
    CHECK(decrypt(pk_pts, sk_pts, ct) == 9);
    CHECK_THROWS_AS(decrypt(pk_par, sk_par, ct), std::invalid_argument);
}

TEST_CASE("encrypt performs two group exponentiations, decrypt one") {
    Field f(mpz_class(13), mpz_class(7));
    Rng rng(39);
    for (SchemeId scheme : {SchemeId::points, SchemeId::parameters, SchemeId::alternative}) {
        auto [pk, sk] = keygen_keys(keygen_setup_on(scheme, f, rng), rng);
        // 4 embeds in every scheme at p = 13 with a 1-bit pad; 1 does not
        // survive the alternative encoder's two-candidate x window.
        mpz_class msg = scheme == SchemeId::alternative ? 4 : 1;
        reset_op_counts();
        Ciphertext ct = encrypt(pk, msg, rng, 1);
        CHECK(op_counts().group_exp == 2);
        reset_op_counts();
        decrypt(pk, sk, ct, 1);
        CHECK(op_counts().group_exp == 1);
    }
}

TEST_CASE("point and parameter exponentiation tell the same story through pi") {
    Field f(mpz_class(13), mpz_class(7));
    Rng rng(40);
    Fe d = 2;
    ConicParams cp = ConicParams::classic(f, d);
    PellPoint g = random_generator(f, d, rng);
    Parameter gp = param_of_point(f, g, cp);
    for (unsigned long e = 0; e <= 28; ++e)
        CHECK(param_of_point(f, point_pow(f, g, mpz_class(e), d), cp) ==
              param_pow(f, gp, mpz_class(e), d));
}
