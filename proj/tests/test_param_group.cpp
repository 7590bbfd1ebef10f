#include <doctest.h>

#include <vector>

#include "pell/errors.hpp"
#include "pell/ops.hpp"
#include "pell/param_group.hpp"

using namespace pell;

namespace {

Parameter fin(long m) { return Parameter::finite(mpz_class(m)); }

// Every element of P_{d,q} = F_q + {alpha}.
std::vector<Parameter> all_params(const Field& f) {
    std::vector<Parameter> out{Parameter::alpha()};
    for (mpz_class m = 0; m < f.p(); ++m) out.push_back(Parameter::finite(m));
    return out;
}

// Oracle: exponentiation as an iterated param_mul fold.
Parameter naive_param_pow(const Field& f, const Parameter& u, unsigned long e, const Fe& d) {
    Parameter acc = Parameter::alpha();
    for (unsigned long i = 0; i < e; ++i) acc = param_mul(f, acc, u, d);
    return acc;
}

}  // namespace

TEST_CASE("param_mul frozen values and unit laws at p = 11, d = 2") {
    Field f(mpz_class(11));
    Fe d = 2;
    CHECK(param_mul(f, fin(2), fin(3), d) == fin(6));
    CHECK(param_mul(f, fin(2), Parameter::alpha(), d) == fin(2));
    CHECK(param_mul(f, Parameter::alpha(), Parameter::alpha(), d) == Parameter::alpha());
    CHECK(param_mul(f, fin(2), fin(9), d) == Parameter::alpha());  // 2 + 9 = 0
    CHECK(param_inverse(f, fin(2)) == fin(9));
    CHECK(param_inverse(f, Parameter::alpha()) == Parameter::alpha());
}

TEST_CASE("param_mul costs 2 multiplications and 1 inversion on the generic path") {
    Field f(mpz_class(11));
    reset_op_counts();
    param_mul(f, fin(2), fin(3), 2);
    CHECK(op_counts().field_mul == 2);
    CHECK(op_counts().field_inv == 1);
}

TEST_CASE("parameter group laws, exhaustively at p = 11, d = 2") {
    Field f(mpz_class(11));
    Fe d = 2;
    auto elems = all_params(f);
    REQUIRE(elems.size() == 12);

    for (const auto& u : elems) {
        CHECK(param_mul(f, u, Parameter::alpha(), d) == u);
        CHECK(param_mul(f, u, param_inverse(f, u), d) == Parameter::alpha());
        for (const auto& v : elems) {
            CHECK(param_mul(f, u, v, d) == param_mul(f, v, u, d));
            for (const auto& w : elems)
                CHECK(param_mul(f, param_mul(f, u, v, d), w, d) ==
                      param_mul(f, u, param_mul(f, v, w, d), d));
        }
    }
}

TEST_CASE("param_of_point and point_of_param invert each other") {
    Field f(mpz_class(11));

    SUBCASE("classic conic, frozen values") {
        ConicParams cp = ConicParams::classic(f, 2);
        CHECK(param_of_point(f, {3, 2}, cp) == fin(2));
        CHECK(param_of_point(f, {1, 0}, cp) == Parameter::alpha());
        CHECK(param_of_point(f, {10, 0}, cp) == fin(0));
        CHECK(point_of_param(f, fin(2), cp) == PellPoint{3, 2});
        CHECK(point_of_param(f, Parameter::alpha(), cp) == PellPoint{1, 0});
    }
    SUBCASE("both directions, classic and generalized") {
        for (const ConicParams& cp : {ConicParams::classic(f, 2),
                                      ConicParams::with_identity(f, 2, {3, 3})}) {
            for (const auto& pt : enumerate_conic(f, cp.d, cp.c))
                CHECK(point_of_param(f, param_of_point(f, pt, cp), cp) == pt);
            for (const auto& u : all_params(f))
                CHECK(param_of_point(f, point_of_param(f, u, cp), cp) == u);
        }
    }
    SUBCASE("generalized antipode, frozen") {
        ConicParams cp = ConicParams::with_identity(f, 2, {3, 3});
        CHECK(param_of_point(f, {8, 3}, cp) == fin(9));  // -b*d/a at the antipode
        CHECK(point_of_param(f, fin(9), cp) == PellPoint{8, 3});
        CHECK(param_of_point(f, cp.identity, cp) == Parameter::alpha());
    }
    SUBCASE("singular parameter on a square d") {
        ConicParams cp = ConicParams::classic(f, 3);  // 3 = 5^2 mod 11
        CHECK_THROWS_AS(point_of_param(f, fin(5), cp), SingularParameter);
        CHECK_THROWS_AS(point_of_param(f, fin(6), cp), SingularParameter);
    }
}

TEST_CASE("parameterization turns Brahmagupta products into param_mul") {
    Field f(mpz_class(11));

    ConicParams classic = ConicParams::classic(f, 2);
    auto pts = enumerate_conic(f, 2, 1);
    for (const auto& p : pts)
        for (const auto& q : pts)
            CHECK(param_of_point(f, brahmagupta(f, p, q, 2), classic) ==
                  param_mul(f, param_of_point(f, p, classic), param_of_point(f, q, classic), 2));

    ConicParams gen = ConicParams::with_identity(f, 2, {3, 3});
    auto gpts = enumerate_conic(f, gen.d, gen.c);
    for (const auto& p : gpts)
        for (const auto& q : gpts)
            CHECK(param_of_point(f, gen_brahmagupta(f, p, q, gen), gen) ==
                  param_mul(f, param_of_point(f, p, gen), param_of_point(f, q, gen), 2));
}

TEST_CASE("param_pow frozen trace and edge cases") {
    Field f(mpz_class(11));
    Fe d = 2;
    CHECK(param_pow(f, fin(2), mpz_class(2), d) == fin(7));
    CHECK(param_pow(f, fin(2), mpz_class(0), d) == Parameter::alpha());
    CHECK(param_pow(f, Parameter::alpha(), mpz_class(5), d) == Parameter::alpha());
    CHECK(param_pow(f, fin(2), mpz_class(12), d) == Parameter::alpha());  // full order
    CHECK_THROWS_AS(param_pow(f, fin(2), mpz_class(-1), d), std::invalid_argument);
}

TEST_CASE("param_pow agrees with redei_pair and the iterated fold at p = 11") {
    Field f(mpz_class(11));
    Fe d = 2;
    for (mpz_class m = 0; m < 11; ++m) {
        for (unsigned long e = 0; e <= 40; ++e) {
            Parameter got = param_pow(f, Parameter::finite(m), mpz_class(e), d);
            CHECK(got == naive_param_pow(f, Parameter::finite(m), e, d));
            if (e == 0) continue;
            auto [num, den] = redei_pair(f, m, mpz_class(e), d);
            if (den == 0)
                CHECK(got.is_alpha());
            else
                CHECK(got == Parameter::finite(f.mul(num, f.inv(den))));
        }
    }
    CHECK(redei_pair(f, 2, mpz_class(2), d) == std::pair<Fe, Fe>{6, 4});
    CHECK(redei_pair(f, 2, mpz_class(0), d) == std::pair<Fe, Fe>{1, 0});
}

TEST_CASE("param_pow matches redei_pair at a 256-bit prime") {
    Rng rng(21);
    Field f = gen_context(256, rng);
    Fe d = f.random_nonsquare(rng);
    mpz_class order = f.p() + 1;
    for (int i = 0; i < 40; ++i) {
        Fe m = f.random_element(rng);
        mpz_class e = rng.below(order * 2) + 1;
        auto [num, den] = redei_pair(f, m, e, d);
        Parameter got = param_pow(f, Parameter::finite(m), e, d);
        if (den == 0)
            CHECK(got.is_alpha());
        else
            CHECK(got == Parameter::finite(f.mul(num, f.inv(den))));
        CHECK(param_pow(f, Parameter::finite(m), e % order, d) == got);  // order p + 1
    }
    for (int i = 0; i < 20; ++i) {
        Fe m = f.random_element(rng);
        mpz_class a = rng.below(order), b = rng.below(order);
        Parameter u = Parameter::finite(m);
        CHECK(param_pow(f, u, a + b, d) ==
              param_mul(f, param_pow(f, u, a, d), param_pow(f, u, b, d), d));
    }
}

TEST_CASE("param_pow operation counts are exact") {
    Field f(mpz_class(11));
    auto run = [&](unsigned long e) {
        reset_op_counts();
        param_pow(f, fin(2), mpz_class(e), 2);
        CHECK(op_counts().group_exp == 1);
        return op_counts();
    };
    // Square 4, multiply 3, one closing division (1 mul + 1 inv).
    CHECK(run(1).field_mul == 8);
    CHECK(run(2).field_mul == 12);
    CHECK(run(3).field_mul == 15);
    CHECK(run(4).field_mul == 16);
    CHECK(run(4).field_inv == 1);

    reset_op_counts();
    param_pow(f, fin(2), mpz_class(12), 2);  // order of 2: no division on alpha
    CHECK(op_counts().field_inv == 0);
}

TEST_CASE("quadext_mul is the Brahmagupta bilinear map on the extension") {
    Field f(mpz_class(11));
    Fe d = 2;
    CHECK(quadext_mul(f, {3, 2}, {3, 2}, d) == QuadExt{6, 1});
    Rng rng(22);
    for (int i = 0; i < 100; ++i) {
        QuadExt a{f.random_element(rng), f.random_element(rng)};
        QuadExt b{f.random_element(rng), f.random_element(rng)};
        QuadExt c{f.random_element(rng), f.random_element(rng)};
        PellPoint viaPell = brahmagupta(f, {a.x, a.y}, {b.x, b.y}, d);
        CHECK(quadext_mul(f, a, b, d) == QuadExt{viaPell.x, viaPell.y});
        CHECK(quadext_mul(f, quadext_mul(f, a, b, d), c, d) ==
              quadext_mul(f, a, quadext_mul(f, b, c, d), d));
    }
}

TEST_CASE("param_iso_scale is the parameter-line counterpart of iso_scale") {
    Field f(mpz_class(11));

    SUBCASE("frozen mapping P_{2,11} -> P_{7,11} with s = 3") {
        // d = d' * s^2: 7 = 2 * 9 mod 11.
        CHECK(param_iso_scale(f, fin(2), 3) == fin(6));
        CHECK(param_iso_scale(f, Parameter::alpha(), 3) == Parameter::alpha());
        CHECK_THROWS_AS(param_iso_scale(f, fin(2), 0), std::invalid_argument);
    }
    SUBCASE("homomorphism onto the rescaled group, exhaustively") {
        Fe d_prime = 2, s = 3, d = 7;
        for (const auto& u : all_params(f))
            for (const auto& v : all_params(f))
                CHECK(param_iso_scale(f, param_mul(f, u, v, d_prime), s) ==
                      param_mul(f, param_iso_scale(f, u, s), param_iso_scale(f, v, s), d));
    }
    SUBCASE("commutes with iso_scale through the parameterization") {
        // C_2 -> C_8 by y |-> 6y, parameters come back by u |-> 6u.
        ConicParams c2 = ConicParams::classic(f, 2);
        ConicParams c8 = ConicParams::classic(f, 8);
        for (const auto& p : enumerate_conic(f, 2, 1)) {
            Parameter down = param_of_point(f, iso_scale(f, p, 6, 2, 8), c8);
            CHECK(param_iso_scale(f, down, 6) == param_of_point(f, p, c2));
        }
    }
}

TEST_CASE("random_param_generator yields full-order parameters") {
    SUBCASE("exhaustible field") {
        Field f(mpz_class(11));
        Rng rng(23);
        for (int i = 0; i < 20; ++i) {
            Parameter g = random_param_generator(f, 2, rng);
            CHECK(param_pow(f, g, mpz_class(12), 2) == Parameter::alpha());
            CHECK_FALSE(param_pow(f, g, mpz_class(6), 2).is_alpha());
            CHECK_FALSE(param_pow(f, g, mpz_class(4), 2).is_alpha());
        }
    }
    SUBCASE("safe-order context") {
        Rng rng(24);
        Field f = gen_context(64, rng);
        Fe d = f.random_nonsquare(rng);
        Parameter g = random_param_generator(f, d, rng);
        mpz_class order = f.p() + 1;
        CHECK(param_pow(f, g, order, d) == Parameter::alpha());
        CHECK_FALSE(param_pow(f, g, order / 2, d).is_alpha());
        CHECK_FALSE(param_pow(f, g, mpz_class(2), d).is_alpha());
    }
    SUBCASE("rejected preconditions") {
        Field f(mpz_class(11));
        Rng rng(25);
        CHECK_THROWS_AS(random_param_generator(f, 3, rng), std::invalid_argument);
    }
}
