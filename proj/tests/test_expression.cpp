#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tsfrac/errors.hpp"
#include "tsfrac/expression.hpp"

using namespace tsfrac;

namespace {

// random grammar-reachable expression text, mirroring the grammar so the
// round-trip property covers every production
std::string random_expr(std::mt19937& rng, int depth);

std::string random_base(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 2);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<int> digits(0, 999);
            std::uniform_int_distribution<int> frac(0, 99);
            std::uniform_int_distribution<int> with_frac(0, 1);
            std::string s = std::to_string(digits(rng));
            if (with_frac(rng)) s += "." + std::to_string(frac(rng));
            return s;
        }
        case 1: return "t";
        default: return "(" + random_expr(rng, depth - 1) + ")";
    }
}

std::string random_factor(std::mt19937& rng, int depth) {
    std::uniform_int_distribution<int> neg(0, 3);
    if (depth > 0 && neg(rng) == 0) return "-" + random_factor(rng, depth - 1);
    std::string s = random_base(rng, depth);
    std::uniform_int_distribution<int> pow(0, 3);
    if (pow(rng) == 0) {
        std::uniform_int_distribution<int> e(-4, 6);
        s += "^" + std::to_string(e(rng));
    }
    return s;
}

std::string random_expr(std::mt19937& rng, int depth) {
    std::string s = random_factor(rng, depth);
    std::uniform_int_distribution<int> more(0, 2);
    std::uniform_int_distribution<int> op(0, 3);
    while (depth > 0 && more(rng) == 0) {
        const char* ops[] = {" + ", " - ", "*", "/"};
        s += ops[op(rng)];
        s += random_factor(rng, depth - 1);
    }
    return s;
}

std::size_t offset_of(const std::string& src) {
    try {
        (void)parse_expression(src);
    } catch (const ParseError& e) {
        return e.offset;
    }
    return static_cast<std::size_t>(-1);
}

}  // namespace

TEST_CASE("grammar examples") {
    CHECK(parse_expression("t^2").pretty() == "t^2");
    CHECK(parse_expression("1/(t-3)^2").pretty() == "1/(t - 3)^2");
    CHECK_THROWS_AS(parse_expression("t^2.5"), ParseError);
}

TEST_CASE("precedence and associativity") {
    // ^ binds tighter than unary minus
    CHECK(parse_expression("-t^2").eval(3.0) == -9.0);
    CHECK(parse_expression("(-t)^2").eval(3.0) == 9.0);
    // unary minus binds tighter than * and /
    CHECK(parse_expression("2*-t").eval(3.0) == -6.0);
    // left associativity
    CHECK(parse_expression("8-4-2").eval(0.0) == 2.0);
    CHECK(parse_expression("8/4/2").eval(0.0) == 1.0);
    CHECK(parse_expression("2^-2").eval(0.0) == 0.25);
    CHECK(parse_expression("t^-1").eval(4.0) == 0.25);
}

TEST_CASE("parse errors carry byte offsets and expected tokens") {
    CHECK(offset_of("") == 0);
    CHECK(offset_of("1e3") == 1);     // scientific notation is not a number
    CHECK(offset_of("t^2.5") == 3);   // '.' after an integer exponent
    CHECK(offset_of("1.") == 2);      // digits required after the dot
    CHECK(offset_of("t +") == 3);     // missing operand
    CHECK(offset_of("(t+1") == 4);    // unclosed paren
    CHECK(offset_of("t^") == 2);      // missing exponent
    CHECK(offset_of("x") == 0);       // unknown identifier
    CHECK(offset_of("t t") == 2);     // trailing garbage
    CHECK(offset_of("2 + @") == 4);

    try {
        (void)parse_expression("t^2.5");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(!e.expected.empty());
    }
}

TEST_CASE("evaluation errors") {
    const Expression inv = parse_expression("1/t");
    CHECK(inv.eval(2.0) == 0.5);
    CHECK_THROWS_AS(inv.eval(0.0), EvalError);
    CHECK_THROWS_AS(parse_expression("t^-2").eval(0.0), EvalError);
    try {
        (void)parse_expression("1/(t-3)").eval(3.0);
        FAIL("expected EvalError");
    } catch (const EvalError& e) {
        CHECK(e.point == 3.0);
    }
}

TEST_CASE("sampling") {
    const TimeScale ts = TimeScale::from_points({0.0, 1.0, 2.0, 3.0});
    const GridFunction f = sample(parse_expression("t^2"), ts);
    CHECK(f.values() == std::vector<double>{0.0, 1.0, 4.0, 9.0});

    const GridFunction c = sample(parse_expression("5"), ts);
    CHECK(c.values() == std::vector<double>{5.0, 5.0, 5.0, 5.0});

    CHECK_THROWS_AS(sample(parse_expression("1/t"), TimeScale::from_points({0.0, 1.0, 2.0})),
                    EvalError);

    const GridFunction m =
        sample_masked(parse_expression("1/t"), TimeScale::from_points({0.0, 1.0, 2.0}));
    CHECK(m.is_masked());
    CHECK(!m.valid(0));
    CHECK(m.valid(1));
    CHECK(m[1] == 1.0);
    CHECK(m[2] == 0.5);
}

TEST_CASE("property: parse -> pretty -> parse round-trips to an identical AST") {
    std::mt19937 rng(987654321);
    int parsed = 0;
    for (int trial = 0; trial < 4000; ++trial) {
        const std::string src = random_expr(rng, 4);
        Expression e1 = [&] {
            try {
                return parse_expression(src);
            } catch (const ParseError&) {
                // generator can emit e.g. 0^-2 only at eval time; parse must succeed
                FAIL("generator produced unparsable text: ", src);
                throw;
            }
        }();
        ++parsed;
        const std::string printed = e1.pretty();
        const Expression e2 = parse_expression(printed);
        CHECK_MESSAGE(e1.identical(e2), "src=", src, " printed=", printed);
        CHECK(e2.pretty() == printed);
    }
    CHECK(parsed == 4000);
}

TEST_CASE("property: sample is a homomorphism for + (bitwise)") {
    std::mt19937 rng(424242);
    const TimeScale ts = TimeScale::uniform_step(0.25, -3.0, 3.0);
    for (int trial = 0; trial < 300; ++trial) {
        // polynomial-ish safe pieces: no division to dodge poles
        std::uniform_int_distribution<int> c(0, 9);
        const std::string e1 = "t^2 - " + std::to_string(c(rng)) + "*t";
        const std::string e2 = std::to_string(c(rng)) + " + t^3";
        const GridFunction s1 = sample(parse_expression(e1), ts);
        const GridFunction s2 = sample(parse_expression(e2), ts);
        const GridFunction sum = sample(parse_expression("(" + e1 + ") + (" + e2 + ")"), ts);
        const GridFunction lc = lincomb(1.0, s1, 1.0, s2);
        for (std::size_t i = 0; i < sum.size(); ++i) CHECK(sum[i] == lc[i]);
    }
}

TEST_CASE("power form matching for the oracle registry") {
    auto pf = match_power_form(parse_expression("t"));
    REQUIRE(pf.has_value());
    CHECK(pf->k == 0.0);
    CHECK(pf->n == 1);
    CHECK(!pf->reciprocal);

    pf = match_power_form(parse_expression("t^3"));
    REQUIRE(pf.has_value());
    CHECK(pf->n == 3);

    pf = match_power_form(parse_expression("(t-2)^2"));
    REQUIRE(pf.has_value());
    CHECK(pf->k == 2.0);
    CHECK(pf->n == 2);

    pf = match_power_form(parse_expression("1/t"));
    REQUIRE(pf.has_value());
    CHECK(pf->reciprocal);
    CHECK(pf->n == 1);

    pf = match_power_form(parse_expression("1/(t-1)^2"));
    REQUIRE(pf.has_value());
    CHECK(pf->reciprocal);
    CHECK(pf->k == 1.0);
    CHECK(pf->n == 2);

    pf = match_power_form(parse_expression("t^-2"));
    REQUIRE(pf.has_value());
    CHECK(pf->reciprocal);
    CHECK(pf->n == 2);

    CHECK(!match_power_form(parse_expression("t^2 + 1")).has_value());
    CHECK(!match_power_form(parse_expression("2/t")).has_value());
}
