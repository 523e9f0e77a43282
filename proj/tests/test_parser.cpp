#include <catch2/catch_amalgamated.hpp>

#include "entrolab/dynamics.hpp"
#include "entrolab/parser.hpp"

using namespace entrolab;

namespace {
const std::vector<std::string> kXY = {"x", "y"};
}

TEST_CASE("basic expressions parse to canonical polynomials") {
    RationalField QQ;
    auto cusp = parse_polynomial("y^2 - x^3", kXY, QQ);
    CHECK(cusp.term_count() == 2);
    CHECK(to_string(cusp, kXY) == "-x^3 + y^2"); // degrevlex: x^3 leads

    CHECK(to_string(parse_polynomial("(x + y) * (x - y)", kXY, QQ), kXY) ==
          "x^2 - y^2");
    CHECK(to_string(parse_polynomial("-x^2", kXY, QQ), kXY) == "-x^2");
    CHECK(to_string(parse_polynomial("2 - - 3", kXY, QQ), kXY) == "5");
    CHECK(parse_polynomial("x - x", kXY, QQ).is_zero());
    CHECK(to_string(parse_polynomial("0", kXY, QQ), kXY) == "0");
    CHECK(to_string(parse_polynomial("x^0", kXY, QQ), kXY) == "1");
}

TEST_CASE("coefficients reduce into the field") {
    PrimeField F5{FieldSpec(5)};
    auto f = parse_polynomial("5*x + y", kXY, F5);
    CHECK(to_string(f, kXY) == "y"); // 5 = 0 mod 5
    auto g = parse_polynomial("7*x - y", kXY, F5);
    CHECK(to_string(g, kXY) == "2*x + 4*y"); // residues, never signs
}

TEST_CASE("implicit multiplication is rejected with a position") {
    RationalField QQ;
    try {
        parse_polynomial("x y", kXY, QQ);
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_polynomial("2x", kXY, QQ), parse_error);
    CHECK_THROWS_AS(parse_polynomial("(x+1)(y+1)", kXY, QQ), parse_error);
}

TEST_CASE("parser error cases") {
    RationalField QQ;
    CHECK_THROWS_AS(parse_polynomial("x + z", kXY, QQ), parse_error);   // unknown
    CHECK_THROWS_AS(parse_polynomial("x ^ y", kXY, QQ), parse_error);   // exponent
    CHECK_THROWS_AS(parse_polynomial("x ^ -2", kXY, QQ), parse_error);  // negative
    CHECK_THROWS_AS(parse_polynomial("x +", kXY, QQ), parse_error);     // dangling
    CHECK_THROWS_AS(parse_polynomial("(x + y", kXY, QQ), parse_error);  // paren
    CHECK_THROWS_AS(parse_polynomial("x $ y", kXY, QQ), parse_error);   // stray
    CHECK_THROWS_AS(parse_polynomial("x^2^3", kXY, QQ), parse_error);   // chained
    CHECK_THROWS_AS(parse_polynomial("", kXY, QQ), parse_error);        // empty
}

TEST_CASE("whitespace is immaterial") {
    RationalField QQ;
    CHECK(parse_polynomial("y^2-x^3", kXY, QQ) ==
          parse_polynomial("  y ^ 2   -   x ^ 3 ", kXY, QQ));
}

TEST_CASE("unary minus binds looser than ^") {
    RationalField QQ;
    CHECK(parse_polynomial("-x^2", kXY, QQ) ==
          -parse_polynomial("x^2", kXY, QQ));
    CHECK(parse_polynomial("(-x)^2", kXY, QQ) == parse_polynomial("x^2", kXY, QQ));
}

TEST_CASE("print-then-parse is the identity (random samples)") {
    RationalField QQ;
    PrimeField F7{FieldSpec(7)};
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    SampleRng rng(2024);
    auto roundtrip = [&](auto field) {
        using Elem = typename decltype(field)::Elem;
        std::vector<typename Polynomial<Elem>::Term> terms;
        std::uint64_t nterms = rng.below(6);
        for (std::uint64_t t = 0; t < nterms; ++t) {
            Monomial m(2);
            m[0] = static_cast<std::uint32_t>(rng.below(5));
            m[1] = static_cast<std::uint32_t>(rng.below(5));
            terms.push_back({std::move(m), field.from_integer(BigInt(
                                               static_cast<std::int64_t>(
                                                   rng.below(19)) -
                                               9))});
        }
        auto f = Polynomial<Elem>::from_terms(2, ord, std::move(terms));
        auto printed = to_string(f, kXY);
        CHECK(parse_polynomial(printed, kXY, field) == f);
    };
    for (int trial = 0; trial < 60; ++trial) {
        roundtrip(QQ);
        roundtrip(F7);
    }
}

TEST_CASE("big integer literals survive exactly") {
    RationalField QQ;
    auto f = parse_polynomial("123456789012345678901234567890 * x", kXY, QQ);
    CHECK(to_string(f, kXY) == "123456789012345678901234567890*x");
}
