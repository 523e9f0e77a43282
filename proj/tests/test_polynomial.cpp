#include <catch2/catch_amalgamated.hpp>

#include "entrolab/parser.hpp"
#include "entrolab/polynomial.hpp"
#include "entrolab/dynamics.hpp" // SampleRng

#include "oracles.hpp"

using namespace entrolab;

namespace {

const std::vector<std::string> kXY = {"x", "y"};

template <class F>
Polynomial<typename F::Elem> P(const std::string& src, const F& field) {
    return parse_polynomial(src, kXY, field);
}

// deterministic random polynomial with small integer coefficients
template <class F>
Polynomial<typename F::Elem> random_poly(SampleRng& rng, const F& field,
                                         std::size_t nvars,
                                         const MonomialOrder& order) {
    using Elem = typename F::Elem;
    std::vector<typename Polynomial<Elem>::Term> terms;
    std::uint64_t nterms = rng.below(5);
    for (std::uint64_t t = 0; t < nterms; ++t) {
        Monomial m(nvars);
        for (std::size_t i = 0; i < nvars; ++i)
            m[i] = static_cast<std::uint32_t>(rng.below(4));
        BigInt c = BigInt(static_cast<std::int64_t>(rng.below(11)) - 5);
        terms.push_back({std::move(m), field.from_integer(c)});
    }
    return Polynomial<Elem>::from_terms(nvars, order, std::move(terms));
}

} // namespace

TEST_CASE("addition cancels exactly") {
    RationalField QQ;
    CHECK(P("x + y", QQ) + P("-y", QQ) == P("x", QQ));
    CHECK((P("x + y", QQ) - P("x + y", QQ)).is_zero());
}

TEST_CASE("difference of squares") {
    RationalField QQ;
    CHECK(P("x + y", QQ) * P("x - y", QQ) == P("x^2 - y^2", QQ));
}

TEST_CASE("freshman's dream: (x + y)^5 over F_5") {
    // binomial coefficients C(5,k) vanish mod 5 for 0 < k < 5
    for (int k = 1; k < 5; ++k)
        CHECK(binomial(5, k).convert_to<int>() % 5 == 0);
    PrimeField F5{FieldSpec(5)};
    Polynomial<Fp> s = P("x + y", F5);
    Polynomial<Fp> pow = P("1", F5);
    for (int i = 0; i < 5; ++i) pow = pow * s;
    CHECK(pow == P("x^5 + y^5", F5));
}

TEST_CASE("canonical form: normalizing constructor is idempotent") {
    RationalField QQ;
    // duplicate monomials and zero coefficients collapse
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    Monomial xy(2);
    xy[0] = 1; xy[1] = 1;
    std::vector<Polynomial<Rat>::Term> terms = {
        {xy, Rat(2)}, {Monomial(2), Rat(0)}, {xy, Rat(-2)}, {xy, Rat(3)}};
    auto f = Polynomial<Rat>::from_terms(2, ord, terms);
    CHECK(f == P("3*x*y", QQ));
    auto again = Polynomial<Rat>::from_terms(
        2, ord, std::vector<Polynomial<Rat>::Term>(f.terms().begin(),
                                                   f.terms().end()));
    CHECK(again == f);
}

TEST_CASE("substitution examples") {
    RationalField QQ;
    SECTION("x^2 + y with images (y^2, x^3)") {
        auto f = P("x^2 + y", QQ);
        std::vector imgs = {P("y^2", QQ), P("x^3", QQ)};
        CHECK(substitute(f, imgs) == P("y^4 + x^3", QQ));
    }
    SECTION("identity images fix everything") {
        auto f = P("x^2*y - 3*x + 1", QQ);
        std::vector imgs = {P("x", QQ), P("y", QQ)};
        CHECK(substitute(f, imgs) == f);
    }
    SECTION("x*y with images (x^2, x*y)") {
        auto f = P("x*y", QQ);
        std::vector imgs = {P("x^2", QQ), P("x*y", QQ)};
        CHECK(substitute(f, imgs) == P("x^3*y", QQ));
    }
    SECTION("arity mismatch is a structural error") {
        std::vector imgs = {P("x", QQ)};
        CHECK_THROWS_AS(substitute(P("x + y", QQ), imgs), structural_error);
    }
}

TEST_CASE("substitution is a ring homomorphism (random samples)") {
    RationalField QQ;
    PrimeField F7{FieldSpec(7)};
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    SampleRng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        auto run = [&](auto field) {
            auto f = random_poly(rng, field, 2, ord);
            auto g = random_poly(rng, field, 2, ord);
            std::vector imgs = {random_poly(rng, field, 2, ord),
                                random_poly(rng, field, 2, ord)};
            CHECK(substitute(f * g, imgs) ==
                  substitute(f, imgs) * substitute(g, imgs));
            CHECK(substitute(f + g, imgs) ==
                  substitute(f, imgs) + substitute(g, imgs));
            // cross-check against the direct expansion oracle
            CHECK(oracle::map_equals_poly(oracle::naive_substitute(f, imgs),
                                          substitute(f, imgs)));
        };
        run(QQ);
        run(F7);
    }
}

TEST_CASE("Frobenius commutes with substitution over F_p") {
    PrimeField F5{FieldSpec(5)};
    MonomialOrder ord = MonomialOrder::degrevlex(2);
    SampleRng rng(7);
    auto pth_power = [](const Polynomial<Fp>& f, std::uint32_t p,
                        const PrimeField& field) {
        Polynomial<Fp> r = Polynomial<Fp>::constant(f.nvars(), f.order(), field.one());
        for (std::uint32_t i = 0; i < p; ++i) r = r * f;
        return r;
    };
    for (int trial = 0; trial < 15; ++trial) {
        auto f = random_poly(rng, F5, 2, ord);
        std::vector imgs = {random_poly(rng, F5, 2, ord),
                            random_poly(rng, F5, 2, ord)};
        std::vector imgs_p = {pth_power(imgs[0], 5, F5), pth_power(imgs[1], 5, F5)};
        CHECK(substitute(f, imgs_p) == pth_power(substitute(f, imgs), 5, F5));
    }
}

TEST_CASE("mismatched variable counts are structural errors") {
    RationalField QQ;
    auto f = P("x + y", QQ);
    std::vector<std::string> xyz = {"x", "y", "z"};
    auto g = parse_polynomial("x + z", xyz, QQ);
    CHECK_THROWS_AS(f + g, structural_error);
    CHECK_THROWS_AS(f * g, structural_error);
}

TEST_CASE("monomial order sanity") {
    MonomialOrder drl = MonomialOrder::degrevlex(2);
    MonomialOrder lex = MonomialOrder::lex(2);
    Monomial x2y(2), xy2(2), x3(2), y2(2);
    x2y[0] = 2; x2y[1] = 1;
    xy2[0] = 1; xy2[1] = 2;
    x3[0] = 3;
    y2[1] = 2;
    CHECK(drl.compare(x2y, xy2) > 0);  // degrevlex: x^2 y > x y^2
    CHECK(drl.compare(x3, y2) > 0);    // degree first: x^3 > y^2
    CHECK(lex.compare(y2, x3) < 0);    // lex: any x beats any pure y power
    // multiplicative: u < v implies uw < vw
    Monomial w(2);
    w[0] = 1; w[1] = 3;
    CHECK(drl.compare(xy2 * w, x2y * w) < 0);
}
