#include <catch2/catch_amalgamated.hpp>

#include "entrolab/fields.hpp"

using namespace entrolab;

TEST_CASE("FieldSpec accepts 0 and primes, rejects composites") {
    CHECK(FieldSpec(0).characteristic() == 0);
    CHECK(FieldSpec(2).is_prime_field());
    CHECK(FieldSpec(5).characteristic() == 5);
    CHECK_NOTHROW(FieldSpec(7919));
    CHECK_NOTHROW(FieldSpec((std::uint64_t(1) << 61) - 1)); // Mersenne prime
    CHECK_THROWS_AS(FieldSpec(1), structural_error);
    CHECK_THROWS_AS(FieldSpec(4), structural_error);
    CHECK_THROWS_AS(FieldSpec(91), structural_error);   // 7 * 13
    CHECK_THROWS_AS(FieldSpec(7917), structural_error); // 3 * 7 * 13 * 29
}

TEST_CASE("Fp arithmetic is exact modulo p") {
    Fp a(3, 5), b(4, 5);
    CHECK((a + b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK((a * b).value() == 2);
    CHECK((a / b).value() == 2); // 4 * 2 = 8 = 3 mod 5
    CHECK((-a).value() == 2);
    CHECK((b * b.inverse()).value() == 1);
    CHECK(Fp(7, 5).value() == 2);
    CHECK(Fp::from_integer(BigInt(-1), 5).value() == 4);
    // 123456789 = 1 mod 7, 10^9 = 6 mod 7, 10^18 = 1 mod 7 -> 1 + 6 + 1 = 1
    CHECK(Fp::from_integer(BigInt("123456789123456789123456789"), 7).value() == 1);
}

TEST_CASE("Fp near the top of the word does not overflow") {
    std::uint64_t p = 18446744073709551557ull; // largest 64-bit prime
    Fp x(p - 1, p), y(p - 2, p);
    CHECK((x + y).value() == p - 3);
    CHECK((x * x).value() == 1); // (-1)^2
    CHECK((y * y.inverse()).value() == 1);
}

TEST_CASE("mixing moduli throws") {
    Fp a(1, 5), b(1, 7);
    CHECK_THROWS_AS(a + b, structural_error);
    CHECK_THROWS_AS(a * b, structural_error);
}

TEST_CASE("rationals stay in lowest terms with positive denominator") {
    Rat r(BigInt(6), BigInt(-4));
    CHECK(boost::multiprecision::numerator(r) == -3);
    CHECK(boost::multiprecision::denominator(r) == 2);
    CHECK(r.str() == "-3/2");
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK((Rat(2, 3) * Rat(3, 2)) == 1);
}
