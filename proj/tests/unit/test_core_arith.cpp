#include <doctest.h>

#include "dioph/natural.hpp"
#include "dioph/valuation.hpp"
#include "oracle.hpp"

using dioph::Natural;
using dioph::Sign;

TEST_CASE("Natural keeps nonnegativity")
{
    CHECK_THROWS_AS(Natural(-1), std::domain_error);
    CHECK_THROWS_AS(Natural(2) - Natural(3), std::domain_error);
    CHECK(Natural(3) - Natural(3) == Natural(0));
    CHECK_THROWS_AS(Natural(3) / Natural(0), std::domain_error);
    CHECK_THROWS_AS(Natural::parse("-4"), std::invalid_argument);
    CHECK_THROWS_AS(Natural::parse(""), std::invalid_argument);
    CHECK(Natural::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    CHECK(dioph::pow(Natural(2), 100).bit_length() == 101);
    CHECK(dioph::pow(Natural(2), 64).to_u64() == std::nullopt);
    CHECK(Natural(7).to_u64() == 7u);
}

TEST_CASE("modpow examples")
{
    CHECK(dioph::modpow(3, 2, 8) == Natural(1));
    CHECK(dioph::modpow(2, 6, 27) == Natural(10));
    CHECK(dioph::modpow(12345, 0, 97) == Natural(1));
    CHECK(dioph::modpow(5, 0, 1) == Natural(0));
    CHECK(dioph::modpow(5, 7, 1) == Natural(0));
    CHECK_THROWS_AS(dioph::modpow(5, 7, 0), std::invalid_argument);
}

TEST_CASE("modpow agrees with exact powering")
{
    auto rng = oracle::rng();
    std::uniform_int_distribution<unsigned long> small(0, 1u << 10);
    std::uniform_int_distribution<unsigned long> mod(1, 1u << 16);
    for (int i = 0; i < 400; ++i) {
        const auto a = small(rng), n = small(rng), m = mod(rng);
        const mpz_class expected = oracle::ipow(a, n) % m;
        REQUIRE_MESSAGE(dioph::modpow(a, n, m).mpz() == expected, "a=" << a << " n=" << n << " M=" << m);
    }
}

TEST_CASE("valuation examples and errors")
{
    CHECK(dioph::valuation(2, 8) == 3);
    CHECK(dioph::valuation(3, 63) == 2);
    CHECK(dioph::valuation(5, 7) == 0);
    CHECK(dioph::valuation(6, 3) == 0); // below the base
    CHECK_THROWS_WITH_AS(dioph::valuation(2, 0), "valuation undefined at zero", std::domain_error);
    CHECK_THROWS_AS(dioph::valuation(1, 5), std::invalid_argument);
}

TEST_CASE("valuation is definitional")
{
    auto rng = oracle::rng();
    std::uniform_int_distribution<unsigned long> base(2, 40);
    std::uniform_int_distribution<int> exp(0, 30);
    std::uniform_int_distribution<unsigned long> co(1, 1000000);
    for (int i = 0; i < 500; ++i) {
        const Natural m(base(rng));
        const Natural x = dioph::pow(m, static_cast<std::uint64_t>(exp(rng))) * Natural(co(rng));
        const auto k = dioph::valuation(m, x);
        CHECK(dioph::divides(dioph::pow(m, k), x));
        CHECK_FALSE(dioph::divides(dioph::pow(m, k + 1), x));
        CHECK(dioph::exact_divides(m, k, x));
        CHECK_FALSE(dioph::exact_divides(m, k + 1, x));
    }
}

TEST_CASE("exact_divides examples")
{
    CHECK(dioph::exact_divides(2, 3, 8));
    CHECK(dioph::exact_divides(3, 2, 63));
    CHECK_FALSE(dioph::exact_divides(3, 1, 63));
    CHECK_THROWS_AS(dioph::exact_divides(3, 0, 0), std::domain_error);
}

TEST_CASE("fast valuation examples")
{
    CHECK(dioph::valuation_pow_minus_one(3, 2, 6).exponent == 2);
    CHECK(dioph::valuation_pow_minus_one(2, 3, 2).exponent == 3);
    CHECK(dioph::valuation_pow_minus_one(9, 8, 2).exponent == 1);
    CHECK(dioph::valuation_pow_plus_one(3, 2, 3).exponent == 2);
    CHECK(dioph::valuation_pow_plus_one(2, 3, 5).exponent == 2);
    CHECK(dioph::valuation_pow_plus_one(3, 2, 2).exponent == 0);

    CHECK_THROWS_AS(dioph::valuation_pow_minus_one(1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(dioph::valuation_pow_minus_one(3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(dioph::valuation_pow_plus_one(3, 2, 0), std::invalid_argument);
}

TEST_CASE("certificates carry a non-divisibility witness")
{
    for (unsigned long m = 2; m <= 12; ++m) {
        for (unsigned long a = 2; a <= 12; ++a) {
            for (std::uint64_t n = 1; n <= 40; ++n) {
                const auto minus = dioph::valuation_pow_minus_one(m, a, n);
                REQUIRE(minus.witness_residue.has_value());
                CHECK(*minus.witness_residue != Natural(1));
                CHECK(dioph::pow(m, minus.exponent + 1) > *minus.witness_residue);

                const auto plus = dioph::valuation_pow_plus_one(m, a, n);
                REQUIRE(plus.witness_residue.has_value());
                CHECK(*plus.witness_residue != dioph::pow(m, plus.exponent + 1) - Natural(1));

                CHECK_FALSE(dioph::naive_valuation_pow(Sign::minus, m, a, n).witness_residue.has_value());
            }
        }
    }
}

TEST_CASE("fast path matches the naive path on the full grid")
{
    std::size_t compared = 0;
    for (unsigned long m = 2; m <= 12; ++m) {
        for (unsigned long a = 2; a <= 12; ++a) {
            for (std::uint64_t n = 1; n <= 200; ++n) {
                for (const Sign s : {Sign::minus, Sign::plus}) {
                    const auto fast = dioph::valuation_pow(s, m, a, n).exponent;
                    const auto naive = dioph::naive_valuation_pow(s, m, a, n).exponent;
                    REQUIRE_MESSAGE(fast == naive, "m=" << m << " a=" << a << " n=" << n);
                    ++compared;
                }
            }
        }
    }
    CHECK(compared == 11 * 11 * 200 * 2);
}

TEST_CASE("naive path matches the test oracle")
{
    for (unsigned long m = 2; m <= 12; ++m) {
        for (unsigned long a = 2; a <= 12; ++a) {
            for (unsigned long n = 1; n <= 60; n += 7) {
                CHECK(dioph::naive_valuation_pow(Sign::minus, m, a, n).exponent == oracle::v_pow(m, a, n, false));
                CHECK(dioph::naive_valuation_pow(Sign::plus, m, a, n).exponent == oracle::v_pow(m, a, n, true));
            }
        }
    }
}

TEST_CASE("fast path on large exponents and bases")
{
    // v_3(2^(2*3^39) - 1) = 40, without building a ~10^19-bit number.
    std::uint64_t n = 2;
    for (int i = 0; i < 39; ++i) n *= 3;
    CHECK(dioph::valuation_pow_minus_one(3, 2, n).exponent == 40);

    // v_7(8^(7^5) - 1) = 1 + 5.
    CHECK(dioph::valuation_pow_minus_one(7, 8, 7 * 7 * 7 * 7 * 7).exponent == 5 + 1);
    const Natural big = dioph::pow(Natural(10), 30) + Natural(1);
    CHECK(dioph::valuation_pow_minus_one(big, big + Natural(1), 1).exponent == 1);
}

TEST_CASE("probe cap bounds the valuation")
{
    for (unsigned long m = 2; m <= 12; ++m) {
        for (unsigned long a = 2; a <= 12; ++a) {
            for (std::uint64_t n = 1; n <= 50; ++n) {
                CHECK(dioph::naive_valuation_pow(Sign::plus, m, a, n).exponent <= dioph::valuation_probe_cap(m, a, n));
            }
        }
    }
}
