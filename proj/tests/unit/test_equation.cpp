#include <doctest.h>

#include <set>

#include "dioph/equation.hpp"
#include "oracle.hpp"

using namespace dioph;

namespace {

ExponentTuple T(std::array<std::uint64_t, 8> x)
{
    return ExponentTuple{x};
}

// Applies one of the eight summand reorderings to a tuple.
ExponentTuple rearrange(const ExponentTuple& t, int which)
{
    std::array<std::array<std::uint64_t, 2>, 4> s{{{t[0], t[1]}, {t[2], t[3]}, {t[4], t[5]}, {t[6], t[7]}}};
    if (which & 1) std::swap(s[0], s[1]);
    if (which & 2) std::swap(s[2], s[3]);
    if (which & 4) {
        std::swap(s[0], s[2]);
        std::swap(s[1], s[3]);
    }
    return T({s[0][0], s[0][1], s[1][0], s[1][1], s[2][0], s[2][1], s[3][0], s[3][1]});
}

} // namespace

TEST_CASE("evaluate and holds")
{
    CHECK(evaluate(T({0, 0, 0, 0, 0, 0, 0, 0})) == std::pair<Natural, Natural>{2, 2});
    CHECK(evaluate(T({0, 0, 1, 1, 2, 0, 0, 1})) == std::pair<Natural, Natural>{7, 7});
    CHECK(evaluate(T({1, 0, 0, 0, 0, 0, 0, 0})) == std::pair<Natural, Natural>{3, 2});
    CHECK(holds(T({0, 0, 0, 0, 0, 0, 0, 0})));
    CHECK(holds(T({0, 0, 1, 1, 2, 0, 0, 1})));
    CHECK_FALSE(holds(T({1, 0, 0, 0, 0, 0, 0, 0})));
}

TEST_CASE("tuple text format")
{
    const auto t = ExponentTuple::parse("0,0,1,1,2,0,0,1");
    CHECK(t == T({0, 0, 1, 1, 2, 0, 0, 1}));
    CHECK(t.str() == "0,0,1,1,2,0,0,1");
    CHECK(ExponentTuple::parse("10,200,3,4,5,6,7,8").str() == "10,200,3,4,5,6,7,8");
    for (const char* bad : {"", "1,2,3", "1,2,3,4,5,6,7,8,9", "1, 2,3,4,5,6,7,8", "1,2,3,4,5,6,7,", "a,b,c,d,e,f,g,h",
                            "1,2,3,4,5,6,7,-8", "1,,3,4,5,6,7,8"}) {
        CHECK_THROWS_AS(ExponentTuple::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("normalize")
{
    CHECK(normalize(T({1, 1, 1, 1, 1, 1, 1, 1})) == T({0, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(normalize(T({0, 0, 1, 1, 2, 0, 0, 1})) == T({0, 0, 1, 1, 2, 0, 0, 1}));
    CHECK(normalize(T({2, 0, 3, 1, 4, 0, 2, 1})) == T({0, 0, 1, 1, 2, 0, 0, 1}));
}

TEST_CASE("zero_pattern")
{
    CHECK(zero_pattern(T({0, 0, 0, 0, 0, 0, 0, 0})) == ZeroPattern{4, 4});
    CHECK(zero_pattern(T({0, 0, 1, 1, 2, 0, 0, 1})) == ZeroPattern{2, 2});
    CHECK(zero_pattern(T({0, 1, 1, 0, 1, 0, 1, 2})) == ZeroPattern{1, 2});
    CHECK_THROWS_AS(zero_pattern(T({1, 1, 1, 1, 1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("classify examples")
{
    auto c = classify(T({0, 0, 0, 0, 0, 0, 0, 0}));
    REQUIRE(c);
    CHECK(c->id == CaseId::one_plus_one);
    CHECK(c->binding == std::array<std::uint64_t, 4>{0, 0, 0, 0});

    c = classify(T({0, 0, 2, 2, 0, 0, 2, 2}));
    REQUIRE(c);
    CHECK(c->id == CaseId::identity);
    CHECK(c->binding == std::array<std::uint64_t, 4>{2, 2, 2, 2});

    c = classify(T({0, 0, 1, 1, 2, 0, 0, 1}));
    REQUIRE(c);
    CHECK(c->id == CaseId::three_b_2c_mixed);
    CHECK(c->binding == std::array<std::uint64_t, 4>{1, 2, 1, 1});
    CHECK(c->binding_str() == "(b,c,g,h)=(1,2,1,1)");
    CHECK(holds(c->instantiate()));

    CHECK_FALSE(classify(T({0, 1, 1, 0, 1, 0, 1, 2})));
    CHECK_THROWS_AS(classify(T({1, 0, 1, 0, 1, 0, 1, 0})), std::invalid_argument);
}

TEST_CASE("case names")
{
    CHECK(parse_case("1plus1") == CaseId::one_plus_one);
    CHECK(parse_case("identity") == CaseId::identity);
    CHECK(parse_case("3b3d") == CaseId::three_b_3d);
    CHECK(parse_case("CASE_3B_2C_MIXED") == CaseId::three_b_2c_mixed);
    CHECK_FALSE(parse_case("bogus"));
    std::set<std::string_view> tags;
    for (const auto id : kAllCases) {
        CHECK(signature(id).id == id);
        tags.insert(signature(id).tag);
    }
    CHECK(tags.size() == 7);
}

TEST_CASE("every placement of two 2-zeros and two 3-zeros fits some case")
{
    // The 6 x 6 = 36 raw placements, with the nonzero slots set to distinct
    // values so the placement is the only source of zeros.
    std::set<CaseId> reached;
    for (int z2 = 0; z2 < 16; ++z2) {
        for (int z3 = 0; z3 < 16; ++z3) {
            if (__builtin_popcount(z2) != 2 || __builtin_popcount(z3) != 2) continue;
            ExponentTuple t;
            for (int i = 0; i < 4; ++i) {
                t[2 * i] = (z2 >> i) & 1 ? 0 : 1 + i;
                t[2 * i + 1] = (z3 >> i) & 1 ? 0 : 5 + i;
            }
            const auto c = classify(t);
            REQUIRE(c);
            CHECK(canonical_form(c->instantiate()) == canonical_form(t));
            reached.insert(c->id);
        }
    }
    CHECK(reached.size() == 7);
}

TEST_CASE("canonical_form")
{
    CHECK(canonical_form(T({1, 1, 0, 0, 2, 0, 0, 1})) == T({0, 0, 1, 1, 0, 1, 2, 0}));
    CHECK(canonical_form(T({0, 0, 1, 1, 2, 0, 0, 1})) == T({0, 0, 1, 1, 0, 1, 2, 0}));
    const auto t = T({3, 1, 0, 2, 1, 1, 4, 0});
    CHECK(canonical_form(t) == canonical_form(rearrange(t, 4)));
}

TEST_CASE("properties on random tuples")
{
    auto rng = oracle::rng();
    std::uniform_int_distribution<std::uint64_t> entry(0, 10);
    for (int i = 0; i < 10000; ++i) {
        ExponentTuple t;
        for (auto& x : t.x) x = entry(rng);
        const auto n = normalize(t);
        CHECK(normalize(n) == n);
        CHECK(is_normalized(n));
        const bool h = holds(t);
        CHECK(holds(n) == h);
        const auto c = canonical_form(t);
        CHECK(canonical_form(c) == c);
        CHECK(holds(c) == h);
        for (int w = 0; w < 8; ++w) REQUIRE(canonical_form(rearrange(t, w)) == c);

        const auto cls = classify(n);
        for (int w = 0; w < 8; ++w) REQUIRE(classify(rearrange(n, w)) == cls);
    }
}

TEST_CASE("parity: every holding tuple with entries <= 3 classifies")
{
    std::size_t holding = 0;
    std::set<ExponentTuple> distinct;
    ExponentTuple t;
    for (std::uint64_t code = 0; code < 65536; ++code) {
        for (int i = 0; i < 8; ++i) t[i] = (code >> (2 * i)) & 3;
        if (!holds(t)) continue;
        ++holding;
        const auto n = normalize(t);
        const auto z = zero_pattern(n);
        CHECK(z.count2 >= 2);
        CHECK(z.count3 >= 2);
        const auto c = classify(n);
        REQUIRE(c);
        CHECK(holds(c->instantiate()));
        CHECK(canonical_form(c->instantiate()) == canonical_form(n));
        distinct.insert(canonical_form(n));
    }
    // Frozen from tests/oracles/oracle.py --slow.
    CHECK(holding == 796);
    CHECK(distinct.size() == 36);
}
