#pragma once

/**
 * @file equation.hpp
 * @brief The master equation 2^a 3^b + 2^c 3^d = 2^e 3^f + 2^g 3^h and its
 * reduction to seven case equations.
 *
 * After dividing out 2^min(a,c,e,g) 3^min(b,d,f,h), a holding tuple has at
 * least two zero 2-exponents and at least two zero 3-exponents (otherwise one
 * side is divisible by 2 or 3 and the other is not). Where those zeros sit,
 * up to reordering the summands, gives one of the seven CaseIds below.
 */

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dioph/natural.hpp"

namespace dioph {

/// Exponents in the order a,b,c,d,e,f,g,h. Terms are (a,b),(c,d) on the left
/// and (e,f),(g,h) on the right, each term being (2-exponent, 3-exponent).
struct ExponentTuple {
    std::array<std::uint64_t, 8> x{};

    std::uint64_t& operator[](std::size_t i) { return x[i]; }
    std::uint64_t operator[](std::size_t i) const { return x[i]; }

    /// "a,b,c,d,e,f,g,h", decimal, no spaces.
    std::string str() const;
    /// Inverse of str(); throws std::invalid_argument on malformed input.
    static ExponentTuple parse(std::string_view text);

    friend auto operator<=>(const ExponentTuple&, const ExponentTuple&) = default;
};

enum class CaseId {
    one_plus_one,   // 1 + 1 = 2^e 3^f + 2^g 3^h
    one_3d,         // 1 + 3^d = 2^e + 2^g 3^h
    three_b_3d,     // 3^b + 3^d = 2^e + 2^g
    one_2c,         // 1 + 2^c = 3^f + 2^g 3^h
    identity,       // 1 + 2^c 3^d = 1 + 2^g 3^h
    three_b_2c_mixed, // 3^b + 2^c = 1 + 2^g 3^h
    three_b_2c_split, // 3^b + 2^c = 3^f + 2^g
};

inline constexpr std::array<CaseId, 7> kAllCases = {
    CaseId::one_plus_one, CaseId::one_3d,   CaseId::three_b_3d,       CaseId::one_2c,
    CaseId::identity,     CaseId::three_b_2c_mixed, CaseId::three_b_2c_split,
};

/// Shape of one case equation. Each term slot holds -1 for a literal zero
/// exponent, or the index of a free variable.
struct CaseSignature {
    CaseId id;
    std::string_view tag;        // e.g. "CASE_1PLUS1"
    std::string_view short_name; // CLI name, e.g. "1plus1"
    std::string_view display;    // e.g. "1 + 1 = 2^e3^f + 2^g3^h"
    std::array<char, 4> variables;
    std::array<std::array<int, 2>, 4> terms;
};

const CaseSignature& signature(CaseId id);
/// Accepts a short name or a tag; nullopt if neither matches.
std::optional<CaseId> parse_case(std::string_view name);

/// A case equation with its four free variables bound, in signature order.
struct CaseInstance {
    CaseId id;
    std::array<std::uint64_t, 4> binding{};

    /// The master-equation tuple this instance stands for.
    ExponentTuple instantiate() const;
    /// "(b,c,g,h)=(1,2,1,1)"
    std::string binding_str() const;

    friend auto operator<=>(const CaseInstance&, const CaseInstance&) = default;
};

/// (2^a 3^b + 2^c 3^d, 2^e 3^f + 2^g 3^h), exactly.
std::pair<Natural, Natural> evaluate(const ExponentTuple& t);
bool holds(const ExponentTuple& t);

ExponentTuple normalize(const ExponentTuple& t);
bool is_normalized(const ExponentTuple& t);

struct ZeroPattern {
    std::uint64_t count2 = 0; // zeros among a,c,e,g
    std::uint64_t count3 = 0; // zeros among b,d,f,h
    friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;
};

/// Throws std::invalid_argument if t is not normalized.
ZeroPattern zero_pattern(const ExponentTuple& t);

/// Every binding under which some reordering of t's summands (within each
/// side, and swapping sides) matches the given case, sorted ascending.
std::vector<std::array<std::uint64_t, 4>> match_case(CaseId id, const ExponentTuple& t);

/// The representative binding of t within a case: the lexicographically
/// largest match (e.g. b >= d, e >= g for 3^b + 3^d = 2^e + 2^g). nullopt if
/// t does not fit the case at all.
std::optional<CaseInstance> canonical_instance(CaseId id, const ExponentTuple& t);

/// First case, in CaseId order, that t fits; nullopt (no case) when the zero
/// pattern is deficient. Throws std::invalid_argument if t is not normalized.
std::optional<CaseInstance> classify(const ExponentTuple& t);

/// Sorts the terms on each side by (2-exponent, 3-exponent), then orders the
/// sides by their sorted term lists.
ExponentTuple canonical_form(const ExponentTuple& t);

} // namespace dioph
