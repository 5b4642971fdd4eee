#include "dioph/equation.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace dioph {

namespace {

using Term = std::array<std::uint64_t, 2>;

constexpr int Z = -1;

// Variables are indexed in the order they are listed in `variables`.
constexpr std::array<CaseSignature, 7> kSignatures = {{
    {CaseId::one_plus_one, "CASE_1PLUS1", "1plus1", "1 + 1 = 2^e3^f + 2^g3^h",
     {'e', 'f', 'g', 'h'}, {{{Z, Z}, {Z, Z}, {0, 1}, {2, 3}}}},
    {CaseId::one_3d, "CASE_1_3D", "1plus3d", "1 + 3^d = 2^e + 2^g3^h",
     {'d', 'e', 'g', 'h'}, {{{Z, Z}, {Z, 0}, {1, Z}, {2, 3}}}},
    {CaseId::three_b_3d, "CASE_3B_3D", "3b3d", "3^b + 3^d = 2^e + 2^g",
     {'b', 'd', 'e', 'g'}, {{{Z, 0}, {Z, 1}, {2, Z}, {3, Z}}}},
    {CaseId::one_2c, "CASE_1_2C", "1plus2c", "1 + 2^c = 3^f + 2^g3^h",
     {'c', 'f', 'g', 'h'}, {{{Z, Z}, {0, Z}, {Z, 1}, {2, 3}}}},
    {CaseId::identity, "CASE_IDENTITY", "identity", "1 + 2^c3^d = 1 + 2^g3^h",
     {'c', 'd', 'g', 'h'}, {{{Z, Z}, {0, 1}, {Z, Z}, {2, 3}}}},
    {CaseId::three_b_2c_mixed, "CASE_3B_2C_MIXED", "3b2c-mixed", "3^b + 2^c = 1 + 2^g3^h",
     {'b', 'c', 'g', 'h'}, {{{Z, 0}, {1, Z}, {Z, Z}, {2, 3}}}},
    {CaseId::three_b_2c_split, "CASE_3B_2C_SPLIT", "3b2c-split", "3^b + 2^c = 3^f + 2^g",
     {'b', 'c', 'f', 'g'}, {{{Z, 0}, {1, Z}, {Z, 2}, {3, Z}}}},
}};

std::array<Term, 4> terms_of(const ExponentTuple& t)
{
    return {{{t[0], t[1]}, {t[2], t[3]}, {t[4], t[5]}, {t[6], t[7]}}};
}

ExponentTuple from_terms(const std::array<Term, 4>& terms)
{
    ExponentTuple t;
    for (std::size_t i = 0; i < 4; ++i) {
        t[2 * i] = terms[i][0];
        t[2 * i + 1] = terms[i][1];
    }
    return t;
}

// The eight summand orders: swap within the left, within the right, and the sides.
std::array<std::array<Term, 4>, 8> arrangements(const ExponentTuple& t)
{
    const auto s = terms_of(t);
    std::array<std::array<Term, 4>, 8> out;
    std::size_t i = 0;
    for (const bool swap_sides : {false, true}) {
        const Term l0 = swap_sides ? s[2] : s[0];
        const Term l1 = swap_sides ? s[3] : s[1];
        const Term r0 = swap_sides ? s[0] : s[2];
        const Term r1 = swap_sides ? s[1] : s[3];
        for (const bool swap_left : {false, true}) {
            for (const bool swap_right : {false, true}) {
                out[i++] = {swap_left ? l1 : l0, swap_left ? l0 : l1, swap_right ? r1 : r0, swap_right ? r0 : r1};
            }
        }
    }
    return out;
}

std::optional<std::array<std::uint64_t, 4>> bind(const CaseSignature& sig, const std::array<Term, 4>& terms)
{
    std::array<std::uint64_t, 4> binding{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const int slot = sig.terms[i][j];
            if (slot == Z) {
                if (terms[i][j] != 0) return std::nullopt;
            } else {
                binding[static_cast<std::size_t>(slot)] = terms[i][j];
            }
        }
    }
    return binding;
}

Natural term_value(std::uint64_t two, std::uint64_t three)
{
    return pow(Natural(2), two) * pow(Natural(3), three);
}

} // namespace

std::string ExponentTuple::str() const
{
    std::ostringstream ss;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) ss << ',';
        ss << x[i];
    }
    return ss.str();
}

ExponentTuple ExponentTuple::parse(std::string_view text)
{
    ExponentTuple t;
    std::size_t i = 0;
    const char* p = text.data();
    const char* const end = text.data() + text.size();
    while (true) {
        if (i == 8) throw std::invalid_argument("tuple: expected exactly 8 exponents");
        if (p == end || *p < '0' || *p > '9') {
            throw std::invalid_argument("tuple: malformed \"" + std::string(text) + "\"");
        }
        const auto [next, ec] = std::from_chars(p, end, t.x[i]);
        if (ec != std::errc()) throw std::invalid_argument("tuple: exponent out of range");
        p = next;
        ++i;
        if (p == end) break;
        if (*p != ',') throw std::invalid_argument("tuple: malformed \"" + std::string(text) + "\"");
        ++p;
    }
    if (i != 8) throw std::invalid_argument("tuple: expected exactly 8 exponents");
    return t;
}

const CaseSignature& signature(CaseId id)
{
    return kSignatures[static_cast<std::size_t>(id)];
}

std::optional<CaseId> parse_case(std::string_view name)
{
    for (const auto& sig : kSignatures) {
        if (name == sig.short_name || name == sig.tag) return sig.id;
    }
    return std::nullopt;
}

ExponentTuple CaseInstance::instantiate() const
{
    const auto& sig = signature(id);
    std::array<Term, 4> terms{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const int slot = sig.terms[i][j];
            terms[i][j] = slot == Z ? 0 : binding[static_cast<std::size_t>(slot)];
        }
    }
    return from_terms(terms);
}

std::string CaseInstance::binding_str() const
{
    const auto& sig = signature(id);
    std::ostringstream ss;
    ss << '(' << sig.variables[0] << ',' << sig.variables[1] << ',' << sig.variables[2] << ',' << sig.variables[3]
       << ")=(" << binding[0] << ',' << binding[1] << ',' << binding[2] << ',' << binding[3] << ')';
    return ss.str();
}

std::pair<Natural, Natural> evaluate(const ExponentTuple& t)
{
    return {term_value(t[0], t[1]) + term_value(t[2], t[3]), term_value(t[4], t[5]) + term_value(t[6], t[7])};
}

bool holds(const ExponentTuple& t)
{
    const auto [lhs, rhs] = evaluate(t);
    return lhs == rhs;
}

ExponentTuple normalize(const ExponentTuple& t)
{
    const std::uint64_t min2 = std::min({t[0], t[2], t[4], t[6]});
    const std::uint64_t min3 = std::min({t[1], t[3], t[5], t[7]});
    ExponentTuple out = t;
    for (std::size_t i = 0; i < 8; i += 2) {
        out[i] -= min2;
        out[i + 1] -= min3;
    }
    return out;
}

bool is_normalized(const ExponentTuple& t)
{
    return std::min({t[0], t[2], t[4], t[6]}) == 0 && std::min({t[1], t[3], t[5], t[7]}) == 0;
}

ZeroPattern zero_pattern(const ExponentTuple& t)
{
    if (!is_normalized(t)) throw std::invalid_argument("zero_pattern: tuple is not normalized");
    ZeroPattern z;
    for (std::size_t i = 0; i < 8; i += 2) {
        z.count2 += t[i] == 0;
        z.count3 += t[i + 1] == 0;
    }
    return z;
}

std::vector<std::array<std::uint64_t, 4>> match_case(CaseId id, const ExponentTuple& t)
{
    const auto& sig = signature(id);
    std::vector<std::array<std::uint64_t, 4>> out;
    for (const auto& terms : arrangements(t)) {
        if (auto b = bind(sig, terms)) out.push_back(*b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<CaseInstance> canonical_instance(CaseId id, const ExponentTuple& t)
{
    const auto matches = match_case(id, t);
    if (matches.empty()) return std::nullopt;
    return CaseInstance{id, matches.back()};
}

std::optional<CaseInstance> classify(const ExponentTuple& t)
{
    const ZeroPattern z = zero_pattern(t);
    if (z.count2 < 2 || z.count3 < 2) return std::nullopt;
    for (const CaseId id : kAllCases) {
        if (auto inst = canonical_instance(id, t)) return inst;
    }
    // Unreachable: two 2-zeros and two 3-zeros always fit one of the seven shapes.
    throw std::logic_error("classify: zero pattern fits no case for " + t.str());
}

ExponentTuple canonical_form(const ExponentTuple& t)
{
    auto s = terms_of(t);
    if (s[1] < s[0]) std::swap(s[0], s[1]);
    if (s[3] < s[2]) std::swap(s[2], s[3]);
    const std::array<Term, 2> left{s[0], s[1]};
    const std::array<Term, 2> right{s[2], s[3]};
    if (right < left) {
        return from_terms({s[2], s[3], s[0], s[1]});
    }
    return from_terms(s);
}

} // namespace dioph
