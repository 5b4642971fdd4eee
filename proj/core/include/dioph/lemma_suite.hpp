#pragma once

/**
 * @file lemma_suite.hpp
 * @brief Exhaustive checks of the closed-form valuations against the exact
 * big-integer valuation over bounded ranges.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace dioph {

struct LemmaCheckResult {
    std::string lemma;
    std::uint64_t checks = 0;
    std::vector<std::string> counterexamples;

    bool passed() const { return counterexamples.empty(); }
};

struct LemmaSuiteConfig {
    // cyclotomic division: p in [p_min, p_max], m in [1, m_max], n in [0, n_max]
    std::uint64_t cyclotomic_p_min = 2;
    std::uint64_t cyclotomic_p_max = 7;
    std::uint64_t cyclotomic_m_max = 48;
    std::uint64_t cyclotomic_n_max = 48;
    // power three minus: exponent 2^e * k, e in [1, e_max], odd k <= k_max
    std::uint64_t three_minus_e_max = 8;
    std::uint64_t three_minus_k_max = 9;
    // power three plus: every m in [1, m_max]
    std::uint64_t three_plus_m_max = 99;
    // power two minus: 2^m1 * 3^m2 * l
    std::uint64_t two_minus_m1_max = 5;
    std::uint64_t two_minus_m2_max = 4;
    std::vector<std::uint64_t> two_minus_l = {1, 5, 7, 11};
    // power two plus: 3^m1 * l
    std::uint64_t two_plus_m1_max = 4;
    std::vector<std::uint64_t> two_plus_l = {1, 5, 7, 11, 13};
    // power odd minus: odd bases, n in [1, n_max]; part 1 also on even bases
    std::vector<std::uint64_t> odd_minus_bases = {3, 5, 7, 9, 11, 13, 15};
    std::vector<std::uint64_t> odd_minus_part1_even_bases = {4, 6, 8, 10, 12, 14, 16};
    std::uint64_t odd_minus_n_max = 60;
    // no power even: even m in [m_min, m_max]
    std::uint64_t even_remark_m_min = 4;
    std::uint64_t even_remark_m_max = 20;
};

LemmaCheckResult check_cyclotomic_division(const LemmaSuiteConfig& cfg);
LemmaCheckResult check_power_three_minus(const LemmaSuiteConfig& cfg);
LemmaCheckResult check_power_three_plus(const LemmaSuiteConfig& cfg);
LemmaCheckResult check_power_two_minus(const LemmaSuiteConfig& cfg);
LemmaCheckResult check_power_two_plus(const LemmaSuiteConfig& cfg);
/// Throws std::invalid_argument("lemma requires odd base") if any of
/// cfg.odd_minus_bases is even.
LemmaCheckResult check_power_odd_minus(const LemmaSuiteConfig& cfg);
LemmaCheckResult check_no_power_even(const LemmaSuiteConfig& cfg);

/// Lemma identifiers accepted by run_lemma_suite, in run order.
const std::vector<std::string>& lemma_names();

/// Runs the named lemma check ("all" runs every one, in lemma_names() order).
std::vector<LemmaCheckResult> run_lemma_suite(const LemmaSuiteConfig& cfg, const std::string& which = "all");

} // namespace dioph
