#pragma once

/**
 * @file valuation.hpp
 * @brief Base-m valuations, naive and by residue probing.
 *
 * v_m(x) is the largest k with m^k | x. It is defined for every m >= 2 and
 * x >= 1 (including x < m, where it is 0); x = 0 is rejected because every
 * power of m divides it.
 *
 * For quantities of the form a^n - 1 and a^n + 1 the valuation is tiny while
 * the quantity itself is huge, so the fast path never builds a^n. It asks
 * whether a^n == +-1 (mod m^k) for k = 1, 2, 4, ... and then binary searches
 * between the last hit and the first miss. Both congruences are monotone in
 * k (m^(k-1) | m^k), so the search is exact for composite m too.
 */

#include <cstdint>
#include <optional>

#include "dioph/natural.hpp"

namespace dioph {

enum class Sign { minus, plus };

struct ValuationCertificate {
    Natural base;
    std::uint64_t exponent = 0;
    /// a^n mod base^(exponent+1), recorded by the probing path only. For the
    /// minus form it is never 1; for the plus form it is never base^(exponent+1) - 1.
    std::optional<Natural> witness_residue;
};

/// v_m(x) by repeated exact division. Throws std::domain_error when x = 0,
/// std::invalid_argument when m < 2.
std::uint64_t valuation(const Natural& m, const Natural& x);

/// True iff m^k || x, i.e. valuation(m, x) == k.
bool exact_divides(const Natural& m, std::uint64_t k, const Natural& x);

/// A priori cap on v_m(a^n +- 1): ceil(n*log2(a)/log2(m)) + 1.
std::uint64_t valuation_probe_cap(const Natural& m, const Natural& a, std::uint64_t n);

/// v_m(a^n - 1) without materializing a^n. Requires m >= 2, a >= 2, n >= 1.
ValuationCertificate valuation_pow_minus_one(const Natural& m, const Natural& a, std::uint64_t n);

/// v_m(a^n + 1) without materializing a^n. Requires m >= 2, a >= 2, n >= 1.
ValuationCertificate valuation_pow_plus_one(const Natural& m, const Natural& a, std::uint64_t n);

ValuationCertificate valuation_pow(Sign sign, const Natural& m, const Natural& a, std::uint64_t n);

/// Reference path: builds a^n +- 1 exactly and divides it down.
ValuationCertificate naive_valuation_pow(Sign sign, const Natural& m, const Natural& a, std::uint64_t n);

} // namespace dioph
