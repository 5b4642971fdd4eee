#pragma once

/**
 * @file conjecture.hpp
 * @brief Bounded evidence for: for even m > 3 and all large n,
 * m^(2 v_m((m-1)^n - 1)) <= (m-1)^n - 1.
 *
 * The scan cannot prove the statement. It records each violating n up to
 * n_max and the least N with no violation in [N, n_max].
 */

#include <cstdint>
#include <optional>
#include <vector>

namespace dioph {

struct ConjectureReport {
    std::uint64_t base_m = 0;
    std::uint64_t n_max = 0;
    std::vector<std::uint64_t> violations;
    /// nullopt ("none found") when n_max itself violates.
    std::optional<std::uint64_t> minimal_n;
};

struct ConjecturePoint {
    std::uint64_t valuation = 0;
    bool holds = false;
    /// Whether the inequality was settled by exact big-integer comparison
    /// rather than by bit-length bounds.
    bool exact = false;
};

/// Exponent bit size at or below which the inequality is always compared exactly.
inline constexpr std::uint64_t kExactComparisonBits = 4096;

/// Evaluates the inequality at one (m, n); m even > 3, n >= 1.
ConjecturePoint conjecture_point(std::uint64_t m, std::uint64_t n);

/// One report per even m in [m_min, m_max], in increasing m. Throws
/// std::invalid_argument if m_min or m_max is odd or <= 3, or n_max == 0.
std::vector<ConjectureReport> scan_conjecture(std::uint64_t m_min, std::uint64_t m_max, std::uint64_t n_max,
                                              std::size_t workers = 1);

} // namespace dioph
