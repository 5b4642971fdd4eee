#pragma once

/**
 * @file propositions.hpp
 * @brief Bounded solvers for 3^k (2^m - 1) = 2^n - 1 and
 * (2n+1)^k ((2n)^p - 1) = (2n)^q - 1.
 *
 * The solvers are complete inside their boxes: every candidate is either
 * discarded by a necessary condition or tested exactly. The necessary
 * conditions are
 *
 *  - m | n with n/m >= 2 (a^m - 1 | a^n - 1 forces m | n; k >= 1 forces n > m),
 *  - n even (3 | 2^n - 1, and 2n+1 | (2n)^q - 1, need an even exponent),
 *  - 3^(2k) > 2^n - 1, resp. (2n+1)^(2k) > (2n)^q - 1, which follows from the
 *    cofactor identity 3^k = sum_{i<l} 2^(i m) > 2^m - 1.
 *
 * Surviving candidates are decided by comparing that cofactor with 3^k. The
 * boxes only reach finitely many exponents; the classical argument that no
 * solution exists for k >= 3 is what extends the result beyond them.
 */

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "dioph/natural.hpp"

namespace dioph {

struct Prop6Solution {
    std::uint64_t k = 0, m = 0, n = 0;
    friend auto operator<=>(const Prop6Solution&, const Prop6Solution&) = default;
};

struct Prop9Solution {
    std::uint64_t k = 0, p = 0, q = 0, n = 0;
    friend auto operator<=>(const Prop9Solution&, const Prop9Solution&) = default;
};

struct SolveOptions {
    /// Confirm by exact arithmetic that every pruned candidate is not a
    /// solution; throws std::logic_error if one is.
    bool cross_check = false;
};

/// 3^k (2^m - 1) == 2^n - 1, exactly.
bool check_prop6(std::uint64_t k, std::uint64_t m, std::uint64_t n);

/// sum_{i=0}^{l-1} 2^(i m) == (2^(l m) - 1) / (2^m - 1); both forms are
/// computed and compared, a mismatch throws std::logic_error.
Natural geometric_cofactor(std::uint64_t m, std::uint64_t l);

/// Why (k, m, n) cannot solve 3^k (2^m - 1) = 2^n - 1, or nullopt if it
/// survives every necessary condition.
std::optional<std::string_view> prop6_prune_reason(std::uint64_t k, std::uint64_t m, std::uint64_t n);

/// All solutions with 1 <= k <= k_max, 1 <= m <= m_max, 1 <= n <= n_max, sorted.
std::vector<Prop6Solution> solve_prop6(std::uint64_t k_max, std::uint64_t m_max, std::uint64_t n_max,
                                       SolveOptions opts = {});

/// (2n+1)^k ((2n)^p - 1) == (2n)^q - 1, exactly.
bool check_prop9(std::uint64_t k, std::uint64_t p, std::uint64_t q, std::uint64_t n);

std::optional<std::string_view> prop9_prune_reason(std::uint64_t k, std::uint64_t p, std::uint64_t q,
                                                   std::uint64_t n);

/// All solutions with 1 <= k <= k_max, 1 <= p <= p_max, 1 <= q <= q_max,
/// 1 <= n <= n_max, sorted.
std::vector<Prop9Solution> solve_prop9(std::uint64_t k_max, std::uint64_t p_max, std::uint64_t q_max,
                                       std::uint64_t n_max, SolveOptions opts = {});

/// x^6 < x^(x^2) - 1 < (x-1)^(2 x^2) - 1 for every odd x in [3, x_max].
bool verify_growth_base_case(std::uint64_t x_max);

} // namespace dioph
