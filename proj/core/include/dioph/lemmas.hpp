#pragma once

/**
 * @file lemmas.hpp
 * @brief Closed-form valuations of a^n +- 1 for the bases 2, 3 and odd m.
 *
 * Each predicted_* function states what v(a^n +- 1) must be from the shape of
 * the exponent alone. The statements cover
 *
 *   v_2(3^n - 1)       = v_2(n) + 2  for even n
 *   v_2(3^n + 1)       = 2           for odd n
 *   v_3(2^n - 1)       = v_3(n) + 1  for even n
 *   v_3(2^n + 1)       = v_3(n) + 1  for odd n
 *   v_m((m-1)^n - 1)   = v_m(n') + 1 for even n and odd m >= 3, n' = n / 2^v_2(n)
 *
 * and are extended to every n >= 1 with the complementary residue facts
 * (3^odd - 1 = 2 mod 4, 3^even + 1 = 2 mod 8, 2^odd - 1 = 1 mod 3,
 * 2^even + 1 = 2 mod 3, (m-1)^odd - 1 = -2 mod m). They are checked against
 * the exact valuation by the suites in lemma_suite.hpp, not trusted.
 */

#include <cstdint>

#include "dioph/natural.hpp"

namespace dioph {

/// n = 2^m1 * base_m^m2 * l with l odd and base_m not dividing l.
struct ExponentFactorization {
    std::uint64_t m1 = 0;
    std::uint64_t m2 = 0;
    std::uint64_t l = 1;
    std::uint64_t base_m = 3;
    std::uint64_t n = 1;

    std::uint64_t recompose() const;
    friend bool operator==(const ExponentFactorization&, const ExponentFactorization&) = default;
};

/// Requires n >= 1 and base_m odd >= 3; throws std::invalid_argument otherwise.
ExponentFactorization factor_exponent(std::uint64_t n, std::uint64_t base_m);

std::uint64_t predicted_v2_3pow_minus1(std::uint64_t n);
std::uint64_t predicted_v2_3pow_plus1(std::uint64_t n);
std::uint64_t predicted_v3_2pow_minus1(std::uint64_t n);
std::uint64_t predicted_v3_2pow_plus1(std::uint64_t n);

/// Throws std::invalid_argument("lemma requires odd base") for even base_m:
/// for even m the valuation already reaches 2 at n = m (see check_remark_even_base).
std::uint64_t predicted_vm_basepow_minus1(std::uint64_t base_m, std::uint64_t n);

/// Whether base_m^2 | (base_m - 1)^base_m - 1, for even base_m >= 4.
bool check_remark_even_base(std::uint64_t base_m);

/// Whether p^m - 1 divides p^n - 1, computed exactly. Equals (m | n).
bool divisibility_law(std::uint64_t p, std::uint64_t m, std::uint64_t n);

} // namespace dioph
