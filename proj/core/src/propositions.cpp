#include "dioph/propositions.hpp"

#include <stdexcept>
#include <string>

namespace dioph {

namespace {

// sum_{i=0}^{l-1} base^(i m)
Natural geometric_sum(const Natural& base, std::uint64_t m, std::uint64_t l)
{
    const Natural step = pow(base, m);
    Natural sum(0);
    Natural term(1);
    for (std::uint64_t i = 0; i < l; ++i) {
        sum += term;
        term *= step;
    }
    return sum;
}

void require_positive(std::initializer_list<std::uint64_t> xs, const char* what)
{
    for (const auto x : xs) {
        if (x == 0) throw std::invalid_argument(std::string(what) + ": arguments must be >= 1");
    }
}

[[noreturn]] void pruned_solution(const std::string& what)
{
    throw std::logic_error("pruning discarded a genuine solution " + what);
}

} // namespace

bool check_prop6(std::uint64_t k, std::uint64_t m, std::uint64_t n)
{
    require_positive({k, m, n}, "check_prop6");
    const Natural two(2);
    return pow(Natural(3), k) * (pow(two, m) - Natural(1)) == pow(two, n) - Natural(1);
}

Natural geometric_cofactor(std::uint64_t m, std::uint64_t l)
{
    require_positive({m, l}, "geometric_cofactor");
    const Natural two(2);
    Natural sum = geometric_sum(two, m, l);
    const Natural quotient = (pow(two, l * m) - Natural(1)) / (pow(two, m) - Natural(1));
    if (sum != quotient) throw std::logic_error("geometric_cofactor: sum and quotient disagree");
    return sum;
}

std::optional<std::string_view> prop6_prune_reason(std::uint64_t k, std::uint64_t m, std::uint64_t n)
{
    if (n % m != 0) return "m does not divide n";
    if (n / m < 2) return "n/m < 2";
    if (n % 2 != 0) return "n odd";
    const Natural two(2);
    if (pow(Natural(3), 2 * k) <= pow(two, n) - Natural(1)) return "3^(2k) <= 2^n - 1";
    if (pow(Natural(3), k) <= pow(two, m) - Natural(1)) return "3^k <= 2^m - 1";
    return std::nullopt;
}

std::vector<Prop6Solution> solve_prop6(std::uint64_t k_max, std::uint64_t m_max, std::uint64_t n_max,
                                       SolveOptions opts)
{
    std::vector<Prop6Solution> out;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        const Natural three_k = pow(Natural(3), k);
        for (std::uint64_t m = 1; m <= m_max; ++m) {
            for (std::uint64_t n = 1; n <= n_max; ++n) {
                const bool solves = prop6_prune_reason(k, m, n)
                    ? false
                    : geometric_cofactor(m, n / m) == three_k;
                if (solves) {
                    out.push_back({k, m, n});
                } else if (opts.cross_check && check_prop6(k, m, n)) {
                    pruned_solution("(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(n) + ")");
                }
            }
        }
    }
    return out;
}

bool check_prop9(std::uint64_t k, std::uint64_t p, std::uint64_t q, std::uint64_t n)
{
    require_positive({k, p, q, n}, "check_prop9");
    const Natural x(2 * n);
    return pow(Natural(2 * n + 1), k) * (pow(x, p) - Natural(1)) == pow(x, q) - Natural(1);
}

std::optional<std::string_view> prop9_prune_reason(std::uint64_t k, std::uint64_t p, std::uint64_t q,
                                                   std::uint64_t n)
{
    if (q % p != 0) return "p does not divide q";
    if (q / p < 2) return "q/p < 2";
    if (q % 2 != 0) return "q odd";
    const Natural x(2 * n);
    const Natural y(2 * n + 1);
    if (pow(y, k) <= pow(x, p) - Natural(1)) return "(2n+1)^k <= (2n)^p - 1";
    if (pow(y, 2 * k) <= pow(x, q) - Natural(1)) return "(2n+1)^(2k) <= (2n)^q - 1";
    return std::nullopt;
}

std::vector<Prop9Solution> solve_prop9(std::uint64_t k_max, std::uint64_t p_max, std::uint64_t q_max,
                                       std::uint64_t n_max, SolveOptions opts)
{
    std::vector<Prop9Solution> out;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
        for (std::uint64_t p = 1; p <= p_max; ++p) {
            for (std::uint64_t q = 1; q <= q_max; ++q) {
                for (std::uint64_t n = 1; n <= n_max; ++n) {
                    const bool solves = prop9_prune_reason(k, p, q, n)
                        ? false
                        : geometric_sum(Natural(2 * n), p, q / p) == pow(Natural(2 * n + 1), k);
                    if (solves) {
                        out.push_back({k, p, q, n});
                    } else if (opts.cross_check && check_prop9(k, p, q, n)) {
                        pruned_solution("(" + std::to_string(k) + "," + std::to_string(p) + "," + std::to_string(q) +
                                        "," + std::to_string(n) + ")");
                    }
                }
            }
        }
    }
    return out;
}

bool verify_growth_base_case(std::uint64_t x_max)
{
    if (x_max < 3) throw std::invalid_argument("verify_growth_base_case: x_max must be >= 3");
    for (std::uint64_t x = 3; x <= x_max; x += 2) {
        const Natural X(x);
        const Natural lhs = pow(X, 6);
        const Natural mid = pow(X, x * x) - Natural(1);
        const Natural rhs = pow(Natural(x - 1), 2 * x * x) - Natural(1);
        if (!(lhs < mid && mid < rhs)) return false;
    }
    return true;
}

} // namespace dioph
