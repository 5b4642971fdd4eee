#include "dioph/conjecture.hpp"

#include <stdexcept>

#include "dioph/natural.hpp"
#include "dioph/parallel.hpp"
#include "dioph/valuation.hpp"

namespace dioph {

namespace {

std::uint64_t floor_log2(std::uint64_t x)
{
    return 63 - static_cast<std::uint64_t>(__builtin_clzll(x));
}

std::uint64_t ceil_log2(std::uint64_t x)
{
    return x <= 1 ? 0 : floor_log2(x - 1) + 1;
}

void require_even_base(std::uint64_t m)
{
    if (m <= 3 || m % 2 != 0) throw std::invalid_argument("conjecture: m must be even and > 3");
}

} // namespace

ConjecturePoint conjecture_point(std::uint64_t m, std::uint64_t n)
{
    require_even_base(m);
    if (n == 0) throw std::invalid_argument("conjecture: n must be >= 1");

    ConjecturePoint pt;
    pt.valuation = valuation_pow_minus_one(Natural(m), Natural(m - 1), n).exponent;

    // Integer bounds: m^(2v) <= 2^(2v ceil(log2 m)) and (m-1)^n - 1 >= 2^(n floor(log2(m-1))) - 1.
    // If 2v ceil(log2 m) < n floor(log2(m-1)) the inequality holds.
    const std::uint64_t lo_bits = n * floor_log2(m - 1);
    const std::uint64_t hi_bits = 2 * pt.valuation * ceil_log2(m);
    if (lo_bits > kExactComparisonBits && hi_bits < lo_bits) {
        pt.holds = true;
        return pt;
    }
    pt.exact = true;
    pt.holds = pow(Natural(m), 2 * pt.valuation) <= pow(Natural(m - 1), n) - Natural(1);
    return pt;
}

std::vector<ConjectureReport> scan_conjecture(std::uint64_t m_min, std::uint64_t m_max, std::uint64_t n_max,
                                              std::size_t workers)
{
    require_even_base(m_min);
    require_even_base(m_max);
    if (n_max == 0) throw std::invalid_argument("conjecture: n_max must be >= 1");
    if (m_max < m_min) return {};

    std::vector<ConjectureReport> reports((m_max - m_min) / 2 + 1);
    for_each_task(reports.size(), workers, [&](std::size_t i) {
        ConjectureReport& r = reports[i];
        r.base_m = m_min + 2 * i;
        r.n_max = n_max;
        for (std::uint64_t n = 1; n <= n_max; ++n) {
            if (!conjecture_point(r.base_m, n).holds) r.violations.push_back(n);
        }
        const std::uint64_t last = r.violations.empty() ? 0 : r.violations.back();
        if (last < n_max) r.minimal_n = last + 1;
    });
    return reports;
}

} // namespace dioph
