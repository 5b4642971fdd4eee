#include "dioph/lemma_suite.hpp"

#include <sstream>
#include <stdexcept>

#include "dioph/lemmas.hpp"
#include "dioph/natural.hpp"
#include "dioph/valuation.hpp"

namespace dioph {

namespace {

// Counterexamples beyond this are counted but not spelled out.
constexpr std::size_t kMaxReported = 20;

void report(LemmaCheckResult& r, const std::string& what)
{
    if (r.counterexamples.size() < kMaxReported) r.counterexamples.push_back(what);
}

std::uint64_t exact_v(std::uint64_t m, std::uint64_t a, std::uint64_t n, Sign sign)
{
    return naive_valuation_pow(sign, Natural(m), Natural(a), n).exponent;
}

void compare(LemmaCheckResult& r, const char* form, std::uint64_t n, std::uint64_t predicted, std::uint64_t actual)
{
    ++r.checks;
    if (predicted != actual) {
        std::ostringstream ss;
        ss << form << " n=" << n << ": predicted " << predicted << ", exact " << actual;
        report(r, ss.str());
    }
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

LemmaCheckResult check_cyclotomic_division(const LemmaSuiteConfig& cfg)
{
    LemmaCheckResult r{"cyclotomic-division", 0, {}};
    for (std::uint64_t p = cfg.cyclotomic_p_min; p <= cfg.cyclotomic_p_max; ++p) {
        for (std::uint64_t m = 1; m <= cfg.cyclotomic_m_max; ++m) {
            for (std::uint64_t n = 0; n <= cfg.cyclotomic_n_max; ++n) {
                ++r.checks;
                if (divisibility_law(p, m, n) != (n % m == 0)) {
                    std::ostringstream ss;
                    ss << "p=" << p << " m=" << m << " n=" << n;
                    report(r, ss.str());
                }
            }
        }
    }
    return r;
}

LemmaCheckResult check_power_three_minus(const LemmaSuiteConfig& cfg)
{
    LemmaCheckResult r{"power-three-minus", 0, {}};
    for (std::uint64_t e = 1; e <= cfg.three_minus_e_max; ++e) {
        for (std::uint64_t k = 1; k <= cfg.three_minus_k_max; k += 2) {
            const std::uint64_t n = ipow(2, e) * k;
            const std::uint64_t p = predicted_v2_3pow_minus1(n);
            compare(r, "v_2(3^n - 1)", n, p, exact_v(2, 3, n, Sign::minus));
            // The statement itself: 2^(e+2) || 3^(2^e k) - 1.
            compare(r, "v_2(3^n - 1) = e + 2", n, e + 2, p);
        }
    }
    return r;
}

LemmaCheckResult check_power_three_plus(const LemmaSuiteConfig& cfg)
{
    LemmaCheckResult r{"power-three-plus", 0, {}};
    for (std::uint64_t m = 1; m <= cfg.three_plus_m_max; ++m) {
        compare(r, "v_2(3^n + 1)", m, predicted_v2_3pow_plus1(m), exact_v(2, 3, m, Sign::plus));
    }
    return r;
}

LemmaCheckResult check_power_two_minus(const LemmaSuiteConfig& cfg)
{
    LemmaCheckResult r{"power-two-minus", 0, {}};
    for (std::uint64_t m1 = 1; m1 <= cfg.two_minus_m1_max; ++m1) {
        for (std::uint64_t m2 = 0; m2 <= cfg.two_minus_m2_max; ++m2) {
            for (const std::uint64_t l : cfg.two_minus_l) {
                const std::uint64_t n = ipow(2, m1) * ipow(3, m2) * l;
                const std::uint64_t p = predicted_v3_2pow_minus1(n);
                compare(r, "v_3(2^n - 1) = m2 + 1", n, m2 + 1, p);
                compare(r, "v_3(2^n - 1)", n, p, exact_v(3, 2, n, Sign::minus));
            }
        }
    }
    return r;
}

LemmaCheckResult check_power_two_plus(const LemmaSuiteConfig& cfg)
{
    LemmaCheckResult r{"power-two-plus", 0, {}};
    for (std::uint64_t m1 = 0; m1 <= cfg.two_plus_m1_max; ++m1) {
        for (const std::uint64_t l : cfg.two_plus_l) {
            const std::uint64_t n = ipow(3, m1) * l;
            const std::uint64_t p = predicted_v3_2pow_plus1(n);
            compare(r, "v_3(2^n + 1) = m1 + 1", n, m1 + 1, p);
            compare(r, "v_3(2^n + 1)", n, p, exact_v(3, 2, n, Sign::plus));
        }
    }
    return r;
}

LemmaCheckResult check_power_odd_minus(const LemmaSuiteConfig& cfg)
{
    for (const std::uint64_t m : cfg.odd_minus_bases) {
        if (m % 2 == 0) throw std::invalid_argument("lemma requires odd base");
    }
    LemmaCheckResult r{"power-odd-minus", 0, {}};
    for (const std::uint64_t m : cfg.odd_minus_bases) {
        for (std::uint64_t n = 1; n <= cfg.odd_minus_n_max; ++n) {
            std::ostringstream form;
            form << "v_" << m << "((" << m << "-1)^n - 1)";
            compare(r, form.str().c_str(), n, predicted_vm_basepow_minus1(m, n), exact_v(m, m - 1, n, Sign::minus));
        }
    }
    // Part 1 (m does not divide (m-1)^n - 1 for odd n) holds for even m too.
    for (const std::uint64_t m : cfg.odd_minus_part1_even_bases) {
        for (std::uint64_t n = 1; n <= cfg.odd_minus_n_max; n += 2) {
            ++r.checks;
            const Natural x = pow(Natural(m - 1), n) - Natural(1);
            if (divides(Natural(m), x)) {
                std::ostringstream ss;
                ss << "part 1, even m=" << m << " n=" << n << ": m divides (m-1)^n - 1";
                report(r, ss.str());
            }
        }
    }
    return r;
}

LemmaCheckResult check_no_power_even(const LemmaSuiteConfig& cfg)
{
    LemmaCheckResult r{"no-power-even", 0, {}};
    std::uint64_t m = cfg.even_remark_m_min + (cfg.even_remark_m_min % 2);
    for (; m <= cfg.even_remark_m_max; m += 2) {
        ++r.checks;
        if (!check_remark_even_base(m)) {
            std::ostringstream ss;
            ss << "m=" << m << ": m^2 does not divide (m-1)^m - 1";
            report(r, ss.str());
        }
    }
    return r;
}

const std::vector<std::string>& lemma_names()
{
    static const std::vector<std::string> names = {
        "cyclotomic-division", "power-three-minus", "power-three-plus", "power-two-minus",
        "power-two-plus",      "power-odd-minus",   "no-power-even",
    };
    return names;
}

std::vector<LemmaCheckResult> run_lemma_suite(const LemmaSuiteConfig& cfg, const std::string& which)
{
    using Check = LemmaCheckResult (*)(const LemmaSuiteConfig&);
    static const Check checks[] = {
        check_cyclotomic_division, check_power_three_minus, check_power_three_plus, check_power_two_minus,
        check_power_two_plus,      check_power_odd_minus,   check_no_power_even,
    };
    const auto& names = lemma_names();
    std::vector<LemmaCheckResult> out;
    bool known = which == "all";
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (which == "all" || which == names[i]) {
            known = true;
            out.push_back(checks[i](cfg));
        }
    }
    if (!known) throw std::invalid_argument("unknown lemma: " + which);
    return out;
}

} // namespace dioph
