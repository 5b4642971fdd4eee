#include "dioph/lemmas.hpp"

#include <stdexcept>

namespace dioph {

namespace {

std::uint64_t small_valuation(std::uint64_t m, std::uint64_t& x)
{
    std::uint64_t k = 0;
    while (x % m == 0) {
        x /= m;
        ++k;
    }
    return k;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

std::uint64_t ExponentFactorization::recompose() const
{
    return ipow(2, m1) * ipow(base_m, m2) * l;
}

ExponentFactorization factor_exponent(std::uint64_t n, std::uint64_t base_m)
{
    if (n == 0) throw std::invalid_argument("factor_exponent: n must be >= 1");
    if (base_m < 3 || base_m % 2 == 0) {
        throw std::invalid_argument("factor_exponent: base must be odd and >= 3");
    }
    ExponentFactorization f;
    f.n = n;
    f.base_m = base_m;
    std::uint64_t rest = n;
    f.m1 = small_valuation(2, rest);
    f.m2 = small_valuation(base_m, rest);
    f.l = rest;
    return f;
}

std::uint64_t predicted_v2_3pow_minus1(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("predicted_v2_3pow_minus1: n must be >= 1");
    std::uint64_t rest = n;
    const std::uint64_t e = small_valuation(2, rest);
    return e == 0 ? 1 : e + 2;
}

std::uint64_t predicted_v2_3pow_plus1(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("predicted_v2_3pow_plus1: n must be >= 1");
    return n % 2 == 1 ? 2 : 1;
}

std::uint64_t predicted_v3_2pow_minus1(std::uint64_t n)
{
    if (n % 2 == 1) return 0;
    return factor_exponent(n, 3).m2 + 1;
}

std::uint64_t predicted_v3_2pow_plus1(std::uint64_t n)
{
    if (n == 0) throw std::invalid_argument("predicted_v3_2pow_plus1: n must be >= 1");
    if (n % 2 == 0) return 0;
    std::uint64_t rest = n;
    return small_valuation(3, rest) + 1;
}

std::uint64_t predicted_vm_basepow_minus1(std::uint64_t base_m, std::uint64_t n)
{
    if (base_m % 2 == 0) throw std::invalid_argument("lemma requires odd base");
    if (base_m < 3) throw std::invalid_argument("predicted_vm_basepow_minus1: base must be >= 3");
    if (n == 0) throw std::invalid_argument("predicted_vm_basepow_minus1: n must be >= 1");
    if (n % 2 == 1) return 0;
    return factor_exponent(n, base_m).m2 + 1;
}

bool check_remark_even_base(std::uint64_t base_m)
{
    if (base_m < 4 || base_m % 2 == 1) {
        throw std::invalid_argument("check_remark_even_base: base must be even and >= 4");
    }
    const Natural m(base_m);
    const Natural x = pow(Natural(base_m - 1), base_m) - Natural(1);
    return divides(m * m, x);
}

bool divisibility_law(std::uint64_t p, std::uint64_t m, std::uint64_t n)
{
    if (p < 2) throw std::invalid_argument("divisibility_law: p must be >= 2");
    if (m == 0) throw std::invalid_argument("divisibility_law: m must be >= 1");
    const Natural base(p);
    return divides(pow(base, m) - Natural(1), pow(base, n) - Natural(1));
}

} // namespace dioph
