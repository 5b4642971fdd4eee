#include "dioph/valuation.hpp"

#include <cmath>
#include <stdexcept>

namespace dioph {

namespace {

// Small-residue fallback depth for the plus form when a^n != -1 (mod m).
constexpr std::uint64_t kPlusFallbackLevels = 4;

void check_pow_args(const Natural& m, const Natural& a, std::uint64_t n)
{
    if (m < Natural(2)) throw std::invalid_argument("valuation: base must be >= 2");
    if (a < Natural(2)) throw std::invalid_argument("valuation: a must be >= 2");
    if (n == 0) throw std::invalid_argument("valuation: n must be >= 1");
}

double log2_natural(const Natural& x)
{
    // mpz_get_d_2exp keeps the exponent separate, so huge inputs do not overflow.
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, x.mpz().get_mpz_t());
    return std::log2(mant) + static_cast<double>(exp);
}

class ResidueProbe {
public:
    ResidueProbe(Sign sign, const Natural& m, const Natural& a, std::uint64_t n)
        : sign_(sign), m_(m), a_(a), n_(n) {}

    // Whether a^n == +-1 (mod m^k), k >= 1.
    bool congruent(std::uint64_t k) const
    {
        const Natural modulus = pow(m_, k);
        const Natural r = residue(modulus);
        return sign_ == Sign::minus ? r == Natural(1) : r == modulus - Natural(1);
    }

    Natural residue(const Natural& modulus) const { return modpow(a_, n_, modulus); }

private:
    Sign sign_;
    const Natural& m_;
    const Natural& a_;
    Natural n_;
};

} // namespace

std::uint64_t valuation(const Natural& m, const Natural& x)
{
    if (m < Natural(2)) throw std::invalid_argument("valuation: base must be >= 2");
    if (x.is_zero()) throw std::domain_error("valuation undefined at zero");
    mpz_class q = x.mpz();
    std::uint64_t k = 0;
    while (mpz_divisible_p(q.get_mpz_t(), m.mpz().get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), m.mpz().get_mpz_t());
        ++k;
    }
    return k;
}

bool exact_divides(const Natural& m, std::uint64_t k, const Natural& x)
{
    return valuation(m, x) == k;
}

std::uint64_t valuation_probe_cap(const Natural& m, const Natural& a, std::uint64_t n)
{
    const double bits = static_cast<double>(n) * log2_natural(a) / log2_natural(m);
    return static_cast<std::uint64_t>(std::ceil(bits)) + 1;
}

ValuationCertificate valuation_pow(Sign sign, const Natural& m, const Natural& a, std::uint64_t n)
{
    check_pow_args(m, a, n);
    const ResidueProbe probe(sign, m, a, n);
    ValuationCertificate cert{m, 0, std::nullopt};

    if (!probe.congruent(1)) {
        if (sign == Sign::plus) {
            // Naive valuation on the small residue (a^n + 1) mod m^J. Since
            // m does not divide a^n + 1 the residue is nonzero and this is 0.
            const Natural small = pow(m, kPlusFallbackLevels);
            const Natural r = (probe.residue(small) + Natural(1)) % small;
            cert.exponent = valuation(m, r);
        }
        cert.witness_residue = probe.residue(pow(m, cert.exponent + 1));
        return cert;
    }

    const std::uint64_t cap = valuation_probe_cap(m, a, n);
    std::uint64_t hit = 1;      // congruent at this level
    std::uint64_t miss = cap + 1; // known not congruent (the quantity is below m^miss)
    for (std::uint64_t k = 2; k <= cap; k *= 2) {
        if (probe.congruent(k)) {
            hit = k;
        } else {
            miss = k;
            break;
        }
    }
    while (miss - hit > 1) {
        const std::uint64_t mid = hit + (miss - hit) / 2;
        (probe.congruent(mid) ? hit : miss) = mid;
    }
    cert.exponent = hit;
    cert.witness_residue = probe.residue(pow(m, hit + 1));
    return cert;
}

ValuationCertificate valuation_pow_minus_one(const Natural& m, const Natural& a, std::uint64_t n)
{
    return valuation_pow(Sign::minus, m, a, n);
}

ValuationCertificate valuation_pow_plus_one(const Natural& m, const Natural& a, std::uint64_t n)
{
    return valuation_pow(Sign::plus, m, a, n);
}

ValuationCertificate naive_valuation_pow(Sign sign, const Natural& m, const Natural& a, std::uint64_t n)
{
    check_pow_args(m, a, n);
    Natural x = pow(a, n);
    x = sign == Sign::minus ? x - Natural(1) : x + Natural(1);
    return {m, valuation(m, x), std::nullopt};
}

} // namespace dioph
