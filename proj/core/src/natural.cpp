#include "dioph/natural.hpp"

#include <ostream>

namespace dioph {

Natural Natural::parse(std::string_view decimal)
{
    if (decimal.empty()) throw std::invalid_argument("Natural: empty string");
    for (const char c : decimal) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("Natural: not a decimal number: " + std::string(decimal));
        }
    }
    Natural n;
    n.value_.set_str(std::string(decimal), 10);
    return n;
}

Natural Natural::from_mpz(mpz_class v)
{
    if (sgn(v) < 0) throw std::domain_error("Natural: negative value");
    Natural n;
    n.value_ = std::move(v);
    return n;
}

std::size_t Natural::bit_length() const noexcept
{
    return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::optional<std::uint64_t> Natural::to_u64() const noexcept
{
    if (bit_length() > 64) return std::nullopt;
    static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
    return static_cast<std::uint64_t>(value_.get_ui());
}

Natural& Natural::operator-=(const Natural& o)
{
    if (cmp(value_, o.value_) < 0) throw std::domain_error("Natural: subtraction underflow");
    value_ -= o.value_;
    return *this;
}

Natural& Natural::operator/=(const Natural& o)
{
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    mpz_fdiv_q(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

Natural& Natural::operator%=(const Natural& o)
{
    if (o.is_zero()) throw std::domain_error("Natural: division by zero");
    mpz_fdiv_r(value_.get_mpz_t(), value_.get_mpz_t(), o.value_.get_mpz_t());
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Natural& n)
{
    return os << n.str();
}

Natural pow(const Natural& base, std::uint64_t exponent)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.mpz().get_mpz_t(), exponent);
    return Natural::from_mpz(std::move(r));
}

bool divides(const Natural& d, const Natural& x)
{
    if (d.is_zero()) return x.is_zero();
    return mpz_divisible_p(x.mpz().get_mpz_t(), d.mpz().get_mpz_t()) != 0;
}

Natural modpow(const Natural& a, const Natural& n, const Natural& modulus)
{
    if (modulus.is_zero()) throw std::invalid_argument("modpow: modulus must be >= 1");
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.mpz().get_mpz_t(), n.mpz().get_mpz_t(), modulus.mpz().get_mpz_t());
    return Natural::from_mpz(std::move(r));
}

} // namespace dioph
