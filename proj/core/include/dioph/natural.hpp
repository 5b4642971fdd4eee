#pragma once

/**
 * @file natural.hpp
 * @brief Arbitrary-precision nonnegative integers.
 *
 * Natural is a thin value type over GMP's mpz_class that keeps the
 * nonnegativity invariant: subtraction that would go below zero throws
 * instead of wrapping or producing a negative value. Every integer quantity
 * in the library that can outgrow 64 bits is a Natural.
 */

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace dioph {

class Natural {
public:
    Natural() = default;

    template <std::integral T>
    Natural(T v) // NOLINT(google-explicit-constructor)
    {
        if constexpr (std::is_signed_v<T>) {
            if (v < 0) throw std::domain_error("Natural: negative value");
        }
        value_ = static_cast<unsigned long>(v);
    }

    /// Parses a decimal string of digits only.
    static Natural parse(std::string_view decimal);

    /// Adopts an mpz value; throws std::domain_error if it is negative.
    static Natural from_mpz(mpz_class v);

    const mpz_class& mpz() const noexcept { return value_; }

    std::string str() const { return value_.get_str(10); }
    bool is_zero() const noexcept { return sgn(value_) == 0; }
    bool is_odd() const noexcept { return mpz_odd_p(value_.get_mpz_t()) != 0; }
    /// Number of significant bits; 0 for zero.
    std::size_t bit_length() const noexcept;
    std::optional<std::uint64_t> to_u64() const noexcept;

    Natural& operator+=(const Natural& o) { value_ += o.value_; return *this; }
    Natural& operator*=(const Natural& o) { value_ *= o.value_; return *this; }
    Natural& operator-=(const Natural& o);
    /// Floor division; throws std::domain_error on a zero divisor.
    Natural& operator/=(const Natural& o);
    Natural& operator%=(const Natural& o);

    friend Natural operator+(Natural a, const Natural& b) { return a += b; }
    friend Natural operator*(Natural a, const Natural& b) { return a *= b; }
    friend Natural operator-(Natural a, const Natural& b) { return a -= b; }
    friend Natural operator/(Natural a, const Natural& b) { return a /= b; }
    friend Natural operator%(Natural a, const Natural& b) { return a %= b; }

    friend bool operator==(const Natural& a, const Natural& b) noexcept
    {
        return cmp(a.value_, b.value_) == 0;
    }
    friend std::strong_ordering operator<=>(const Natural& a, const Natural& b) noexcept
    {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpz_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Natural& n);

Natural pow(const Natural& base, std::uint64_t exponent);

/// True iff d divides x (d = 0 divides only 0).
bool divides(const Natural& d, const Natural& x);

/// a^n mod modulus by square-and-multiply; modulus = 1 yields 0.
Natural modpow(const Natural& a, const Natural& n, const Natural& modulus);

} // namespace dioph
