#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fubini {

using Int = mpz_class;

/// Raised when an operation is called outside its stated domain
/// (n = 0 where n >= 1 is required, a singular sample point, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

Int int_from_string(std::string_view text);
std::string to_string(const Int& value);

/**
 * Arbitrary-precision rational kept in lowest terms with a positive
 * denominator. Zero is 0/1. Division by zero throws DomainError instead
 * of trapping inside GMP.
 */
class Rat {
public:
    Rat() = default;
    template <std::integral T>
    Rat(T value) : value_(static_cast<long>(value)) {}
    Rat(const Int& value) : value_(value) {}
    Rat(const Int& numerator, const Int& denominator);

    /// Parses "[+-]digits[/digits]"; the denominator must be positive.
    static Rat parse(std::string_view text);

    Int numerator() const { return value_.get_num(); }
    Int denominator() const { return value_.get_den(); }
    const mpq_class& raw() const { return value_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }
    std::string str() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& other);
    Rat& operator-=(const Rat& other);
    Rat& operator*=(const Rat& other);
    Rat& operator/=(const Rat& other);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    struct Raw {};
    Rat(Raw, mpq_class value) : value_(std::move(value)) {}
    mpq_class value_{0};
};

Rat abs(const Rat& value);
/// Integer power; negative exponents invert (and throw on zero base).
Rat pow(const Rat& base, long exponent);
Int pow(const Int& base, unsigned long exponent);

inline std::string to_string(const Rat& value) { return value.str(); }

/// Sign factor (-1)^e as an integer.
inline int neg_one_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace fubini

template <>
struct std::hash<fubini::Rat> {
    std::size_t operator()(const fubini::Rat& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
