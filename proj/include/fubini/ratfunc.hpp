#pragma once

#include "fubini/poly.hpp"

namespace fubini {

/**
 * Quotient of two rational polynomials in canonical form: numerator and
 * denominator coprime, denominator monic. Zero is 0/1. With that form,
 * equality of functions is equality of the stored fields.
 */
class RatFunc {
public:
    RatFunc() : den_(PolyQ::constant(Rat(1))) {}
    RatFunc(const PolyQ& p) : num_(p), den_(PolyQ::constant(Rat(1))) {}

    /// Canonicalizes num/den; throws DomainError for a zero denominator.
    static RatFunc normalize(const PolyQ& num, const PolyQ& den);

    const PolyQ& numerator() const { return num_; }
    const PolyQ& denominator() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Throws DomainError at a pole.
    Rat eval(const Rat& point) const;
    /// Floating-point evaluation, used only by the quadrature oracle.
    double eval_double(double point) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

private:
    RatFunc(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {}

    PolyQ num_;
    PolyQ den_;
};

RatFunc pow(const RatFunc& base, unsigned exponent);

/// p(r(t)) for a polynomial p, formed over the common denominator
/// den(r)^deg(p) and then canonicalized.
RatFunc compose(const PolyQ& p, const RatFunc& r);
inline RatFunc compose(const PolyZ& p, const RatFunc& r) { return compose(to_rational(p), r); }

}  // namespace fubini
