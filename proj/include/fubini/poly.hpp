#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "fubini/rat.hpp"

namespace fubini {

inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rat& c) { return c.is_zero(); }

/**
 * Dense univariate polynomial, coefficient i multiplies the i-th power.
 *
 * Canonical form: no trailing zero coefficients, so the zero polynomial
 * is the empty list and has degree -1. Every operation returns canonical
 * values, which makes operator== a coefficientwise comparison.
 */
template <typename T>
class Poly {
public:
    using coefficient_type = T;

    Poly() = default;
    explicit Poly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }

    static Poly constant(const T& c) { return Poly(std::vector<T>{c}); }
    static Poly monomial(const T& c, std::size_t power) {
        std::vector<T> v(power + 1, T(0));
        v[power] = c;
        return Poly(std::move(v));
    }
    /// The polynomial `variable`, i.e. 0 + 1*t.
    static Poly identity() { return monomial(T(1), 1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<T>& coefficients() const { return coeffs_; }
    T coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }
    const T& leading() const { return coeffs_.back(); }

    Rat eval(const Rat& point) const {
        Rat acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * point + Rat(*it);
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<T> out(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * T(static_cast<long>(i));
        return Poly(std::move(out));
    }

    /// Multiplication by t^power.
    Poly shifted_up(std::size_t power) const {
        if (is_zero()) return {};
        std::vector<T> out(power, T(0));
        out.insert(out.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(out));
    }

    /// p(inner(t)) by Horner over polynomials.
    Poly compose(const Poly& inner) const {
        Poly acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
        return acc;
    }

    Poly operator-() const {
        std::vector<T> out(coeffs_);
        for (auto& c : out) c = -c;
        return Poly(std::move(out));
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator*=(const T& scalar) {
        for (auto& c : coeffs_) c *= scalar;
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const T& s) { return a *= s; }
    friend Poly operator*(const T& s, Poly a) { return a *= s; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (coeff_is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim() {
        while (!coeffs_.empty() && coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

using PolyZ = Poly<Int>;
using PolyQ = Poly<Rat>;

template <typename T>
Poly<T> pow(const Poly<T>& base, unsigned exponent) {
    Poly<T> out = Poly<T>::constant(T(1));
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

PolyQ to_rational(const PolyZ& p);

/// Exact definite integral via the termwise antiderivative.
Rat integrate(const PolyQ& p, const Rat& lower, const Rat& upper);
inline Rat integrate(const PolyZ& p, const Rat& lower, const Rat& upper) {
    return integrate(to_rational(p), lower, upper);
}

/// Antiderivative with zero constant term.
PolyQ antiderivative(const PolyQ& p);

/// Euclidean division over Q; throws DomainError on a zero divisor.
std::pair<PolyQ, PolyQ> divmod(const PolyQ& dividend, const PolyQ& divisor);

PolyQ monic(const PolyQ& p);

/// Monic gcd; gcd(0, 0) is the zero polynomial.
PolyQ gcd(const PolyQ& a, const PolyQ& b);

/// Number of distinct real roots in (lower, upper] by Sturm's theorem.
/// An absent bound stands for -inf / +inf.
std::size_t count_real_roots(const PolyQ& p, const Rat* lower, const Rat* upper);

}  // namespace fubini
