#include "fubini/ratfunc.hpp"

#include <cmath>
#include <vector>

namespace fubini {

RatFunc RatFunc::normalize(const PolyQ& num, const PolyQ& den) {
    if (den.is_zero()) throw DomainError("rational function with zero denominator");
    if (num.is_zero()) return RatFunc{};
    const PolyQ g = gcd(num, den);
    PolyQ n = divmod(num, g).first;
    PolyQ d = divmod(den, g).first;
    const Rat lead = d.leading();
    return RatFunc(n * (Rat(1) / lead), d * (Rat(1) / lead));
}

Rat RatFunc::eval(const Rat& point) const {
    const Rat d = den_.eval(point);
    if (d.is_zero()) throw DomainError("rational function evaluated at a pole: " + point.str());
    return num_.eval(point) / d;
}

namespace {

std::vector<double> to_doubles(const PolyQ& p) {
    std::vector<double> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.push_back(c.to_double());
    return out;
}

double horner(const std::vector<double>& c, double x) {
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Reversed Horner: sum c_i u^(deg-i), i.e. t^-deg p(t) at u = 1/t.
double horner_reversed(const std::vector<double>& c, double u) {
    double acc = 0.0;
    for (double ci : c) acc = acc * u + ci;
    return acc;
}

}  // namespace

double RatFunc::eval_double(double point) const {
    const auto n = to_doubles(num_);
    const auto d = to_doubles(den_);
    if (n.empty()) return 0.0;
    if (std::abs(point) <= 1.0) return horner(n, point) / horner(d, point);
    // Large |point|: factor out the leading powers so nothing overflows.
    const double u = 1.0 / point;
    const int excess = num_.degree() - den_.degree();
    return std::pow(point, excess) * horner_reversed(n, u) / horner_reversed(d, u);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc::normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DomainError("division by the zero rational function");
    return RatFunc::normalize(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc pow(const RatFunc& base, unsigned exponent) {
    RatFunc out(PolyQ::constant(Rat(1)));
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

RatFunc compose(const PolyQ& p, const RatFunc& r) {
    if (p.is_zero()) return RatFunc{};
    const auto deg = static_cast<unsigned>(p.degree());
    const PolyQ& rn = r.numerator();
    const PolyQ& rd = r.denominator();
    // sum_k c_k rn^k rd^(deg-k) over rd^deg
    std::vector<PolyQ> num_pows{PolyQ::constant(Rat(1))};
    std::vector<PolyQ> den_pows{PolyQ::constant(Rat(1))};
    for (unsigned k = 1; k <= deg; ++k) {
        num_pows.push_back(num_pows.back() * rn);
        den_pows.push_back(den_pows.back() * rd);
    }
    PolyQ num;
    for (unsigned k = 0; k <= deg; ++k) num += p.coeff(k) * (num_pows[k] * den_pows[deg - k]);
    return RatFunc::normalize(num, den_pows[deg]);
}

}  // namespace fubini
