#include "fubini/apostol.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fubini/bernoulli.hpp"
#include "fubini/combinatorics.hpp"
#include "fubini/fubini.hpp"
#include "fubini/memo.hpp"

namespace fubini {

namespace {

const PolyQ kLambda = PolyQ::identity();

// λ - 1
RatFunc lambda_minus_one() { return RatFunc(PolyQ{Rat(-1), Rat(1)}); }

// λ / (1 - λ)
RatFunc fubini_argument() { return RatFunc::normalize(kLambda, PolyQ{Rat(1), Rat(-1)}); }

ApostolBernoulli build_apostol(unsigned n) {
    if (n == 0) return {0, RatFunc{}};
    const RatFunc ratio = fubini_argument();
    const auto& s2 = stirling2_table().row(n - 1);
    RatFunc sum;
    RatFunc ratio_power(PolyQ::constant(Rat(1)));
    for (unsigned k = 0; k < n; ++k) {
        sum = sum + RatFunc(PolyQ::constant(Rat(s2[k] * factorial(k)))) * ratio_power;
        ratio_power = ratio_power * ratio;
    }
    const RatFunc prefactor = RatFunc(PolyQ::constant(Rat(n))) / lambda_minus_one();
    return {n, prefactor * sum};
}

const MemoTable<ApostolBernoulli>& apostol_cache() {
    static const MemoTable<ApostolBernoulli> cache;
    return cache;
}

void require_positive(unsigned n, const char* what) {
    if (n == 0) throw DomainError(std::string(what) + " requires n >= 1");
}

// B_{k+1}(λ)/(k+1) at a point
Rat scaled_value(unsigned k, const Rat& lambda) {
    return apostol_bernoulli(k + 1).fn.eval(lambda) / Rat(k + 1);
}

}  // namespace

const ApostolBernoulli& apostol_bernoulli(unsigned n) { return apostol_cache().get(n, build_apostol); }

ApostolBernoulli apostol_via_fubini(unsigned n) {
    require_positive(n, "the Fubini route");
    const RatFunc composed = compose(fubini_poly(n - 1).poly, fubini_argument());
    return {n, RatFunc(PolyQ::constant(Rat(n))) / lambda_minus_one() * composed};
}

ApostolBernoulli apostol_explicit_reciprocal(unsigned n) {
    require_positive(n, "the reflection-derived explicit formula");
    const RatFunc inverse = RatFunc(PolyQ::constant(Rat(1))) / lambda_minus_one();
    const auto& s2 = stirling2_table().row(n);
    RatFunc sum;
    RatFunc power = inverse;  // (1/(λ-1))^(k+1)
    for (unsigned k = 0; k <= n; ++k) {
        sum = sum + RatFunc(PolyQ::constant(Rat(s2[k] * factorial(k)))) * power;
        power = power * inverse;
    }
    Rat scale(Int(n + 1));
    if (n % 2 != 0) scale = -scale;
    return {n + 1, RatFunc(kLambda * scale) * sum};
}

Rat apostol_explicit_split(unsigned n, const Rat& lambda) {
    const Rat denom = lambda * lambda - Rat(1);
    if (denom.is_zero()) throw DomainError("split formula is singular at λ = ±1");
    const Rat lead(pow(Int(2), n + 1));
    const Rat lm1 = lambda - Rat(1);
    Rat sum;
    for (unsigned k = 0; k <= n; ++k) {
        const auto ke = static_cast<long>(k);
        const Rat bracket = lead * pow(lambda, ke) + pow(lm1, ke + 1);
        sum += Rat(stirling2(n, k) * factorial(k)) * pow(-lambda, ke) * bracket / pow(denom, ke + 1);
    }
    return sum;
}

std::pair<Rat, Rat> apostol_sum_of_products(unsigned n, const Rat& lambda) {
    if (lambda == Rat(1)) throw DomainError("λ = 1 is the pole of every Apostol-Bernoulli function");
    Rat lhs;
    for (unsigned k = 0; k <= n; ++k)
        lhs += Rat(binomial(n, k)) * scaled_value(k, lambda) * scaled_value(n - k, lambda);
    return {lhs, -(scaled_value(n + 1, lambda) + scaled_value(n, lambda))};
}

RatFunc apostol_moment_integrand(unsigned k, unsigned n) {
    const RatFunc weight = RatFunc::normalize(pow(kLambda, k), pow(PolyQ{Rat(-1), Rat(1)}, k + 1));
    return weight * apostol_bernoulli(n + 1).fn;
}

RatFunc apostol_product_integrand(unsigned m, unsigned n) {
    return apostol_bernoulli(m + 1).fn * apostol_bernoulli(n + 1).fn;
}

std::pair<Rat, Rat> apostol_moment_integral(unsigned k, unsigned n) {
    require_positive(n, "the Apostol moment integral");
    const Rat scale(Int(n + 1));
    Rat exact = scale * integrate(fubini_poly(n).poly.shifted_up(k), Rat(-1), Rat(0));
    if (k % 2 != 0) exact = -exact;
    Rat sum;
    for (unsigned j = 0; j <= k; ++j) sum += Rat(stirling1_unsigned(k + 1, j + 1)) * bernoulli(n + j);
    return {exact, scale / Rat(factorial(k)) * sum};
}

std::pair<Rat, Rat> apostol_product_integral(unsigned m, unsigned n) {
    require_positive(n, "the Apostol product integral");
    const Rat scale(Int(m + 1) * Int(n + 1));
    const Rat exact = scale * integrate(fubini_poly(m).poly * fubini_poly(n).poly, Rat(-1), Rat(0));
    Rat sum;
    for (unsigned j = 0; j <= m; ++j) sum += Rat(binomial(m, j)) * bernoulli(n + j);
    if (m % 2 != 0) sum = -sum;
    return {exact, scale * sum};
}

QuadratureResult improper_quadrature_oracle(const RatFunc& f, double tolerance) {
    if (!(tolerance > 0.0)) throw DomainError("quadrature tolerance must be positive");
    const Rat zero;
    if (count_real_roots(f.denominator(), nullptr, &zero) > 0)
        throw DomainError("integrand has a pole on (-inf, 0]");
    if (!f.is_zero() && f.denominator().degree() - f.numerator().degree() < 2)
        throw DomainError("integrand must decay at least like 1/λ^2");

    auto mapped = [&f](double t) {
        const double s = 1.0 - t;
        return f.eval_double(-t / s) / (s * s);
    };
    QuadratureResult out;
    double l1 = 0.0;
    out.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(mapped, 0.0, 1.0, 20, tolerance * 1e-3,
                                                                               &out.error_estimate, &l1);
    if (!(out.error_estimate <= tolerance))
        throw DomainError("quadrature did not reach the requested tolerance");
    return out;
}

}  // namespace fubini
