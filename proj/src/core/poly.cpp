#include "fubini/poly.hpp"

namespace fubini {

PolyQ to_rational(const PolyZ& p) {
    std::vector<Rat> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) out.emplace_back(c);
    return PolyQ(std::move(out));
}

PolyQ antiderivative(const PolyQ& p) {
    std::vector<Rat> out(p.coefficients().size() + 1);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        out[i + 1] = p.coefficients()[i] / Rat(static_cast<long>(i + 1));
    return PolyQ(std::move(out));
}

Rat integrate(const PolyQ& p, const Rat& lower, const Rat& upper) {
    const PolyQ prim = antiderivative(p);
    return prim.eval(upper) - prim.eval(lower);
}

std::pair<PolyQ, PolyQ> divmod(const PolyQ& dividend, const PolyQ& divisor) {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    std::vector<Rat> rem = dividend.coefficients();
    const int dd = divisor.degree();
    if (static_cast<int>(rem.size()) - 1 < dd) return {PolyQ{}, dividend};
    std::vector<Rat> quot(rem.size() - static_cast<std::size_t>(dd));
    const Rat lead_inv = Rat(1) / divisor.leading();
    for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
        const Rat q = rem[static_cast<std::size_t>(i)] * lead_inv;
        if (q.is_zero()) continue;
        quot[static_cast<std::size_t>(i - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= q * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ monic(const PolyQ& p) {
    if (p.is_zero()) return p;
    return p * (Rat(1) / p.leading());
}

PolyQ gcd(const PolyQ& a, const PolyQ& b) {
    PolyQ x = monic(a);
    PolyQ y = monic(b);
    while (!y.is_zero()) {
        PolyQ r = divmod(x, y).second;
        x = std::move(y);
        y = monic(r);
    }
    return x;
}

namespace {

int sign_at(const PolyQ& p, const Rat* point, bool at_minus_infinity) {
    if (p.is_zero()) return 0;
    if (point) return p.eval(*point).sign();
    const int lead = p.leading().sign();
    if (!at_minus_infinity) return lead;
    return (p.degree() % 2 == 0) ? lead : -lead;
}

std::size_t sign_changes(const std::vector<PolyQ>& chain, const Rat* point, bool at_minus_infinity) {
    std::size_t changes = 0;
    int prev = 0;
    for (const auto& q : chain) {
        const int s = sign_at(q, point, at_minus_infinity);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

std::size_t count_real_roots(const PolyQ& p, const Rat* lower, const Rat* upper) {
    if (p.is_zero()) throw DomainError("root count of the zero polynomial");
    // Square-free part keeps the Sturm chain well defined at repeated roots.
    const PolyQ g = gcd(p, p.derivative());
    const PolyQ sf = g.degree() > 0 ? divmod(p, g).first : p;
    std::vector<PolyQ> chain{sf, sf.derivative()};
    while (!chain.back().is_zero()) {
        PolyQ r = divmod(chain[chain.size() - 2], chain.back()).second;
        chain.push_back(-r);
    }
    chain.pop_back();
    const std::size_t at_low = sign_changes(chain, lower, true);
    const std::size_t at_high = sign_changes(chain, upper, false);
    return at_low - at_high;
}

}  // namespace fubini
