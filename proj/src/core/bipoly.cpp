#include "fubini/bipoly.hpp"

#include <algorithm>

namespace fubini {

BiPolyZ::BiPolyZ(std::vector<PolyZ> rows) : rows_(std::move(rows)) { trim(); }

BiPolyZ BiPolyZ::monomial(const Int& c, std::size_t i, std::size_t j) {
    std::vector<PolyZ> rows(i + 1);
    rows[i] = PolyZ::monomial(c, j);
    return BiPolyZ(std::move(rows));
}

void BiPolyZ::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BiPolyZ::degree_y() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

std::vector<std::vector<Int>> BiPolyZ::grid() const {
    const int cols = degree_y() + 1;
    std::vector<std::vector<Int>> out(rows_.size(), std::vector<Int>(static_cast<std::size_t>(std::max(cols, 0)), Int(0)));
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < rows_[i].coefficients().size(); ++j) out[i][j] = rows_[i].coefficients()[j];
    return out;
}

Rat BiPolyZ::eval(const Rat& x, const Rat& y) const {
    Rat acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + it->eval(y);
    return acc;
}

PolyQ BiPolyZ::eval_x(const Rat& x) const {
    PolyQ acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + to_rational(*it);
    return acc;
}

PolyZ BiPolyZ::eval_x(const Int& x) const {
    PolyZ acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BiPolyZ BiPolyZ::substitute_affine(const Int& ax, const Int& bx, const Int& ay, const Int& by) const {
    const PolyZ y_sub{by, ay};
    // Horner in x with the inner affine map lifted to a bivariate polynomial.
    const BiPolyZ x_sub(std::vector<PolyZ>{PolyZ::constant(bx), PolyZ::constant(ax)});
    BiPolyZ acc;
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) acc = acc * x_sub + from_y(it->compose(y_sub));
    return acc;
}

BiPolyZ BiPolyZ::operator-() const {
    std::vector<PolyZ> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(-r);
    return BiPolyZ(std::move(out));
}

BiPolyZ& BiPolyZ::operator+=(const BiPolyZ& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] += o.rows_[i];
    trim();
    return *this;
}

BiPolyZ& BiPolyZ::operator-=(const BiPolyZ& o) {
    if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
    for (std::size_t i = 0; i < o.rows_.size(); ++i) rows_[i] -= o.rows_[i];
    trim();
    return *this;
}

BiPolyZ operator*(const BiPolyZ& a, const BiPolyZ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<PolyZ> out(a.rows_.size() + b.rows_.size() - 1);
    for (std::size_t i = 0; i < a.rows_.size(); ++i) {
        if (a.rows_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
    }
    return BiPolyZ(std::move(out));
}

}  // namespace fubini
