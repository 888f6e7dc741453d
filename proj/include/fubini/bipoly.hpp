#pragma once

#include <cstddef>
#include <vector>

#include "fubini/poly.hpp"

namespace fubini {

/**
 * Dense integer polynomial in x and y. Row i holds the coefficient of x^i
 * as a canonical PolyZ in y; trailing zero rows are trimmed, so the zero
 * polynomial has no rows.
 */
class BiPolyZ {
public:
    BiPolyZ() = default;
    explicit BiPolyZ(std::vector<PolyZ> rows);

    static BiPolyZ from_y(const PolyZ& p) { return BiPolyZ({p}); }
    /// c * x^i * y^j
    static BiPolyZ monomial(const Int& c, std::size_t i, std::size_t j);

    bool is_zero() const { return rows_.empty(); }
    int degree_x() const { return static_cast<int>(rows_.size()) - 1; }
    int degree_y() const;
    const std::vector<PolyZ>& rows() const { return rows_; }
    PolyZ row(std::size_t i) const { return i < rows_.size() ? rows_[i] : PolyZ{}; }
    Int coeff(std::size_t i, std::size_t j) const { return row(i).coeff(j); }

    /// Rectangular coefficient grid c[i][j] of x^i y^j, zero-padded.
    std::vector<std::vector<Int>> grid() const;

    Rat eval(const Rat& x, const Rat& y) const;
    /// Fixes x and returns the polynomial in y.
    PolyQ eval_x(const Rat& x) const;
    /// Integer specialisation that stays in Z.
    PolyZ eval_x(const Int& x) const;

    /// F(ax*x + bx, ay*y + by).
    BiPolyZ substitute_affine(const Int& ax, const Int& bx, const Int& ay, const Int& by) const;

    BiPolyZ operator-() const;
    BiPolyZ& operator+=(const BiPolyZ& o);
    BiPolyZ& operator-=(const BiPolyZ& o);
    friend BiPolyZ operator+(BiPolyZ a, const BiPolyZ& b) { return a += b; }
    friend BiPolyZ operator-(BiPolyZ a, const BiPolyZ& b) { return a -= b; }
    friend BiPolyZ operator*(const BiPolyZ& a, const BiPolyZ& b);
    friend bool operator==(const BiPolyZ& a, const BiPolyZ& b) { return a.rows_ == b.rows_; }

private:
    void trim();
    std::vector<PolyZ> rows_;
};

}  // namespace fubini
