#pragma once

#include <deque>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "fubini/rat.hpp"

namespace fubini {

enum class StirlingKind { first_unsigned, second };

/**
 * Lazily grown Stirling triangle. Row n holds k = 0..n and is produced from
 * row n-1 by the defining recurrence; each row is built exactly once even
 * under concurrent readers. Rows live in a deque, so references returned by
 * row() stay valid while the triangle grows.
 */
class StirlingTriangle {
public:
    explicit StirlingTriangle(StirlingKind kind);

    StirlingKind kind() const { return kind_; }
    const std::vector<Int>& row(unsigned n) const;
    /// Zero when k > n.
    Int at(unsigned n, unsigned k) const;

private:
    void grow_to(unsigned n) const;

    StirlingKind kind_;
    mutable std::shared_mutex mutex_;
    mutable std::deque<std::vector<Int>> rows_;
};

/// Process-wide shared triangles.
const StirlingTriangle& stirling2_table();
const StirlingTriangle& stirling1_table();

Int stirling2(unsigned n, unsigned k);
Int stirling1_unsigned(unsigned n, unsigned k);
/// (-1)^(n+k) times the unsigned value; a view, not stored.
Int stirling1_signed(unsigned n, unsigned k);

Int binomial(unsigned n, unsigned k);
Int factorial(unsigned n);

/// sum_{k=j}^{m} S2(m,k) S1(k+1,j+1) (-1)^k, which equals (-1)^m C(m,j).
/// Throws DomainError when j > m.
Int lemma2_lhs(unsigned m, unsigned j);

/// (sum_k C(i,k) S2(k,j), S2(i+1,j+1)). The transposed sum
/// sum_k S2(i,k) C(k,j) is not equal in general: it is 2 at (2,0).
std::pair<Int, Int> stirling_cross_identity(unsigned i, unsigned j);

/// Entry (n, m) of the product of the signed first-kind and second-kind
/// Stirling matrices; the identity matrix when the two are inverse.
Int stirling_inverse_entry(unsigned n, unsigned m);

}  // namespace fubini
