#pragma once

#include <cstddef>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <vector>

#include "dyck/bigint.hpp"
#include "dyck/triangle.hpp"

namespace dyck {

/// Coefficient matrix of the Dyck polynomials p_j(n) = sum_k a[j][k] c_{n-k},
/// indexed by depth k (coefficient of c_{n-k}), 0 <= k <= j/2.
///
/// Rows 0 and 1 are [1]; for j > 1, a[j][0] = 1 and
/// a[j][k] = a[j-1][k] - a[j-2][k-1]. Grows append-only under a lock.
class PolyMatrix {
public:
    PolyMatrix();

    std::vector<BigInt> coefficients(std::size_t j) const;
    /// a[j][k]; 0 outside the stored band.
    BigInt coefficient(std::size_t j, std::size_t k) const;

    /// p_j(n). Requires j <= n, otherwise DomainError.
    BigInt evaluate(std::size_t j, std::size_t n) const;

    static PolyMatrix& shared();

private:
    void ensure(std::size_t j) const;

    mutable std::shared_mutex mutex_;
    mutable std::vector<std::vector<BigInt>> rows_;
};

std::vector<BigInt> poly_coefficients(std::size_t j);
BigInt poly_eval(std::size_t j, std::size_t n);

/// d_{i,j} through p_j((i + j) / 2); 0 for unreachable nodes.
BigInt dynamics_poly(std::size_t i, std::size_t j);

/// Role of a node relative to an interior target x inside x's supporting
/// triangle (height n_x = (i_x + j_x) / 2).
///
/// Main: the backward cone of x under the forward recurrence; x itself is
/// Main. Difference: nodes with i >= i_x and i + j <= 2 n_x (the closure of
/// the top-point recurrence, grounded on rows 0 and 1), minus x. Dead: the
/// remaining reachable nodes of the supporting triangle. Outside: anything
/// unreachable or beyond the triangle.
enum class SegmentLabel { Main, Difference, Dead, Outside };

std::string_view to_string(SegmentLabel label) noexcept;

/// Throws DomainError unless x is reachable with i_x > j_x > 0.
SegmentLabel segment_of(Node node, Node x);

struct SegmentSummary {
    Node x;
    std::size_t height = 0;
    std::size_t main = 0;
    std::size_t difference = 0;
    std::size_t dead = 0;
    /// Dead node of largest unbalance, present iff j_x > 2.
    std::optional<Node> wedge_top;
};

SegmentSummary summarize_segments(Node x);

} // namespace dyck
