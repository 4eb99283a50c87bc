#include "dyck/polynomials.hpp"

#include <mutex>
#include <string>

#include "dyck/catalan.hpp"
#include "dyck/error.hpp"

namespace dyck {

PolyMatrix::PolyMatrix() : rows_{{BigInt(1)}, {BigInt(1)}} {}

void PolyMatrix::ensure(std::size_t j) const {
    {
        std::shared_lock lock(mutex_);
        if (j < rows_.size())
            return;
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= j) {
        const std::size_t row = rows_.size();
        const auto& prev = rows_[row - 1];
        const auto& prev2 = rows_[row - 2];
        std::vector<BigInt> next(row / 2 + 1);
        next[0] = 1;
        for (std::size_t k = 1; k < next.size(); ++k) {
            next[k] = k < prev.size() ? prev[k] : BigInt(0);
            next[k] -= prev2[k - 1];
        }
        rows_.push_back(std::move(next));
    }
}

std::vector<BigInt> PolyMatrix::coefficients(std::size_t j) const {
    ensure(j);
    std::shared_lock lock(mutex_);
    return rows_[j];
}

BigInt PolyMatrix::coefficient(std::size_t j, std::size_t k) const {
    ensure(j);
    std::shared_lock lock(mutex_);
    return k < rows_[j].size() ? rows_[j][k] : BigInt(0);
}

BigInt PolyMatrix::evaluate(std::size_t j, std::size_t n) const {
    if (j > n)
        throw DomainError("p_" + std::to_string(j) + "(" + std::to_string(n) +
                          ") has no triangle node: unbalance exceeds the isoline");
    const auto coeffs = coefficients(j);
    const auto& cat = CatalanTable::shared();
    BigInt total = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        total += coeffs[k] * cat.value(n - k);
    return total;
}

PolyMatrix& PolyMatrix::shared() {
    static PolyMatrix matrix;
    return matrix;
}

std::vector<BigInt> poly_coefficients(std::size_t j) {
    return PolyMatrix::shared().coefficients(j);
}

BigInt poly_eval(std::size_t j, std::size_t n) {
    return PolyMatrix::shared().evaluate(j, n);
}

BigInt dynamics_poly(std::size_t i, std::size_t j) {
    const Node node{i, j};
    if (!node.reachable())
        return 0;
    return poly_eval(j, node.isoline());
}

std::string_view to_string(SegmentLabel label) noexcept {
    switch (label) {
    case SegmentLabel::Main: return "main";
    case SegmentLabel::Difference: return "difference";
    case SegmentLabel::Dead: return "dead";
    case SegmentLabel::Outside: return "outside";
    }
    return "?";
}

namespace {

void require_interior(Node x) {
    if (!x.reachable() || !(x.i > x.j && x.j > 0))
        throw DomainError("segment target (" + std::to_string(x.i) + ", " + std::to_string(x.j) +
                          ") must be a reachable interior node with i > j > 0");
}

SegmentLabel classify(Node node, Node x) {
    const std::size_t base = x.i + x.j;
    if (!node.reachable() || node.i + node.j > base)
        return SegmentLabel::Outside;
    if (node.i <= x.i) {
        const std::size_t reach = x.i - node.i;
        const std::size_t gap = node.j > x.j ? node.j - x.j : x.j - node.j;
        if (gap <= reach)
            return SegmentLabel::Main;
    }
    return node.i >= x.i ? SegmentLabel::Difference : SegmentLabel::Dead;
}

} // namespace

SegmentLabel segment_of(Node node, Node x) {
    require_interior(x);
    return classify(node, x);
}

SegmentSummary summarize_segments(Node x) {
    require_interior(x);
    SegmentSummary out;
    out.x = x;
    out.height = x.isoline();
    const std::size_t base = 2 * out.height;
    for (std::size_t i = 0; i <= base; ++i) {
        for (std::size_t j = i % 2; j <= i && i + j <= base; j += 2) {
            switch (classify({i, j}, x)) {
            case SegmentLabel::Main: ++out.main; break;
            case SegmentLabel::Difference: ++out.difference; break;
            case SegmentLabel::Dead:
                ++out.dead;
                if (!out.wedge_top || j > out.wedge_top->j)
                    out.wedge_top = Node{i, j};
                break;
            case SegmentLabel::Outside: break;
            }
        }
    }
    return out;
}

} // namespace dyck
