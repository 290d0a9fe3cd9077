#pragma once

#include "hgd/hypergraph.hpp"
#include "hgd/rational.hpp"

#include <vector>

namespace hgd {

enum class WeightKind { Integral, Fractional };

// Map from edges to exact rationals in [0,1]. Integral weightings are the
// 0/1 special case; lambda and gamma of the decomposition definitions both
// live here. Only positive weights are stored, sorted by edge index.
class EdgeWeighting {
public:
    EdgeWeighting() : kind_(WeightKind::Integral) {}

    static EdgeWeighting integral(std::vector<std::size_t> support);
    // entries: (edge index, weight), weights must lie in (0,1]
    static EdgeWeighting fractional(std::vector<std::pair<std::size_t, Rational>> entries);

    WeightKind kind() const { return kind_; }
    bool is_integral_values() const;

    const std::vector<std::pair<std::size_t, Rational>> & entries() const { return entries_; }

    Rational weight_of(std::size_t edge) const;
    Rational total_weight() const;

    std::vector<std::size_t> support() const;
    // edges with weight exactly 1
    std::vector<std::size_t> integral_part() const;

    void set_kind(WeightKind k) { kind_ = k; }

private:
    WeightKind kind_;
    std::vector<std::pair<std::size_t, Rational>> entries_;
};

// B(theta): vertices whose incident weight sums to >= 1, exact comparison
VertexSet coverage(const Hypergraph & h, const EdgeWeighting & theta);

} // namespace hgd
