#pragma once

#include "hgd/rational.hpp"

#include <cstddef>
#include <vector>

namespace hgd {

// one constraint: sum coeff_j * x_j >= rhs
struct LpRow {
    std::vector<std::pair<std::size_t, Rational>> coeffs;
    Rational rhs;
};

struct LpResult {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    Rational value;
    std::vector<Rational> solution;
};

// minimize costs . x subject to the rows and x >= 0, exact rational
// two-phase simplex with Bland's anti-cycling rule (deterministic).
// Covering programs are bounded below by 0, so unboundedness cannot occur
// for non-negative costs.
LpResult solve_min_lp(std::size_t num_vars, const std::vector<Rational> & costs,
        const std::vector<LpRow> & rows);

} // namespace hgd
