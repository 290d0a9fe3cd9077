#include "hgd/simplex.hpp"

#include <cassert>

namespace hgd {

namespace {

// dense tableau; columns: num_vars structurals, m surplus, m artificials
class Tableau {
public:
    Tableau(std::size_t num_vars, const std::vector<LpRow> & rows) :
        n_(num_vars),
        m_(rows.size()),
        cols_(num_vars + 2 * rows.size()),
        a_(rows.size(), std::vector<Rational>(num_vars + 2 * rows.size())),
        rhs_(rows.size()),
        basis_(rows.size())
    {
        for (std::size_t i = 0; i < m_; ++i) {
            Rational sign = rows[i].rhs < Rational(0) ? Rational(-1) : Rational(1);
            for (const auto & [j, c] : rows[i].coeffs)
                a_[i][j] += sign * c;
            a_[i][n_ + i] = sign * Rational(-1); // surplus
            a_[i][n_ + m_ + i] = Rational(1);    // artificial
            rhs_[i] = sign * rows[i].rhs;
            basis_[i] = n_ + m_ + i;
        }
    }

    std::size_t artificial_begin() const { return n_ + m_; }

    // returns objective value at termination
    Rational run(const std::vector<Rational> & costs, bool allow_artificials)
    {
        while (true) {
            std::vector<Rational> y = dual_prices(costs);
            std::size_t entering = cols_;
            std::size_t limit = allow_artificials ? cols_ : artificial_begin();
            for (std::size_t j = 0; j < limit; ++j) {
                if (in_basis(j))
                    continue;
                Rational reduced = costs[j];
                for (std::size_t i = 0; i < m_; ++i)
                    reduced -= y[i] * a_[i][j];
                if (reduced < Rational(0)) {
                    entering = j; // Bland: lowest index
                    break;
                }
            }
            if (entering == cols_)
                break;

            std::size_t leaving = m_;
            Rational best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (a_[i][entering] > Rational(0)) {
                    Rational ratio = rhs_[i] / a_[i][entering];
                    if (leaving == m_ || ratio < best_ratio ||
                            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                        leaving = i;
                        best_ratio = ratio;
                    }
                }
            }
            assert(leaving != m_); // covering objectives are bounded
            pivot(leaving, entering);
        }
        Rational obj;
        for (std::size_t i = 0; i < m_; ++i)
            obj += costs[basis_[i]] * rhs_[i];
        return obj;
    }

    // pivot artificials out of the basis; drop redundant rows
    void purge_artificials()
    {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < artificial_begin())
                continue;
            std::size_t col = cols_;
            for (std::size_t j = 0; j < artificial_begin(); ++j) {
                if (a_[i][j] != Rational(0)) {
                    col = j;
                    break;
                }
            }
            if (col != cols_)
                pivot(i, col);
            // else: redundant row, harmless to keep with its artificial at 0
        }
    }

    std::vector<Rational> extract(std::size_t count) const
    {
        std::vector<Rational> x(count);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < count)
                x[basis_[i]] = rhs_[i];
        return x;
    }

private:
    bool in_basis(std::size_t j) const
    {
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] == j)
                return true;
        return false;
    }

    std::vector<Rational> dual_prices(const std::vector<Rational> & costs) const
    {
        // basis columns stay an identity under full-tableau pivoting, so the
        // reduced cost of basic column i is read off directly
        std::vector<Rational> y(m_);
        for (std::size_t i = 0; i < m_; ++i)
            y[i] = costs[basis_[i]];
        return y;
    }

    void pivot(std::size_t row, std::size_t col)
    {
        Rational p = a_[row][col];
        for (auto & v : a_[row])
            v /= p;
        rhs_[row] /= p;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row)
                continue;
            Rational f = a_[i][col];
            if (f.is_zero())
                continue;
            for (std::size_t j = 0; j < cols_; ++j)
                a_[i][j] -= f * a_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        basis_[row] = col;
    }

    std::size_t n_, m_, cols_;
    std::vector<std::vector<Rational>> a_;
    std::vector<Rational> rhs_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpResult solve_min_lp(std::size_t num_vars, const std::vector<Rational> & costs,
        const std::vector<LpRow> & rows)
{
    LpResult res;
    if (rows.empty()) {
        res.status = LpResult::Status::Optimal;
        res.solution.assign(num_vars, Rational(0));
        return res;
    }

    Tableau t(num_vars, rows);
    std::size_t cols = num_vars + 2 * rows.size();

    std::vector<Rational> phase1(cols);
    for (std::size_t j = t.artificial_begin(); j < cols; ++j)
        phase1[j] = Rational(1);
    if (t.run(phase1, true) > Rational(0))
        return res; // infeasible

    t.purge_artificials();

    std::vector<Rational> phase2(cols);
    for (std::size_t j = 0; j < num_vars; ++j)
        phase2[j] = costs[j];
    res.value = t.run(phase2, false);
    res.solution = t.extract(num_vars);
    res.status = LpResult::Status::Optimal;
    return res;
}

} // namespace hgd
