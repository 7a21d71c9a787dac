#include "treeweights/linsys.hpp"

#include <algorithm>
#include <set>

namespace treeweights {

AffineSolutionSpace solve_exact(std::vector<std::vector<Rational>> matrix,
                                std::vector<Rational> rhs) {
    AffineSolutionSpace space;
    const int rows = static_cast<int>(matrix.size());
    if (rows == 0) {
        space.consistent = true;
        return space;
    }
    const int cols = static_cast<int>(matrix[0].size());

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int r = row; r < rows; ++r) {
            if (matrix[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(matrix[row], matrix[pivot]);
        std::swap(rhs[row], rhs[pivot]);
        const Rational inv = matrix[row][col];
        for (int c = col; c < cols; ++c) matrix[row][c] /= inv;
        rhs[row] /= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == row || matrix[r][col] == 0) continue;
            const Rational factor = matrix[r][col];
            for (int c = col; c < cols; ++c) {
                matrix[r][c] -= factor * matrix[row][c];
            }
            rhs[r] -= factor * rhs[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int r = row; r < rows; ++r) {
        if (rhs[r] != 0) return space;  // 0 = nonzero: inconsistent
    }
    space.consistent = true;

    std::set<int> pivot_cols(pivot_col_of_row.begin(), pivot_col_of_row.end());
    space.particular.assign(cols, Rational(0));
    for (int r = 0; r < row; ++r) {
        space.particular[pivot_col_of_row[r]] = rhs[r];
    }
    for (int col = 0; col < cols; ++col) {
        if (pivot_cols.count(col)) continue;
        std::vector<Rational> basis(cols, Rational(0));
        basis[col] = 1;
        for (int r = 0; r < row; ++r) {
            basis[pivot_col_of_row[r]] = -matrix[r][col];
        }
        space.null_basis.push_back(std::move(basis));
    }
    return space;
}

namespace {

// Inequality c[0] + sum_j c[j] t_j > 0.
using Ineq = std::vector<Rational>;

Ineq normalized(Ineq row) {
    for (std::size_t i = 1; i < row.size(); ++i) {
        if (row[i] == 0) continue;
        const Rational scale = abs(row[i]);
        for (auto& x : row) x /= scale;
        return row;
    }
    return row;
}

std::vector<Ineq> initial_inequalities(const AffineSolutionSpace& space) {
    const int dims = static_cast<int>(space.null_basis.size());
    std::vector<Ineq> rows;
    for (std::size_t i = 0; i < space.particular.size(); ++i) {
        Ineq row(dims + 1);
        row[0] = space.particular[i];
        for (int j = 0; j < dims; ++j) row[j + 1] = space.null_basis[j][i];
        rows.push_back(std::move(row));
    }
    return rows;
}

// Fourier-Motzkin elimination of variable `var` (1-based position in rows).
std::vector<Ineq> eliminate(const std::vector<Ineq>& rows, int var) {
    std::vector<Ineq> lowers, uppers;
    std::set<Ineq> kept;
    for (const Ineq& row : rows) {
        if (row[var] > 0) lowers.push_back(row);
        else if (row[var] < 0) uppers.push_back(row);
        else {
            Ineq shrunk = row;
            shrunk.erase(shrunk.begin() + var);
            kept.insert(normalized(std::move(shrunk)));
        }
    }
    for (const Ineq& lo : lowers) {
        for (const Ineq& up : uppers) {
            // t > -rest(lo)/lo[var] and t < -rest(up)/up[var] combine into
            // a strict inequality without t.
            Ineq combined(lo.size());
            const Rational a = lo[var];
            const Rational b = -up[var];
            for (std::size_t i = 0; i < lo.size(); ++i) {
                combined[i] = lo[i] * b + up[i] * a;
            }
            combined.erase(combined.begin() + var);
            kept.insert(normalized(std::move(combined)));
        }
    }
    return {kept.begin(), kept.end()};
}

bool all_constants_positive(const std::vector<Ineq>& rows) {
    for (const Ineq& row : rows) {
        if (row[0] <= 0) return false;
    }
    return true;
}

}  // namespace

bool has_positive_point(const AffineSolutionSpace& space) {
    if (!space.consistent) return false;
    std::vector<Ineq> rows = initial_inequalities(space);
    for (int var = static_cast<int>(space.null_basis.size()); var >= 1; --var) {
        rows = eliminate(rows, var);
    }
    return all_constants_positive(rows);
}

std::optional<std::vector<Rational>> positive_point(
    const AffineSolutionSpace& space) {
    if (!space.consistent) return std::nullopt;
    const int dims = static_cast<int>(space.null_basis.size());

    std::vector<std::vector<Ineq>> levels(dims + 1);
    levels[dims] = initial_inequalities(space);
    for (int var = dims; var >= 1; --var) {
        levels[var - 1] = eliminate(levels[var], var);
    }
    if (!all_constants_positive(levels[0])) return std::nullopt;

    // Back-substitute: at level j only t_1..t_j appear; t_1..t_{j-1} are
    // already fixed, leaving an open interval for t_j. Midpoints keep the
    // choice strictly interior.
    std::vector<Rational> t(dims + 1, Rational(0));
    for (int j = 1; j <= dims; ++j) {
        bool has_low = false, has_high = false;
        Rational low = 0, high = 0;
        for (const Ineq& row : levels[j]) {
            Rational rest = row[0];
            for (int i = 1; i < j; ++i) rest += row[i] * t[i];
            if (row[j] == 0) continue;
            const Rational bound = -rest / row[j];
            if (row[j] > 0) {
                if (!has_low || bound > low) low = bound;
                has_low = true;
            } else {
                if (!has_high || bound < high) high = bound;
                has_high = true;
            }
        }
        if (has_low && has_high) t[j] = (low + high) / 2;
        else if (has_low) t[j] = low + 1;
        else if (has_high) t[j] = high - 1;
        else t[j] = 0;
    }

    std::vector<Rational> point = space.particular;
    for (int j = 0; j < dims; ++j) {
        for (std::size_t i = 0; i < point.size(); ++i) {
            point[i] += t[j + 1] * space.null_basis[j][i];
        }
    }
    for (const Rational& x : point) {
        if (x <= 0) return std::nullopt;
    }
    return point;
}

}  // namespace treeweights
