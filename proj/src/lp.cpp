#include "coverdyn/lp.hpp"

#include <stdexcept>

namespace coverdyn {

// Phase-1 simplex with Bland's rule on the system
//   (I - B) v + s = 0,   sum(v) + t = 1,   v, s, t >= 0,   minimize t.
// The slacks give a feasible starting basis for the homogeneous rows, so t
// is the only artificial variable.
std::optional<std::vector<Rat>> expansion_witness(const RatMatrix& b) {
    const std::size_t n = b.n;
    if (n == 0) return std::nullopt;

    const std::size_t cols = 2 * n + 1;  // v..., s..., t
    const std::size_t t_col = 2 * n;
    const std::size_t rows = n + 1;

    std::vector<std::vector<Rat>> tab(rows, std::vector<Rat>(cols, Rat(0)));
    std::vector<Rat> rhs(rows, Rat(0));
    std::vector<std::size_t> basis(rows);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) tab[i][j] = (i == j ? Rat(1) : Rat(0)) - b.at(i, j);
        tab[i][n + i] = 1;
        basis[i] = n + i;
    }
    for (std::size_t j = 0; j < n; ++j) tab[n][j] = 1;
    tab[n][t_col] = 1;
    rhs[n] = 1;
    basis[n] = t_col;

    // Reduced costs for minimizing t; only the t row carries cost 1.
    std::vector<Rat> obj(cols, Rat(0));
    for (std::size_t j = 0; j < cols; ++j) obj[j] = (j == t_col ? Rat(1) : Rat(0)) - tab[n][j];

    while (true) {
        std::size_t entering = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (obj[j] < 0) {
                entering = j;
                break;
            }
        if (entering == cols) break;

        std::size_t leaving = rows;
        Rat best_ratio = 0;
        for (std::size_t r = 0; r < rows; ++r) {
            if (tab[r][entering] <= 0) continue;
            Rat ratio = rhs[r] / tab[r][entering];
            if (leaving == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leaving])) {
                leaving = r;
                best_ratio = ratio;
            }
        }
        if (leaving == rows)
            throw std::logic_error("unbounded pivot in a bounded feasibility problem");

        Rat pivot = tab[leaving][entering];
        for (auto& cell : tab[leaving]) cell /= pivot;
        rhs[leaving] /= pivot;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leaving || tab[r][entering] == 0) continue;
            Rat factor = tab[r][entering];
            for (std::size_t j = 0; j < cols; ++j) tab[r][j] -= factor * tab[leaving][j];
            rhs[r] -= factor * rhs[leaving];
        }
        if (obj[entering] != 0) {
            Rat factor = obj[entering];
            for (std::size_t j = 0; j < cols; ++j) obj[j] -= factor * tab[leaving][j];
        }
        basis[leaving] = entering;
    }

    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] == t_col && rhs[r] > 0) return std::nullopt;

    std::vector<Rat> witness(n, Rat(0));
    for (std::size_t r = 0; r < rows; ++r)
        if (basis[r] < n) witness[basis[r]] = rhs[r];
    return witness;
}

}  // namespace coverdyn
