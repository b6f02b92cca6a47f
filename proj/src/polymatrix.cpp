#include "extactic/polymatrix.hpp"

#include "extactic/error.hpp"

namespace extactic {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const VarsPtr& vars)
    : rows_(rows), cols_(cols), vars_(vars), entries_(rows * cols, MultiPoly(vars)) {}

namespace {

MultiPoly det_bareiss(const PolyMatrix& m) {
    std::size_t n = m.rows();
    std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n, MultiPoly(m.vars())));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    int sign = 1;
    MultiPoly prev = MultiPoly::constant(m.vars(), Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return MultiPoly::zero(m.vars());
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = exact_div(num, prev); // Bareiss division is exact by construction
            }
            a[i][k] = MultiPoly::zero(m.vars());
        }
        prev = a[k][k];
    }
    MultiPoly d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

} // namespace

MultiPoly det(const PolyMatrix& m, const DetOptions& options) {
    if (m.rows() != m.cols()) throw InputError("det: non-square matrix");
    if (m.rows() > options.size_cap) throw InputError("det: size cap exceeded");
    if (m.rows() == 0) return MultiPoly::constant(m.vars(), Rational(1));
    if (options.algorithm == DetAlgorithm::Cofactor) {
        std::vector<std::vector<MultiPoly>> rows(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) rows[i].push_back(m.at(i, j));
        return det_subsets(MultiPolyRing{m.vars()}, rows);
    }
    return det_bareiss(m);
}

} // namespace extactic
