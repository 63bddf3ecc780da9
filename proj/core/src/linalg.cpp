#include "gn2/linalg.hpp"

#include <cstddef>

namespace gn2 {

namespace {

// Row-reduce in place over Q, returning pivot columns. Standard Gaussian
// elimination; exact because entries are mpq.
std::vector<int> reduce(QMat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        const Rat inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

}  // namespace

int matrix_rank(const QMat& m) {
    if (m.empty() || m[0].empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();

    // Clear denominators row by row, then run Bareiss on the integer matrix.
    std::vector<IVec> a(rows, IVec(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            Int d = m[i][j].get_den();
            l = l / gcd(l, d) * d;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat v = m[i][j] * Rat(l);
            a[i][j] = v.get_num();
        }
    }

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

bool solve_square(QMat a, QVec b, QVec& x) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    const std::vector<int> pivots = reduce(a);
    if (pivots.size() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] == static_cast<int>(n)) return false;
    x.assign(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return true;
}

QMat kernel_basis(QMat a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    const std::vector<int> pivots = reduce(a);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;

    QMat basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        QVec v(cols, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<IVec> integer_kernel(const QMat& a) {
    if (a.empty()) return {};
    const std::size_t rows = a.size(), cols = a[0].size();

    std::vector<IVec> m(rows, IVec(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < cols; ++j) {
            Int d = a[i][j].get_den();
            l = l / gcd(l, d) * d;
        }
        for (std::size_t j = 0; j < cols; ++j) {
            Rat v = a[i][j] * Rat(l);
            m[i][j] = v.get_num();
        }
    }

    // Column elimination by unimodular operations: m*u keeps track of u.
    // Columns of u whose image column becomes zero form a saturated basis
    // of the integer kernel.
    std::vector<IVec> u(cols, IVec(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
    // u is stored column-major: u[j] is the j-th column of the accumulated
    // unimodular matrix.

    std::size_t lead = 0;
    for (std::size_t i = 0; i < rows && lead < cols; ++i) {
        // Euclidean sweep: make all entries of row i beyond `lead` zero.
        while (true) {
            std::size_t nonzero = cols;
            for (std::size_t j = lead; j < cols; ++j)
                if (m[i][j] != 0) { nonzero = j; break; }
            if (nonzero == cols) break;  // row already clear
            // Find the entry of minimal absolute value to pivot on.
            std::size_t p = nonzero;
            for (std::size_t j = nonzero + 1; j < cols; ++j) {
                if (m[i][j] != 0 && cmp(abs(m[i][j]), abs(m[i][p])) < 0) p = j;
            }
            if (p != lead) {
                for (std::size_t r = 0; r < rows; ++r) std::swap(m[r][p], m[r][lead]);
                std::swap(u[p], u[lead]);
            }
            bool done = true;
            for (std::size_t j = lead + 1; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Int q = m[i][j] / m[i][lead];
                if (q != 0) {
                    for (std::size_t r = 0; r < rows; ++r) m[r][j] -= q * m[r][lead];
                    for (std::size_t r = 0; r < cols; ++r) u[j][r] -= q * u[lead][r];
                }
                if (m[i][j] != 0) done = false;
            }
            if (done) break;
        }
        if (m[i][lead] != 0) ++lead;
    }

    std::vector<IVec> basis;
    for (std::size_t j = 0; j < cols; ++j) {
        bool zero = true;
        for (std::size_t i = 0; i < rows; ++i)
            if (m[i][j] != 0) { zero = false; break; }
        if (zero) basis.push_back(u[j]);
    }
    return basis;
}

int affine_dim(const std::vector<QVec>& points) {
    if (points.empty()) return -1;
    QMat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        QVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    if (diffs.empty()) return 0;
    return matrix_rank(diffs);
}

}  // namespace gn2
