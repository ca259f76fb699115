#include "valinv/linalg.hpp"

#include "valinv/error.hpp"

namespace valinv {

RowEchelon rref(RMatrix m) {
    RowEchelon out;
    if (m.empty()) return out;
    const std::size_t cols = m.front().size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        out.pivots.push_back(col);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const RMatrix& m) { return rref(m).rows.size(); }

Rational determinant(RMatrix m) {
    const std::size_t n = m.size();
    for (const auto& r : m)
        if (r.size() != n) fail(ErrorKind::domain, "determinant of a non-square matrix");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

std::optional<RVector> solve(const RMatrix& a, const RVector& b) {
    if (a.size() != b.size()) fail(ErrorKind::domain, "solve: row count mismatch");
    if (a.empty()) return RVector{};
    const std::size_t cols = a.front().size();
    RMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    RowEchelon e = rref(std::move(aug));
    RVector x(cols, Rational(0));
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        if (e.pivots[i] == cols) return std::nullopt;  // 0 = nonzero
        x[e.pivots[i]] = e.rows[i][cols];
    }
    return x;
}

RMatrix nullspace(const RMatrix& a, std::size_t cols) {
    RowEchelon e = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    RMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RVector v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < e.rows.size(); ++i) v[e.pivots[i]] = -e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_row_span(const RVector& v, const RMatrix& rows) {
    if (rows.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    RMatrix ext = rows;
    ext.push_back(v);
    return rank(ext) == rank(rows);
}

int affine_dimension(const std::vector<RVector>& points) {
    if (points.empty()) return -1;
    RMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RVector d(points[i].size());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = points[i][k] - points[0][k];
        diffs.push_back(std::move(d));
    }
    return diffs.empty() ? 0 : static_cast<int>(rank(diffs));
}

}  // namespace valinv
