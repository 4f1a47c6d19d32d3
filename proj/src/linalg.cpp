#include "mvdual/linalg.hpp"

#include <algorithm>
#include <cstddef>

namespace mvd {

namespace {

// Row echelon reduction in place; returns pivot columns.
std::vector<std::size_t> echelon(Mat& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && m[pr][c].sign() == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        Rat inv = Rat(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].sign() == 0) continue;
            Rat f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int rank(Mat m) { return static_cast<int>(echelon(m).size()); }

Rat det(Mat m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw domain_error("det: matrix not square");
    Rat d(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = c;
        while (pr < n && m[pr][c].sign() == 0) ++pr;
        if (pr == n) return Rat(0);
        if (pr != c) {
            std::swap(m[c], m[pr]);
            d = -d;
        }
        d *= m[c][c];
        Rat inv = Rat(1) / m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].sign() == 0) continue;
            Rat f = m[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    std::size_t rows = a.size();
    if (b.size() != rows) throw domain_error("solve: rhs size mismatch");
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    Mat aug(rows, Vec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = echelon(aug);
    // Inconsistent iff some pivot lands in the rhs column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vec x(cols, Rat(0));
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        // After full reduction each pivot row reads x_pivot = rhs directly.
        x[pivots[k]] = aug[k][cols];
    }
    return x;
}

std::vector<Vec> nullspace(const Mat& a) {
    if (a.empty()) return {};
    Mat m = a;
    std::size_t cols = m[0].size();
    auto pivots = echelon(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vec> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        Vec v(cols, Rat(0));
        v[fc] = Rat(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_convex_hull(const Vec& p, const std::vector<Vec>& pts) {
    if (pts.empty()) return false;
    std::size_t n = p.size();
    for (const auto& v : pts)
        if (v.size() != n) throw domain_error("in_convex_hull: dimension mismatch");
    std::size_t m = pts.size();
    std::size_t rows = n + 1;          // coordinates plus the sum-to-one row
    std::size_t total = m + rows;      // lambda columns plus artificials

    // Tableau rows: [lambda columns | artificial columns | rhs], rhs >= 0.
    Mat t(rows, Vec(total + 1, Rat(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        Rat rhs = i < n ? p[i] : Rat(1);
        for (std::size_t j = 0; j < m; ++j) t[i][j] = i < n ? pts[j][i] : Rat(1);
        bool flip = rhs.sign() < 0;
        if (flip) {
            for (std::size_t j = 0; j < m; ++j) t[i][j] = -t[i][j];
            rhs = -rhs;
        }
        t[i][m + i] = Rat(1);
        t[i][total] = rhs;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;

    // Reduced costs for minimizing the artificial sum.
    Vec red(total, Rat(0));
    Rat obj(0);
    for (std::size_t j = 0; j < m; ++j) {
        Rat s(0);
        for (std::size_t i = 0; i < rows; ++i) s += t[i][j];
        red[j] = -s;
    }
    for (std::size_t i = 0; i < rows; ++i) obj -= t[i][total];

    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j)
            if (red[j].sign() < 0) { enter = j; break; }  // Bland: smallest index
        if (enter == total) break;
        std::size_t leave = rows;
        Rat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter].sign() <= 0) continue;
            Rat ratio = t[i][total] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows) break;  // cannot happen: phase-1 objective is bounded
        Rat piv = t[leave][enter];
        for (std::size_t j = 0; j <= total; ++j) t[leave][j] = t[leave][j] / piv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter].sign() == 0) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j <= total; ++j) t[i][j] -= f * t[leave][j];
        }
        Rat rf = red[enter];
        for (std::size_t j = 0; j < total; ++j) red[j] -= rf * t[leave][j];
        obj -= rf * t[leave][total];
        basis[leave] = enter;
    }
    return obj.sign() == 0;
}

std::optional<Vec> barycentric(const std::vector<Vec>& verts, const Vec& p) {
    if (verts.empty()) throw domain_error("barycentric: no vertices");
    std::size_t n = p.size(), m = verts.size();
    Mat a(n + 1, Vec(m));
    Vec b(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = verts[j][i];
        b[i] = p[i];
    }
    for (std::size_t j = 0; j < m; ++j) a[n][j] = Rat(1);
    b[n] = Rat(1);
    return solve(a, b);
}

bool affine_independent(const std::vector<Point>& points) {
    if (points.empty()) return true;
    std::size_t n = points[0].size();
    for (const auto& q : points)
        if (q.size() != n) throw domain_error("affine_independent: dimension mismatch");
    return affine_dim(points) == static_cast<int>(points.size()) - 1;
}

int affine_dim(const std::vector<Point>& points) {
    if (points.empty()) return -1;
    Mat diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(vsub(points[i], points[0]));
    if (diffs.empty()) return 0;
    return rank(std::move(diffs));
}

}  // namespace mvd
