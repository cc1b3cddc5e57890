#include "cdybe/linalg.hpp"

#include <cassert>
#include <numeric>

namespace cdybe {

Mat mat_identity(int n) {
    Mat m(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    int k = n ? static_cast<int>(a[0].size()) : 0;
    int p = k ? static_cast<int>(b[0].size()) : 0;
    Mat r(n, Vec(p, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < k; ++j) {
            if (a[i][j] == 0) continue;
            for (int l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
        }
    return r;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    Vec r(a.size(), Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
    return r;
}

Mat mat_transpose(const Mat& a) {
    if (a.empty()) return a;
    Mat r(a[0].size(), Vec(a.size(), Rat(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

bool mat_is_zero(const Mat& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

Rat dot(const Vec& a, const Vec& b) {
    Rat r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Rat& c) {
    Vec r = a;
    for (auto& x : r) x *= c;
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b[i];
    return r;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = static_cast<int>(m.size());
    int cols = static_cast<int>(m[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Rat inv = Rat(1) / m[r][c];
        for (int j = c; j < cols; ++j) m[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(Mat m) { return static_cast<int>(rref(m).size()); }

std::optional<Mat> mat_inverse(const Mat& a) {
    int n = static_cast<int>(a.size());
    Mat aug(n, Vec(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) != n || piv.back() != n - 1) return std::nullopt;
    Mat inv(n, Vec(n, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::vector<Vec> nullspace(const Mat& a) {
    if (a.empty()) return {};
    Mat m = a;
    int cols = static_cast<int>(m[0].size());
    auto piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

LinearSolution solve_linear(const Mat& a, const Vec& b) {
    LinearSolution sol;
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    if (rows == 0) {
        sol.consistent = true;
        sol.particular = Vec(cols, Rat(0));
        sol.kernel = nullspace(Mat(1, Vec(cols, Rat(0))));
        return sol;
    }
    Mat aug(rows, Vec(cols + 1, Rat(0)));
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return sol;  // inconsistent
    sol.consistent = true;
    sol.particular = Vec(cols, Rat(0));
    for (std::size_t r = 0; r < piv.size(); ++r) sol.particular[piv[r]] = aug[r][cols];
    std::vector<bool> is_piv(cols, false);
    for (int c : piv) is_piv[c] = true;
    for (int c = 0; c < cols; ++c) {
        if (is_piv[c]) continue;
        Vec v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -aug[r][c];
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

std::vector<std::vector<long>> lattice_basis(std::vector<std::vector<long>> rows) {
    if (rows.empty()) return {};
    std::size_t cols = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        // gcd-reduce column c below row r
        while (true) {
            std::size_t piv = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i)
                if (rows[i][c] != 0 && (piv == rows.size() ||
                                        std::abs(rows[i][c]) < std::abs(rows[piv][c])))
                    piv = i;
            if (piv == rows.size()) break;
            std::swap(rows[r], rows[piv]);
            bool clean = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                long q = rows[i][c] / rows[r][c];
                for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[r][j];
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] != 0) {
            if (rows[r][c] < 0)
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] = -rows[r][j];
            ++r;
        }
    }
    rows.resize(r);
    return rows;
}

}  // namespace cdybe
