#ifndef YBFORGE_TESTS_SUPPORT_HPP
#define YBFORGE_TESTS_SUPPORT_HPP

#include <ybforge/ybforge.hpp>

#include <functional>
#include <random>

namespace ybtest {

using ybforge::Mat;
using ybforge::Rat;
using ybforge::VecQ;
using ybforge::WMode;

/// Small random rational num/den with |num| <= span, 1 <= den <= 3.
inline Rat random_rat(std::mt19937_64& rng, int span = 3)
{
    std::uniform_int_distribution<int> num(-span, span), den(1, 3);
    Rat r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

inline Mat random_mat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span = 3)
{
    Mat m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rat(rng, span);
    return m;
}

inline VecQ random_vec(std::mt19937_64& rng, std::size_t dim, int span = 3)
{
    VecQ v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = random_rat(rng, span);
    return v;
}

/// Textbook triple loop, independent of the sparse product under test.
inline Mat naive_mul(const Mat& a, const Mat& b)
{
    Mat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Rat s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

/// Rank by plain Gaussian elimination on a copy, pivoting on the largest
/// |entry| in the column (a different pivot rule from the library's).
inline std::size_t oracle_rank(std::vector<VecQ> rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().dim();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t best = r;
        for (std::size_t i = r; i < rows.size(); ++i)
            if (abs(rows[i][c]) > abs(rows[best][c])) best = i;
        if (sgn(rows[best][c]) == 0) continue;
        std::swap(rows[r], rows[best]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (sgn(rows[i][c]) == 0) continue;
            const Rat f = rows[i][c] / rows[r][c];
            for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    return r;
}

inline VecQ tensor4(const VecQ& a, const VecQ& b, const VecQ& c, const VecQ& d)
{
    const std::size_t n = a.dim();
    VecQ v(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) v[((i * n + j) * n + k) * n + l] = a[i] * b[j] * c[k] * d[l];
    return v;
}

/// All x with coordinates in {0, ..., size-1}^n.
inline std::vector<VecQ> grid_points(std::size_t n, int size)
{
    std::vector<VecQ> out;
    std::vector<int> idx(n, 0);
    while (true) {
        VecQ x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = idx[i];
        out.push_back(x);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < size) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

using Product = std::function<VecQ(const VecQ&, const VecQ&)>;

/// G(v1 (x) v2 (x) v3 (x) v4) = ((v1 v2) v3) v4 - (v1 v2)(v3 v4) on a pure tensor.
inline VecQ g_pure(const Product& m, const VecQ& v1, const VecQ& v2, const VecQ& v3, const VecQ& v4)
{
    const VecQ p = m(v1, v2);
    return m(m(p, v3), v4) - m(p, m(v3, v4));
}

/// G on the raw pattern families, x over a grid and y over the basis.
inline bool brute_force_w(const Product& m, std::size_t n, WMode mode)
{
    for (const auto& x : grid_points(n, 4))
        for (std::size_t j = 0; j < n; ++j) {
            const VecQ y = VecQ::basis(n, j);
            const VecQ p0 = g_pure(m, y, x, x, x), p1 = g_pure(m, x, y, x, x), p2 = g_pure(m, x, x, y, x),
                       p3 = g_pure(m, x, x, x, y);
            switch (mode) {
            case WMode::pattern3:
                if (!p2.is_zero()) return false;
                break;
            case WMode::symmetrized:
                if (!(p0 + p1 + p2 + p3).is_zero()) return false;
                break;
            case WMode::full:
                if (!p0.is_zero() || !p1.is_zero() || !p2.is_zero() || !p3.is_zero()) return false;
                break;
            }
        }
    return true;
}

inline Product sym2_oracle()
{
    return [](const VecQ& a, const VecQ& b) {
        const Mat x{{a[0], a[2]}, {a[2], a[1]}}, y{{b[0], b[2]}, {b[2], b[1]}};
        const Mat s = Rat(1, 2) * (naive_mul(x, y) + naive_mul(y, x));
        return VecQ{s(0, 0), s(1, 1), s(0, 1)};
    };
}

/// Braid defect of R applied to v by explicit slot action, no lifts.
inline VecQ braid_defect_oracle(const ybforge::LinOp2& r, const VecQ& v)
{
    const std::size_t n = r.n;
    auto act = [&](const VecQ& x, bool first) {
        VecQ out(n * n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    const Rat& c = x[(i * n + j) * n + k];
                    if (sgn(c) == 0) continue;
                    for (std::size_t o = 0; o < n * n; ++o) {
                        const Rat& m = r.mat(o, first ? i * n + j : j * n + k);
                        if (sgn(m) == 0) continue;
                        const std::size_t idx = first ? (o * n + k) : (i * n * n + o);
                        out[idx] += c * m;
                    }
                }
        return out;
    };
    return act(act(act(v, true), false), true) - act(act(act(v, false), true), false);
}

} // namespace ybtest

#endif
