#ifndef YBFORGE_MATRIX_HPP
#define YBFORGE_MATRIX_HPP

#include <ybforge/errors.hpp>
#include <ybforge/rational.hpp>

#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ybforge {

/// Dense vector of exact rationals (an element of V or of a tensor power).
class VecQ {
public:
    VecQ() = default;
    explicit VecQ(std::size_t dim) : coords_(dim) {}
    explicit VecQ(std::vector<Rat> coords) : coords_(std::move(coords)) {}
    VecQ(std::initializer_list<Rat> coords) : coords_(coords) {}

    static VecQ basis(std::size_t dim, std::size_t index)
    {
        VecQ v(dim);
        v.coords_.at(index) = 1;
        return v;
    }

    std::size_t dim() const { return coords_.size(); }
    Rat& operator[](std::size_t i) { return coords_[i]; }
    const Rat& operator[](std::size_t i) const { return coords_[i]; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const
    {
        for (const auto& c : coords_)
            if (sgn(c) != 0) return false;
        return true;
    }

    VecQ& operator+=(const VecQ& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
        return *this;
    }
    VecQ& operator-=(const VecQ& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
        return *this;
    }
    VecQ& operator*=(const Rat& s)
    {
        for (auto& c : coords_) c *= s;
        return *this;
    }

    friend VecQ operator+(VecQ a, const VecQ& b) { return a += b; }
    friend VecQ operator-(VecQ a, const VecQ& b) { return a -= b; }
    friend VecQ operator*(const Rat& s, VecQ a) { return a *= s; }
    friend bool operator==(const VecQ&, const VecQ&) = default;

private:
    void require_same(const VecQ& o) const
    {
        if (o.dim() != dim()) throw ShapeError("vector dimension mismatch");
    }

    std::vector<Rat> coords_;
};

inline Rat dot(const VecQ& a, const VecQ& b)
{
    if (a.dim() != b.dim()) throw ShapeError("dot: dimension mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        if (sgn(a[i]) != 0) s += a[i] * b[i];
    return s;
}

/// Tensor product of coordinate vectors; index (i, j) maps to i * b.dim() + j.
inline VecQ tensor(const VecQ& a, const VecQ& b)
{
    VecQ r(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.dim(); ++j)
            if (sgn(b[j]) != 0) r[i * b.dim() + j] = a[i] * b[j];
    }
    return r;
}

/// Dense row-major matrix of exact rationals.
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Mat(std::initializer_list<std::initializer_list<Rat>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ == 0 ? 0 : rows.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeError("ragged matrix literal");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Mat identity(std::size_t n)
    {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    VecQ row(std::size_t i) const
    {
        return VecQ(std::vector<Rat>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                                     data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)));
    }
    VecQ col(std::size_t j) const
    {
        VecQ v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_col(std::size_t j, const VecQ& v)
    {
        if (v.dim() != rows_) throw ShapeError("set_col: dimension mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (sgn(x) != 0) return false;
        return true;
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Mat& operator+=(const Mat& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    Mat& operator-=(const Mat& o)
    {
        require_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    Mat& operator*=(const Rat& s)
    {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
    friend Mat operator*(const Rat& s, Mat a) { return a *= s; }
    friend bool operator==(const Mat&, const Mat&) = default;

private:
    void require_same(const Mat& o) const
    {
        if (o.rows_ != rows_ || o.cols_ != cols_) throw ShapeError("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Exact product. Zero entries of either factor are skipped, which matters
/// for tensor lifts: R (x) I has at most nnz(row of R) entries per row.
inline Mat mat_mul(const Mat& a, const Mat& b)
{
    if (a.cols() != b.rows())
        throw ShapeError("mat_mul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));

    std::vector<std::vector<std::pair<std::size_t, const Rat*>>> b_rows(b.rows());
    for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b(k, j)) != 0) b_rows[k].emplace_back(j, &b(k, j));

    Mat c(a.rows(), b.cols());
    Rat term;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Rat& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (const auto& [j, bkj] : b_rows[k]) {
                mpq_mul(term.get_mpq_t(), aik.get_mpq_t(), bkj->get_mpq_t());
                mpq_add(c(i, j).get_mpq_t(), c(i, j).get_mpq_t(), term.get_mpq_t());
            }
        }
    return c;
}

inline VecQ mat_vec(const Mat& a, const VecQ& v)
{
    if (a.cols() != v.dim()) throw ShapeError("mat_vec: dimension mismatch");
    VecQ r(a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (sgn(v[j]) == 0) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (sgn(a(i, j)) != 0) r[i] += a(i, j) * v[j];
    }
    return r;
}

/// Kronecker product: (a (x) b)[i*b.rows()+k, j*b.cols()+l] = a[i,j] * b[k,l].
inline Mat kron(const Mat& a, const Mat& b)
{
    Mat r(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rat& aij = a(i, j);
            if (sgn(aij) == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (sgn(b(k, l)) != 0) r(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    return r;
}

/// First (row, col) at which a and b differ, or nullopt when equal.
inline std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Mat& a, const Mat& b)
{
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("first_difference: shape mismatch");
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) != b(i, j)) return std::make_pair(i, j);
    return std::nullopt;
}

namespace detail {

// In-place Gauss-Jordan to reduced row-echelon form. Pivot = first nonzero
// entry at or below the current row. Returns the pivot columns.
inline std::vector<std::size_t> rref_in_place(Mat& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    Rat factor;
    for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));

        const Rat inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (sgn(m(r, j)) != 0) m(r, j) *= inv;

        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= factor * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

inline std::size_t rank(Mat m) { return detail::rref_in_place(m, m.cols()).size(); }

/// Exact inverse, or nullopt when the matrix is singular.
inline std::optional<Mat> mat_inverse(const Mat& a)
{
    if (!a.is_square()) throw ShapeError("mat_inverse: matrix is not square");
    const std::size_t n = a.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = 1;
    }
    if (detail::rref_in_place(aug, n).size() < n) return std::nullopt;
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Solves a x = b exactly for square nonsingular a.
inline std::optional<VecQ> solve(const Mat& a, const VecQ& b)
{
    if (!a.is_square() || a.rows() != b.dim()) throw ShapeError("solve: shape mismatch");
    const std::size_t n = a.rows();
    Mat aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    if (detail::rref_in_place(aug, n).size() < n) return std::nullopt;
    return aug.col(n);
}

inline Mat rows_to_mat(std::span<const VecQ> vecs)
{
    if (vecs.empty()) return Mat();
    const std::size_t dim = vecs.front().dim();
    Mat m(vecs.size(), dim);
    for (std::size_t i = 0; i < vecs.size(); ++i) {
        if (vecs[i].dim() != dim) throw ShapeError("vectors of different dimensions");
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
    }
    return m;
}

/// Reduced row-echelon basis of span(vecs), in pivot order.
inline std::vector<VecQ> row_space_basis(std::span<const VecQ> vecs)
{
    if (vecs.empty()) return {};
    Mat m = rows_to_mat(vecs);
    const std::size_t r = detail::rref_in_place(m, m.cols()).size();
    std::vector<VecQ> out;
    out.reserve(r);
    for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
    return out;
}

/// Orthogonal projection (standard dot product) onto the span of a fixed
/// linearly independent family. The Gram matrix is inverted once.
class Projector {
public:
    explicit Projector(std::vector<VecQ> basis) : basis_(std::move(basis))
    {
        if (basis_.empty()) return;
        dim_ = basis_.front().dim();
        const Mat b = rows_to_mat(basis_);
        auto gram_inv = mat_inverse(mat_mul(b, b.transpose()));
        if (!gram_inv) throw PreconditionError("project_onto: basis is linearly dependent");
        // P = B^T G^{-1} B
        projection_ = mat_mul(b.transpose(), mat_mul(*gram_inv, b));
    }

    VecQ operator()(const VecQ& v) const
    {
        if (basis_.empty()) return VecQ(v.dim());
        if (v.dim() != dim_) throw ShapeError("project_onto: dimension mismatch");
        return mat_vec(projection_, v);
    }

    const Mat& matrix() const { return projection_; }

private:
    std::vector<VecQ> basis_;
    std::size_t dim_ = 0;
    Mat projection_;
};

inline VecQ project_onto(std::span<const VecQ> basis, const VecQ& v)
{
    if (basis.empty()) return VecQ(v.dim());
    const Mat b = rows_to_mat(basis);
    if (b.cols() != v.dim()) throw ShapeError("project_onto: dimension mismatch");
    auto coeffs = solve(mat_mul(b, b.transpose()), mat_vec(b, v));
    if (!coeffs) throw PreconditionError("project_onto: basis is linearly dependent");
    return mat_vec(b.transpose(), *coeffs);
}

// Text format: "rows cols" on the first line, then one row per line.
inline void write_mat(std::ostream& os, const Mat& m)
{
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << to_string(m(i, j));
        os << '\n';
    }
}

inline Mat read_mat(std::istream& is)
{
    std::size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw ParseError("matrix header 'rows cols' expected");
    Mat m(rows, cols);
    std::string tok;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(is >> tok)) throw ParseError("matrix truncated");
            m(i, j) = parse_rat(tok);
        }
    return m;
}

inline std::string to_string(const Mat& m)
{
    std::ostringstream os;
    write_mat(os, m);
    return os.str();
}

} // namespace ybforge

#endif // YBFORGE_MATRIX_HPP
