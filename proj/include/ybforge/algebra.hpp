#ifndef YBFORGE_ALGEBRA_HPP
#define YBFORGE_ALGEBRA_HPP

#include <ybforge/errors.hpp>
#include <ybforge/matrix.hpp>
#include <ybforge/paramgrid.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybforge {

/// Finite-dimensional algebra given by structure constants:
/// e_i e_j = sum_k c(i, j, k) e_k.
class AlgebraSpec {
public:
    AlgebraSpec(std::vector<std::string> basis, std::vector<Rat> table, std::optional<VecQ> unit = std::nullopt)
        : basis_(std::move(basis)), table_(std::move(table)), unit_(std::move(unit))
    {
        const std::size_t n = basis_.size();
        if (n == 0) throw ShapeError("algebra must have dimension >= 1");
        if (table_.size() != n * n * n) throw ShapeError("structure table must be n x n x n");
        if (unit_ && unit_->dim() != n) throw ShapeError("unit has wrong dimension");
    }

    /// Zero product on the given basis; fill with set().
    explicit AlgebraSpec(std::vector<std::string> basis)
        : AlgebraSpec(basis, std::vector<Rat>(basis.size() * basis.size() * basis.size()))
    {
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<Rat>& table() const { return table_; }
    const std::optional<VecQ>& unit() const { return unit_; }

    const Rat& c(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim() + j) * dim() + k]; }
    Rat& c(std::size_t i, std::size_t j, std::size_t k) { return table_[(i * dim() + j) * dim() + k]; }

    /// Sets e_i e_j := v.
    void set(std::size_t i, std::size_t j, const VecQ& v)
    {
        if (v.dim() != dim()) throw ShapeError("product value has wrong dimension");
        for (std::size_t k = 0; k < dim(); ++k) c(i, j, k) = v[k];
    }
    void set_unit(VecQ u)
    {
        if (u.dim() != dim()) throw ShapeError("unit has wrong dimension");
        unit_ = std::move(u);
    }

    VecQ product(std::size_t i, std::size_t j) const
    {
        VecQ v(dim());
        for (std::size_t k = 0; k < dim(); ++k) v[k] = c(i, j, k);
        return v;
    }

    /// Matrix of theta: V (x) V -> V, column (i*n + j) holds e_i e_j.
    Mat mult_matrix() const
    {
        const std::size_t n = dim();
        Mat m(n, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) m(k, i * n + j) = c(i, j, k);
        return m;
    }

    friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b)
    {
        return a.table_ == b.table_ && a.unit_ == b.unit_ && a.dim() == b.dim();
    }

private:
    std::vector<std::string> basis_;
    std::vector<Rat> table_;
    std::optional<VecQ> unit_;
};

/// eta(e_k) = sum_{i,j} d(k, i, j) e_i (x) e_j.
class CoalgebraSpec {
public:
    CoalgebraSpec(std::vector<std::string> basis, std::vector<Rat> table, std::optional<VecQ> counit = std::nullopt)
        : basis_(std::move(basis)), table_(std::move(table)), counit_(std::move(counit))
    {
        const std::size_t n = basis_.size();
        if (n == 0) throw ShapeError("coalgebra must have dimension >= 1");
        if (table_.size() != n * n * n) throw ShapeError("comultiplication table must be n x n x n");
        if (counit_ && counit_->dim() != n) throw ShapeError("counit has wrong dimension");
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<Rat>& table() const { return table_; }
    const std::optional<VecQ>& counit() const { return counit_; }

    const Rat& d(std::size_t k, std::size_t i, std::size_t j) const { return table_[(k * dim() + i) * dim() + j]; }
    Rat& d(std::size_t k, std::size_t i, std::size_t j) { return table_[(k * dim() + i) * dim() + j]; }

    /// Matrix of eta: V -> V (x) V, column k holds eta(e_k).
    Mat comul_matrix() const
    {
        const std::size_t n = dim();
        Mat m(n * n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m(i * n + j, k) = d(k, i, j);
        return m;
    }

    friend bool operator==(const CoalgebraSpec& a, const CoalgebraSpec& b)
    {
        return a.table_ == b.table_ && a.counit_ == b.counit_ && a.dim() == b.dim();
    }

private:
    std::vector<std::string> basis_;
    std::vector<Rat> table_;
    std::optional<VecQ> counit_;
};

/// A linear form V -> k in dual-basis coordinates.
using Covector = VecQ;

inline VecQ mul_vec(const AlgebraSpec& a, const VecQ& u, const VecQ& v)
{
    const std::size_t n = a.dim();
    if (u.dim() != n || v.dim() != n) throw ShapeError("mul_vec: dimension mismatch");
    VecQ r(n);
    Rat uv;
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(v[j]) == 0) continue;
            uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(a.c(i, j, k)) != 0) r[k] += uv * a.c(i, j, k);
        }
    }
    return r;
}

struct PropReport {
    bool commutative = false;
    bool associative = false;
    bool unital = false;
    bool jordan = false;
    friend bool operator==(const PropReport&, const PropReport&) = default;
};

inline bool is_commutative(const AlgebraSpec& a)
{
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (a.c(i, j, k) != a.c(j, i, k)) return false;
    return true;
}

inline bool is_associative(const AlgebraSpec& a)
{
    const std::size_t n = a.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const VecQ ij = a.product(i, j);
            for (std::size_t k = 0; k < n; ++k) {
                const VecQ ek = VecQ::basis(n, k);
                if (mul_vec(a, ij, ek) != mul_vec(a, VecQ::basis(n, i), a.product(j, k))) return false;
            }
        }
    return true;
}

/// True iff a unit is declared and acts as a two-sided identity on the basis.
inline bool has_valid_unit(const AlgebraSpec& a)
{
    if (!a.unit()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const VecQ e = VecQ::basis(a.dim(), i);
        if (mul_vec(a, *a.unit(), e) != e || mul_vec(a, e, *a.unit()) != e) return false;
    }
    return true;
}

/// Grid job for (x^2 y) x = x^2 (y x): x = sum s_i e_i with s_i on `grid`,
/// column j of each side is the value at y = e_j.
inline IdentityJob jordan_identity_job(const AlgebraSpec& a, std::vector<Rat> grid)
{
    IdentityJob job;
    job.description = "jordan identity (x^2 y) x = x^2 (y x)";
    const int bound = degree_bound("jordan-identity", "x");
    for (std::size_t i = 0; i < a.dim(); ++i) job.variables.push_back({"s" + std::to_string(i), bound, grid});
    job.evaluator = [a](std::span<const Rat> s) {
        const std::size_t n = a.dim();
        const VecQ x(std::vector<Rat>(s.begin(), s.end()));
        const VecQ x2 = mul_vec(a, x, x);
        Mat lhs(n, n), rhs(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const VecQ y = VecQ::basis(n, j);
            lhs.set_col(j, mul_vec(a, mul_vec(a, x2, y), x));
            rhs.set_col(j, mul_vec(a, x2, mul_vec(a, y, x)));
        }
        return std::make_pair(std::move(lhs), std::move(rhs));
    };
    return job;
}

inline bool is_jordan_identity(const AlgebraSpec& a)
{
    return grid_verify(jordan_identity_job(a, integer_grid(0, 4))).verdict;
}

/// `jordan` means Jordan algebra: commutative and (x^2 y) x = x^2 (y x).
/// `unital` means a declared unit that really is one.
inline PropReport check_algebra_props(const AlgebraSpec& a)
{
    PropReport r;
    r.commutative = is_commutative(a);
    r.associative = is_associative(a);
    r.unital = has_valid_unit(a);
    r.jordan = r.commutative && is_jordan_identity(a);
    return r;
}

/// Two-dimensional commutative algebra on (a, b) with a^2 = b, b^2 = a and
/// ab = ba = s a + t b.
inline AlgebraSpec theorem21_instance(const Rat& s, const Rat& t)
{
    AlgebraSpec a({"a", "b"});
    a.set(0, 0, VecQ{0, 1});
    a.set(1, 1, VecQ{1, 0});
    a.set(0, 1, VecQ{s, t});
    a.set(1, 0, VecQ{s, t});
    return a;
}

struct Theorem21Verdict {
    bool jordan = false;
    bool assoc = false;
    bool equivalent = false;
};

inline Theorem21Verdict theorem21_verdict(const Rat& s, const Rat& t)
{
    const AlgebraSpec a = theorem21_instance(s, t);
    Theorem21Verdict v;
    v.jordan = is_jordan_identity(a);
    v.assoc = is_associative(a);
    v.equivalent = v.jordan == v.assoc;
    return v;
}

/// eta(v), as an element of V (x) V.
inline VecQ comul_vec(const CoalgebraSpec& c, const VecQ& v)
{
    if (v.dim() != c.dim()) throw ShapeError("comul_vec: dimension mismatch");
    return mat_vec(c.comul_matrix(), v);
}

inline Mat twist_matrix(std::size_t n)
{
    Mat t(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t(j * n + i, i * n + j) = 1;
    return t;
}

struct CoalgebraProps {
    bool cocommutative = false;
    bool coassociative = false;
};

inline bool is_cocommutative(const CoalgebraSpec& c)
{
    const Mat eta = c.comul_matrix();
    return mat_mul(twist_matrix(c.dim()), eta) == eta;
}

inline CoalgebraProps coalgebra_props(const CoalgebraSpec& c)
{
    const Mat eta = c.comul_matrix();
    const Mat id = Mat::identity(c.dim());
    CoalgebraProps p;
    p.cocommutative = mat_mul(twist_matrix(c.dim()), eta) == eta;
    p.coassociative = mat_mul(kron(eta, id), eta) == mat_mul(kron(id, eta), eta);
    return p;
}

/// eta(e) = (1/beta)(e(x)f + f(x)e) + f(x)f,  eta(f) = beta(e(x)f + f(x)e) + e(x)e.
inline CoalgebraSpec theorem22_instance(const Rat& beta)
{
    if (is_zero(beta)) throw PreconditionError("theorem22_instance: beta must be nonzero");
    CoalgebraSpec c({"e", "f"}, std::vector<Rat>(8));
    const Rat inv = 1 / beta;
    c.d(0, 0, 1) = inv;
    c.d(0, 1, 0) = inv;
    c.d(0, 1, 1) = 1;
    c.d(1, 0, 1) = beta;
    c.d(1, 1, 0) = beta;
    c.d(1, 0, 0) = 1;
    return c;
}

/// Checks (eps (x) eps) o eta = zeta and (zeta (x) zeta) o eta = eps.
inline bool thm22_conditions(const CoalgebraSpec& c, const Covector& eps, const Covector& zeta)
{
    const std::size_t n = c.dim();
    if (eps.dim() != n || zeta.dim() != n) throw ShapeError("thm22_conditions: covector dimension mismatch");
    const std::vector<VecQ> pair{eps, zeta};
    if (rank(rows_to_mat(pair)) != 2) throw PreconditionError("thm22_conditions: eps and zeta are linearly dependent");

    auto pullback = [&](const Covector& f) {
        // (f (x) f) o eta as a covector.
        Covector r(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (sgn(c.d(k, i, j)) != 0) r[k] += c.d(k, i, j) * f[i] * f[j];
        return r;
    };
    return pullback(eps) == zeta && pullback(zeta) == eps;
}

namespace detail {

inline std::string dual_label(const std::string& s) { return s + "*"; }

inline std::string undual_label(const std::string& s)
{
    if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
    return s;
}

} // namespace detail

/// Transpose with respect to the dual basis: d(k, i, j) := c(i, j, k).
/// The unit, if any, becomes the counit.
inline CoalgebraSpec dualize(const AlgebraSpec& a)
{
    const std::size_t n = a.dim();
    std::vector<std::string> labels;
    for (const auto& b : a.basis()) labels.push_back(detail::dual_label(b));
    std::vector<Rat> table(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) table[(k * n + i) * n + j] = a.c(i, j, k);
    return CoalgebraSpec(std::move(labels), std::move(table), a.unit());
}

inline AlgebraSpec dualize_co(const CoalgebraSpec& c)
{
    const std::size_t n = c.dim();
    std::vector<std::string> labels;
    for (const auto& b : c.basis()) labels.push_back(detail::undual_label(b));
    std::vector<Rat> table(n * n * n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) table[(i * n + j) * n + k] = c.d(k, i, j);
    return AlgebraSpec(std::move(labels), std::move(table), c.counit());
}

/// Adjoins a formal unit: basis ("1", e_0, ..., e_{n-1}), unit at index 0.
inline AlgebraSpec adjoin_unit(const AlgebraSpec& a)
{
    const std::size_t n = a.dim();
    std::vector<std::string> labels{"1"};
    labels.insert(labels.end(), a.basis().begin(), a.basis().end());
    AlgebraSpec u(labels);
    const std::size_t m = n + 1;
    for (std::size_t i = 0; i < m; ++i) {
        u.c(0, i, i) = 1;
        u.c(i, 0, i) = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) u.c(i + 1, j + 1, k + 1) = a.c(i, j, k);
    u.set_unit(VecQ::basis(m, 0));
    return u;
}

/// Embeds v in the unitalization: coordinates shift by one.
inline VecQ embed_in_unitalization(const VecQ& v)
{
    VecQ r(v.dim() + 1);
    for (std::size_t i = 0; i < v.dim(); ++i) r[i + 1] = v[i];
    return r;
}

} // namespace ybforge

#endif // YBFORGE_ALGEBRA_HPP
