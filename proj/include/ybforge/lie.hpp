#ifndef YBFORGE_LIE_HPP
#define YBFORGE_LIE_HPP

#include <ybforge/errors.hpp>
#include <ybforge/matrix.hpp>

#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace ybforge {

/// Z_2-graded bracket [e_i, e_j] = sum_k b(i, j, k) e_k on a homogeneous basis.
class SuperLieSpec {
public:
    SuperLieSpec(std::vector<std::string> basis, std::vector<int> grading, std::vector<Rat> table)
        : basis_(std::move(basis)), grading_(std::move(grading)), table_(std::move(table))
    {
        const std::size_t n = basis_.size();
        if (n == 0) throw ShapeError("Lie structure must have dimension >= 1");
        if (grading_.size() != n) throw ShapeError("grading must list one degree per basis element");
        if (table_.size() != n * n * n) throw ShapeError("bracket table must be n x n x n");
        for (int g : grading_)
            if (g != 0 && g != 1) throw PreconditionError("grading degrees must be 0 or 1");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(b(i, j, k)) != 0 && grading_[k] != (grading_[i] + grading_[j]) % 2)
                        throw PreconditionError("bracket [" + basis_[i] + "," + basis_[j] +
                                                "] does not respect the grading");
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<int>& grading() const { return grading_; }
    const std::vector<Rat>& table() const { return table_; }
    int degree(std::size_t i) const { return grading_[i]; }

    const Rat& b(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim() + j) * dim() + k]; }

    VecQ bracket_basis(std::size_t i, std::size_t j) const
    {
        VecQ v(dim());
        for (std::size_t k = 0; k < dim(); ++k) v[k] = b(i, j, k);
        return v;
    }

    friend bool operator==(const SuperLieSpec& x, const SuperLieSpec& y)
    {
        return x.grading_ == y.grading_ && x.table_ == y.table_;
    }

private:
    std::vector<std::string> basis_;
    std::vector<int> grading_;
    std::vector<Rat> table_;
};

namespace detail {

inline VecQ bilinear(std::size_t n, const std::vector<Rat>& table, const VecQ& u, const VecQ& v)
{
    if (u.dim() != n || v.dim() != n) throw ShapeError("bracket: dimension mismatch");
    VecQ r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(u[i]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (sgn(v[j]) == 0) continue;
            const Rat uv = u[i] * v[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Rat& c = table[(i * n + j) * n + k];
                if (sgn(c) != 0) r[k] += uv * c;
            }
        }
    }
    return r;
}

inline int sign_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace detail

inline VecQ bracket(const SuperLieSpec& l, const VecQ& u, const VecQ& v)
{
    return detail::bilinear(l.dim(), l.table(), u, v);
}

struct SuperLieReport {
    bool antisym = false;
    bool jacobi = false;
};

inline SuperLieReport validate_superlie(const SuperLieSpec& l)
{
    const std::size_t n = l.dim();
    SuperLieReport r{true, true};
    for (std::size_t i = 0; i < n && r.antisym; ++i)
        for (std::size_t j = 0; j < n && r.antisym; ++j) {
            const int s = detail::sign_pow(l.degree(i) * l.degree(j));
            for (std::size_t k = 0; k < n; ++k)
                if (l.b(i, j, k) != -s * l.b(j, i, k)) {
                    r.antisym = false;
                    break;
                }
        }

    // (-1)^{|z||x|}[x,[y,z]] + (-1)^{|x||y|}[y,[z,x]] + (-1)^{|y||z|}[z,[x,y]] = 0
    for (std::size_t x = 0; x < n && r.jacobi; ++x)
        for (std::size_t y = 0; y < n && r.jacobi; ++y)
            for (std::size_t z = 0; z < n && r.jacobi; ++z) {
                const VecQ ex = VecQ::basis(n, x), ey = VecQ::basis(n, y), ez = VecQ::basis(n, z);
                const int dx = l.degree(x), dy = l.degree(y), dz = l.degree(z);
                VecQ sum = Rat(detail::sign_pow(dz * dx)) * bracket(l, ex, l.bracket_basis(y, z));
                sum += Rat(detail::sign_pow(dx * dy)) * bracket(l, ey, l.bracket_basis(z, x));
                sum += Rat(detail::sign_pow(dy * dz)) * bracket(l, ez, l.bracket_basis(x, y));
                if (!sum.is_zero()) r.jacobi = false;
            }
    return r;
}

enum class CenterReason { ok, not_even, not_central };

struct CenterResult {
    bool contains = false;
    CenterReason reason = CenterReason::ok;
    explicit operator bool() const { return contains; }
};

/// z must be even (supported on degree-0 basis vectors) and bracket to zero
/// with every basis element.
inline CenterResult center_contains(const SuperLieSpec& l, const VecQ& z)
{
    if (z.dim() != l.dim()) throw ShapeError("center_contains: dimension mismatch");
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (sgn(z[i]) != 0 && l.degree(i) != 0) return {false, CenterReason::not_even};
    for (std::size_t i = 0; i < l.dim(); ++i) {
        const VecQ e = VecQ::basis(l.dim(), i);
        if (!bracket(l, z, e).is_zero() || !bracket(l, e, z).is_zero()) return {false, CenterReason::not_central};
    }
    return {true, CenterReason::ok};
}

/// Grading group G = Z_{m_1} x ... x Z_{m_r}; elements are encoded in
/// mixed radix (first component most significant).
class ColorLieSpec {
public:
    using GroupElement = std::vector<int>;

    ColorLieSpec(std::vector<std::string> basis, std::vector<int> moduli, std::vector<GroupElement> grading,
                 std::vector<Rat> theta, std::vector<Rat> table)
        : basis_(std::move(basis)), moduli_(std::move(moduli)), grading_(std::move(grading)),
          theta_(std::move(theta)), table_(std::move(table))
    {
        const std::size_t n = basis_.size();
        if (n == 0) throw ShapeError("color Lie structure must have dimension >= 1");
        for (int m : moduli_)
            if (m < 1) throw PreconditionError("group moduli must be >= 1");
        if (grading_.size() != n) throw ShapeError("grading must list one group element per basis element");
        for (auto& g : grading_) {
            if (g.size() != moduli_.size()) throw ShapeError("group element has wrong number of components");
            for (std::size_t c = 0; c < g.size(); ++c)
                g[c] = ((g[c] % moduli_[c]) + moduli_[c]) % moduli_[c];
        }
        const std::size_t order = group_order();
        if (theta_.size() != order * order) throw ShapeError("color function must have |G| x |G| values");
        for (const auto& t : theta_)
            if (is_zero(t)) throw PreconditionError("color function values must be nonzero");
        if (table_.size() != n * n * n) throw ShapeError("bracket table must be n x n x n");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (sgn(b(i, j, k)) != 0 && degree_index(k) != add(degree_index(i), degree_index(j)))
                        throw PreconditionError("bracket <" + basis_[i] + "," + basis_[j] + "> does not land in L_{a+b}");
    }

    std::size_t dim() const { return basis_.size(); }
    const std::vector<std::string>& basis() const { return basis_; }
    const std::vector<int>& moduli() const { return moduli_; }
    const std::vector<GroupElement>& grading() const { return grading_; }
    const std::vector<Rat>& theta_values() const { return theta_; }
    const std::vector<Rat>& table() const { return table_; }

    std::size_t group_order() const
    {
        return std::accumulate(moduli_.begin(), moduli_.end(), std::size_t{1},
                               [](std::size_t acc, int m) { return acc * static_cast<std::size_t>(m); });
    }

    std::size_t encode(const GroupElement& g) const
    {
        std::size_t idx = 0;
        for (std::size_t c = 0; c < moduli_.size(); ++c) idx = idx * moduli_[c] + g[c];
        return idx;
    }
    GroupElement decode(std::size_t idx) const
    {
        GroupElement g(moduli_.size());
        for (std::size_t c = moduli_.size(); c-- > 0;) {
            g[c] = static_cast<int>(idx % moduli_[c]);
            idx /= moduli_[c];
        }
        return g;
    }
    std::size_t add(std::size_t a, std::size_t b) const
    {
        GroupElement x = decode(a), y = decode(b);
        for (std::size_t c = 0; c < x.size(); ++c) x[c] = (x[c] + y[c]) % moduli_[c];
        return encode(x);
    }

    std::size_t degree_index(std::size_t basis_index) const { return encode(grading_[basis_index]); }
    const Rat& theta(std::size_t a, std::size_t b) const { return theta_[a * group_order() + b]; }
    const Rat& b(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim() + j) * dim() + k]; }

    VecQ bracket_basis(std::size_t i, std::size_t j) const
    {
        VecQ v(dim());
        for (std::size_t k = 0; k < dim(); ++k) v[k] = b(i, j, k);
        return v;
    }

private:
    std::vector<std::string> basis_;
    std::vector<int> moduli_;
    std::vector<GroupElement> grading_;
    std::vector<Rat> theta_;
    std::vector<Rat> table_;
};

inline VecQ bracket(const ColorLieSpec& l, const VecQ& u, const VecQ& v)
{
    return detail::bilinear(l.dim(), l.table(), u, v);
}

struct ColorLieReport {
    bool bicharacter = false;
    bool antisym = false;
    bool jacobi = false;
};

inline ColorLieReport validate_colorlie(const ColorLieSpec& l)
{
    ColorLieReport r{true, true, true};
    const std::size_t order = l.group_order();
    for (std::size_t a = 0; a < order && r.bicharacter; ++a)
        for (std::size_t b = 0; b < order && r.bicharacter; ++b) {
            if (l.theta(a, b) * l.theta(b, a) != 1) r.bicharacter = false;
            for (std::size_t c = 0; c < order; ++c) {
                if (l.theta(l.add(a, b), c) != l.theta(a, c) * l.theta(b, c) ||
                    l.theta(a, l.add(b, c)) != l.theta(a, b) * l.theta(a, c)) {
                    r.bicharacter = false;
                    break;
                }
            }
        }

    const std::size_t n = l.dim();
    // <x,y> = -theta(a,b) <y,x>
    for (std::size_t i = 0; i < n && r.antisym; ++i)
        for (std::size_t j = 0; j < n && r.antisym; ++j) {
            const Rat& t = l.theta(l.degree_index(i), l.degree_index(j));
            for (std::size_t k = 0; k < n; ++k)
                if (l.b(i, j, k) != -t * l.b(j, i, k)) {
                    r.antisym = false;
                    break;
                }
        }

    // theta(c,a)<x,<y,z>> + theta(b,c)<z,<x,y>> + theta(a,b)<y,<z,x>> = 0
    for (std::size_t x = 0; x < n && r.jacobi; ++x)
        for (std::size_t y = 0; y < n && r.jacobi; ++y)
            for (std::size_t z = 0; z < n && r.jacobi; ++z) {
                const std::size_t a = l.degree_index(x), b = l.degree_index(y), c = l.degree_index(z);
                const VecQ ex = VecQ::basis(n, x), ey = VecQ::basis(n, y), ez = VecQ::basis(n, z);
                VecQ sum = l.theta(c, a) * bracket(l, ex, l.bracket_basis(y, z));
                sum += l.theta(b, c) * bracket(l, ez, l.bracket_basis(x, y));
                sum += l.theta(a, b) * bracket(l, ey, l.bracket_basis(z, x));
                if (!sum.is_zero()) r.jacobi = false;
            }
    return r;
}

/// Views a Lie superalgebra as a (Z_2, (-1)^{ab}) color Lie algebra.
inline ColorLieSpec as_color_lie(const SuperLieSpec& l)
{
    std::vector<ColorLieSpec::GroupElement> grading;
    for (int g : l.grading()) grading.push_back({g});
    return ColorLieSpec(l.basis(), {2}, std::move(grading), {1, 1, 1, -1}, l.table());
}

} // namespace ybforge

#endif // YBFORGE_LIE_HPP
