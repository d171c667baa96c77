#ifndef YBFORGE_WSUBSPACE_HPP
#define YBFORGE_WSUBSPACE_HPP

#include <ybforge/algebra.hpp>
#include <ybforge/errors.hpp>
#include <ybforge/matrix.hpp>

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace ybforge {

// Which polarization family generates W inside V^{(x)4}.
//   pattern3:    x (x) x (x) y (x) x only
//   symmetrized: y (x) x^3 + x (x) y (x) x^2 + x^2 (x) y (x) x + x^3 (x) y
//   full:        each of the four patterns separately
enum class WMode { pattern3, symmetrized, full };

inline std::string_view to_string(WMode m)
{
    switch (m) {
    case WMode::pattern3: return "pattern3";
    case WMode::symmetrized: return "symmetrized";
    case WMode::full: return "full";
    }
    return "?";
}

inline WMode parse_wmode(std::string_view s)
{
    if (s == "pattern3") return WMode::pattern3;
    if (s == "symmetrized") return WMode::symmetrized;
    if (s == "full") return WMode::full;
    throw ParseError("unknown W mode '" + std::string(s) + "'");
}

struct WSubspace {
    std::size_t n = 0;
    WMode mode = WMode::pattern3;
    std::vector<VecQ> basis;

    std::size_t ambient_dim() const { return n * n * n * n; }
};

namespace detail {

inline std::size_t index4(std::size_t n, const std::array<std::size_t, 4>& s)
{
    return ((s[0] * n + s[1]) * n + s[2]) * n + s[3];
}

// e_j at `position`, the sum over all orderings of (i1, i2, i3) in the other slots.
inline VecQ polarized_generator(std::size_t n, std::size_t position, std::array<std::size_t, 3> triple, std::size_t j)
{
    VecQ v(n * n * n * n);
    std::sort(triple.begin(), triple.end());
    do {
        std::array<std::size_t, 4> slots{};
        std::size_t t = 0;
        for (std::size_t p = 0; p < 4; ++p) slots[p] = p == position ? j : triple[t++];
        v[index4(n, slots)] += 1;
    } while (std::next_permutation(triple.begin(), triple.end()));
    return v;
}

} // namespace detail

/// Generating family of W before row reduction.
inline std::vector<VecQ> w_generators(std::size_t n, WMode mode)
{
    if (n == 0) throw PreconditionError("w_subspace_basis: n must be >= 1");
    std::vector<VecQ> gens;
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = i1; i2 < n; ++i2)
            for (std::size_t i3 = i2; i3 < n; ++i3)
                for (std::size_t j = 0; j < n; ++j) {
                    const std::array<std::size_t, 3> triple{i1, i2, i3};
                    switch (mode) {
                    case WMode::pattern3:
                        gens.push_back(detail::polarized_generator(n, 2, triple, j));
                        break;
                    case WMode::full:
                        for (std::size_t p = 0; p < 4; ++p) gens.push_back(detail::polarized_generator(n, p, triple, j));
                        break;
                    case WMode::symmetrized: {
                        VecQ sum(n * n * n * n);
                        for (std::size_t p = 0; p < 4; ++p) sum += detail::polarized_generator(n, p, triple, j);
                        gens.push_back(std::move(sum));
                        break;
                    }
                    }
                }
    return gens;
}

inline WSubspace w_subspace_basis(std::size_t n, WMode mode)
{
    const auto gens = w_generators(n, mode);
    return WSubspace{n, mode, row_space_basis(gens)};
}

/// G: V^{(x)4} -> V, v1(x)v2(x)v3(x)v4 |-> ((v1 v2) v3) v4 - (v1 v2)(v3 v4).
/// Column index follows the tensor index convention.
inline Mat jordan_defect_matrix(const AlgebraSpec& a)
{
    const std::size_t n = a.dim();
    Mat g(n, n * n * n * n);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t i2 = 0; i2 < n; ++i2) {
            const VecQ p12 = a.product(i1, i2);
            for (std::size_t i3 = 0; i3 < n; ++i3) {
                const VecQ p123 = mul_vec(a, p12, VecQ::basis(n, i3));
                for (std::size_t i4 = 0; i4 < n; ++i4) {
                    const VecQ e4 = VecQ::basis(n, i4);
                    const VecQ d = mul_vec(a, p123, e4) - mul_vec(a, p12, a.product(i3, i4));
                    g.set_col(detail::index4(n, {i1, i2, i3, i4}), d);
                }
            }
        }
    return g;
}

/// Evaluates G on every basis vector of W(mode). Requires a commutative product.
inline bool jordan_w_check(const AlgebraSpec& a, WMode mode)
{
    if (!is_commutative(a)) throw PreconditionError("jordan_w_check: algebra is not commutative");
    const Mat g = jordan_defect_matrix(a);
    const WSubspace w = w_subspace_basis(a.dim(), mode);
    for (const auto& v : w.basis)
        if (!mat_vec(g, v).is_zero()) return false;
    return true;
}

/// D = (eta(x)I(x)I)(eta(x)I)eta - (I(x)I(x)eta)(eta(x)I)eta : V -> V^{(x)4}.
inline Mat coassociativity_defect4(const CoalgebraSpec& c)
{
    const Mat eta = c.comul_matrix();
    const Mat id = Mat::identity(c.dim());
    const Mat id2 = Mat::identity(c.dim() * c.dim());
    const Mat step2 = mat_mul(kron(eta, id), eta);
    return mat_mul(kron(eta, id2), step2) - mat_mul(kron(id2, eta), step2);
}

/// The fourth-iterate defect must vanish after orthogonal projection onto W.
/// Requires cocommutativity.
inline bool jordan_co_check(const CoalgebraSpec& c, WMode mode)
{
    if (!is_cocommutative(c)) throw PreconditionError("jordan_co_check: comultiplication is not cocommutative");
    const Mat d = coassociativity_defect4(c);
    if (d.is_zero()) return true;
    const Projector project(w_subspace_basis(c.dim(), mode).basis);
    for (std::size_t k = 0; k < c.dim(); ++k)
        if (!project(d.col(k)).is_zero()) return false;
    return true;
}

} // namespace ybforge

#endif // YBFORGE_WSUBSPACE_HPP
