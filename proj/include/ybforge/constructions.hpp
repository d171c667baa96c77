#ifndef YBFORGE_CONSTRUCTIONS_HPP
#define YBFORGE_CONSTRUCTIONS_HPP

#include <ybforge/algebra.hpp>
#include <ybforge/errors.hpp>
#include <ybforge/lie.hpp>
#include <ybforge/matrix.hpp>
#include <ybforge/operator.hpp>
#include <ybforge/paramgrid.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ybforge {

namespace detail {

inline const VecQ& require_unit(const AlgebraSpec& a, const char* who)
{
    if (!a.unit()) throw PreconditionError(std::string(who) + ": algebra has no unit");
    if (!has_valid_unit(a)) throw PreconditionError(std::string(who) + ": declared unit is not a two-sided identity");
    return *a.unit();
}

} // namespace detail

/// a(x)b |-> c_ab1 ab(x)1 + c_1ab 1(x)ab + c_ab a(x)b + c_ba b(x)a, extended
/// linearly from basis pairs. Every algebra-derived family below is an
/// instance of this four-term shape.
inline LinOp2 algebra_operator(const AlgebraSpec& a, const VecQ& unit, const Rat& c_ab1, const Rat& c_1ab,
                               const Rat& c_ab, const Rat& c_ba)
{
    const std::size_t n = a.dim();
    Mat m(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const VecQ ab = a.product(i, j);
            VecQ col = c_ab1 * tensor(ab, unit);
            col += c_1ab * tensor(unit, ab);
            col[i * n + j] += c_ab;
            col[j * n + i] += c_ba;
            m.set_col(i * n + j, col);
        }
    return LinOp2(n, std::move(m));
}

/// R^A_{alpha,beta,gamma}(a(x)b) = alpha ab(x)1 + beta 1(x)ab - gamma a(x)b.
inline LinOp2 r_algebra(const AlgebraSpec& a, const Rat& alpha, const Rat& beta, const Rat& gamma)
{
    const VecQ& unit = detail::require_unit(a, "r_algebra");
    if (a.dim() < 2) throw PreconditionError("r_algebra: algebra must have dimension >= 2");
    return algebra_operator(a, unit, alpha, beta, -gamma, 0);
}

enum class Thm32Case { none, i, ii, iii };

inline Thm32Case thm32_case(const Rat& alpha, const Rat& beta, const Rat& gamma)
{
    if (alpha == gamma && !is_zero(gamma) && !is_zero(beta)) return Thm32Case::i;
    if (beta == gamma && !is_zero(gamma) && !is_zero(alpha)) return Thm32Case::ii;
    if (is_zero(alpha) && is_zero(beta) && !is_zero(gamma)) return Thm32Case::iii;
    return Thm32Case::none;
}

inline bool thm32_predict(const Rat& alpha, const Rat& beta, const Rat& gamma)
{
    return thm32_case(alpha, beta, gamma) != Thm32Case::none;
}

/// Inverse by formula: R^A_{1/beta, 1/alpha, 1/gamma} in cases (i), (ii);
/// R^A_{0, 0, 1/gamma} in case (iii).
inline LinOp2 thm32_inverse(const AlgebraSpec& a, const Rat& alpha, const Rat& beta, const Rat& gamma)
{
    switch (thm32_case(alpha, beta, gamma)) {
    case Thm32Case::i:
    case Thm32Case::ii: return r_algebra(a, 1 / beta, 1 / alpha, 1 / gamma);
    case Thm32Case::iii: return r_algebra(a, 0, 0, 1 / gamma);
    case Thm32Case::none: break;
    }
    throw PreconditionError("thm32_inverse: (alpha, beta, gamma) is outside the three Yang-Baxter cases");
}

/// The 4x4 normal form, written with row r listing the image of the r-th
/// basis tensor (1(x)1, 1(x)x, x(x)1, x(x)x).
inline Mat form8_template(const Rat& q, const Rat& eta)
{
    return Mat{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1 - q, q, 0}, {eta, 0, 0, -q}};
}

struct Form8Result {
    bool match = false;
    Rat q8;
    int eta8 = 0;
    /// (R o tau)/beta in the row-image layout of form8_template.
    Mat normalized;
    std::optional<std::pair<std::size_t, std::size_t>> offending;
};

/// Requires a 2-dim unital algebra with basis ordered (1, x).
inline Form8Result matrix_form8(const AlgebraSpec& a, const Rat& alpha, const Rat& beta)
{
    if (a.dim() != 2) throw PreconditionError("matrix_form8: algebra must have dimension 2");
    if (!a.unit() || *a.unit() != VecQ::basis(2, 0) || !has_valid_unit(a))
        throw PreconditionError("matrix_form8: basis must be ordered (1, x) with the unit first");
    if (is_zero(alpha) || is_zero(beta)) throw PreconditionError("matrix_form8: alpha and beta must be nonzero");

    const LinOp2 rt = compose(r_algebra(a, alpha, beta, alpha), twist(2));
    Form8Result out;
    out.normalized = (1 / beta) * rt.mat.transpose();
    out.q8 = alpha / beta;
    const Rat corner = out.normalized(3, 0);
    if (corner != 0 && corner != 1) {
        out.offending = std::make_pair(std::size_t{3}, std::size_t{0});
        return out;
    }
    out.eta8 = corner == 1 ? 1 : 0;
    out.offending = first_difference(out.normalized, form8_template(out.q8, corner));
    out.match = !out.offending.has_value();
    return out;
}

/// Colored operator family R: X x X -> End(V (x) V).
struct ColoredFamily {
    std::string tag;
    std::size_t n = 0;
    std::function<LinOp2(const Rat&, const Rat&)> evaluate;
    /// Finite color set for table-driven families; empty when defined on all of Q.
    std::vector<Rat> colors;
    std::vector<std::string> notes;

    LinOp2 operator()(const Rat& u, const Rat& v) const { return evaluate(u, v); }
};

/// R(u,v)(a(x)b) = p(u-v) 1(x)ab + q(u-v) ab(x)1 - (pu-qv) b(x)a.
inline ColoredFamily r_colored(const AlgebraSpec& a, const Rat& p, const Rat& q)
{
    const VecQ unit = detail::require_unit(a, "r_colored");
    if (a.dim() < 2) throw PreconditionError("r_colored: algebra must have dimension >= 2");
    ColoredFamily f;
    f.tag = "colored";
    f.n = a.dim();
    f.evaluate = [a, unit, p, q](const Rat& u, const Rat& v) {
        const Rat d = u - v;
        return algebra_operator(a, unit, q * d, p * d, 0, -(p * u - q * v));
    };
    return f;
}

/// Two-parameter QYBE R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)
/// over grid^3. Polynomial families are certified once the grid exceeds the
/// degree bound; table families once the grid covers their whole color set.
inline GridVerdict colored_qybe_verify(const ColoredFamily& f, const std::vector<Rat>& grid)
{
    if (!f.colors.empty())
        for (const auto& g : grid)
            if (std::find(f.colors.begin(), f.colors.end(), g) == f.colors.end())
                throw PreconditionError("colored_qybe_verify: grid point " + to_string(g) + " outside the color set");

    std::map<std::pair<Rat, Rat>, Lifts> lifts;
    for (const auto& u : grid)
        for (const auto& v : grid) lifts.emplace(std::make_pair(u, v), all_lifts(f(u, v)));

    const int bound = degree_bound("colored", "u");
    IdentityJob job;
    job.description = "colored QYBE for " + f.tag;
    for (const char* name : {"u", "v", "w"}) job.variables.push_back({name, bound, grid});
    job.evaluator = [&lifts](std::span<const Rat> x) {
        const Mat& r12 = lifts.at({x[0], x[1]}).r12.mat;
        const Mat& r13 = lifts.at({x[0], x[2]}).r13.mat;
        const Mat& r23 = lifts.at({x[1], x[2]}).r23.mat;
        return std::make_pair(mat_mul(r12, mat_mul(r13, r23)), mat_mul(r23, mat_mul(r13, r12)));
    };

    if (!f.colors.empty()) {
        GridVerdict out = evaluate_grid(job);
        bool exhaustive = true;
        for (const auto& c : f.colors)
            if (std::find(grid.begin(), grid.end(), c) == grid.end()) exhaustive = false;
        out.certified = out.verdict && exhaustive;
        return out;
    }
    if (grid.size() > static_cast<std::size_t>(bound)) return grid_verify(job);
    return evaluate_grid(job);
}

/// r_colored over variables (p, q, u, v, w) at once.
inline GridVerdict r_colored_identity(const AlgebraSpec& a, const std::vector<Rat>& color_grid,
                                      const std::vector<Rat>& p_grid, const std::vector<Rat>& q_grid)
{
    IdentityJob job;
    job.description = "colored QYBE for r_colored, all of p, q, u, v, w";
    job.variables = {{"p", degree_bound("colored", "p"), p_grid},
                     {"q", degree_bound("colored", "q"), q_grid},
                     {"u", degree_bound("colored", "u"), color_grid},
                     {"v", degree_bound("colored", "v"), color_grid},
                     {"w", degree_bound("colored", "w"), color_grid}};
    job.evaluator = [a](std::span<const Rat> x) {
        const ColoredFamily f = r_colored(a, x[0], x[1]);
        const Mat r12 = lift(f(x[2], x[3]), Slot::s12).mat;
        const Mat r13 = lift(f(x[2], x[4]), Slot::s13).mat;
        const Mat r23 = lift(f(x[3], x[4]), Slot::s23).mat;
        return std::make_pair(mat_mul(r12, mat_mul(r13, r23)), mat_mul(r23, mat_mul(r13, r12)));
    };
    return grid_verify(job);
}

using OneParamFamily = std::function<LinOp2(const Rat&)>;

/// S(t)(a(x)b) = (t-1) 1(x)ab + q(t-1) ab(x)1 - (t-q) b(x)a, where t stands
/// for e^lambda.
inline OneParamFamily s_oneparam(const AlgebraSpec& a, const Rat& q)
{
    const VecQ unit = detail::require_unit(a, "s_oneparam");
    return [a, unit, q](const Rat& t) {
        if (is_zero(t)) throw PreconditionError("s_oneparam: t = e^lambda must be nonzero");
        return algebra_operator(a, unit, q * (t - 1), t - 1, 0, -(t - q));
    };
}

/// S12(t1/t2) S13(t1/t3) S23(t2/t3) = S23(t2/t3) S13(t1/t3) S12(t1/t2) on tgrid^3.
inline GridVerdict oneparam_verify(const OneParamFamily& s, const std::vector<Rat>& tgrid)
{
    for (const auto& t : tgrid)
        if (is_zero(t)) throw PreconditionError("oneparam_verify: t-grid points must be nonzero");
    const int bound = degree_bound("oneparam", "t1");
    IdentityJob job;
    job.description = "one-parameter YBE (multiplicative form)";
    for (const char* name : {"t1", "t2", "t3"}) job.variables.push_back({name, bound, tgrid});
    job.evaluator = [&s](std::span<const Rat> t) {
        const Mat s12 = lift(s(t[0] / t[1]), Slot::s12).mat;
        const Mat s13 = lift(s(t[0] / t[2]), Slot::s13).mat;
        const Mat s23 = lift(s(t[1] / t[2]), Slot::s23).mat;
        return std::make_pair(mat_mul(s12, mat_mul(s13, s23)), mat_mul(s23, mat_mul(s13, s12)));
    };
    if (tgrid.size() > static_cast<std::size_t>(bound)) return grid_verify(job);
    return evaluate_grid(job);
}

inline GridVerdict oneparam_verify(const AlgebraSpec& a, const Rat& q, const std::vector<Rat>& tgrid)
{
    return oneparam_verify(s_oneparam(a, q), tgrid);
}

struct WxzTriple {
    LinOp2 w, x, z;
};

/// W = ab(x)1 + lambda 1(x)ab - b(x)a, Z = mu ab(x)1 + 1(x)ab - b(x)a,
/// X = ab(x)1 + 1(x)ab - b(x)a.
inline WxzTriple wxz_thm38(const AlgebraSpec& a, const Rat& lambda, const Rat& mu)
{
    const VecQ& unit = detail::require_unit(a, "wxz_thm38");
    return {algebra_operator(a, unit, 1, lambda, 0, -1), algebra_operator(a, unit, 1, 1, 0, -1),
            algebra_operator(a, unit, mu, 1, 0, -1)};
}

/// W = R(s,s), X = R(s,t), Z = R(t,t).
inline WxzTriple wxz_from_colored(const ColoredFamily& f, const Rat& s, const Rat& t)
{
    return {f(s, s), f(s, t), f(t, t)};
}

namespace detail {

inline void require_even_central(const SuperLieSpec& l, const VecQ& z, const char* who)
{
    const CenterResult c = center_contains(l, z);
    if (c.reason == CenterReason::not_even) throw PreconditionError(std::string(who) + ": z is not even");
    if (c.reason == CenterReason::not_central) throw PreconditionError(std::string(who) + ": z is not central");
}

inline LinOp2 phi_like(const SuperLieSpec& l, const VecQ& z, const Rat& alpha, bool z_first)
{
    const std::size_t n = l.dim();
    Mat m(n * n, n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const VecQ br = l.bracket_basis(a, b);
            VecQ col = alpha * (z_first ? tensor(z, br) : tensor(br, z));
            col[b * n + a] += sign_pow(l.degree(a) * l.degree(b));
            m.set_col(a * n + b, col);
        }
    return LinOp2(n, std::move(m));
}

} // namespace detail

/// x(x)y |-> alpha [x,y](x)z + (-1)^{|x||y|} y(x)x.
inline LinOp2 phi_super(const SuperLieSpec& l, const VecQ& z, const Rat& alpha)
{
    detail::require_even_central(l, z, "phi_super");
    return detail::phi_like(l, z, alpha, false);
}

/// x(x)y |-> alpha z(x)[x,y] + (-1)^{|x||y|} y(x)x.
inline LinOp2 phi_super_inverse(const SuperLieSpec& l, const VecQ& z, const Rat& alpha)
{
    detail::require_even_central(l, z, "phi_super_inverse");
    return detail::phi_like(l, z, alpha, true);
}

using ColorTable = std::map<Rat, Rat>;

/// R(u,v)(a(x)b) = alpha(u)[a,b](x)z + beta(u)(-1)^{|a||b|} a(x)b;
/// the operator does not depend on v.
inline ColoredFamily r_super_colored(const SuperLieSpec& l, const VecQ& z, const ColorTable& alpha,
                                     const ColorTable& beta, const std::vector<Rat>& colors)
{
    detail::require_even_central(l, z, "r_super_colored");
    if (colors.empty()) throw PreconditionError("r_super_colored: color set is empty");
    for (const auto& x : colors)
        if (!alpha.contains(x) || !beta.contains(x))
            throw PreconditionError("r_super_colored: alpha/beta table has no entry for color " + to_string(x));

    ColoredFamily f;
    f.tag = "superColored";
    f.n = l.dim();
    f.colors = colors;
    f.notes.push_back("R(u,v) depends on u only");
    f.evaluate = [l, z, alpha, beta, colors](const Rat& u, const Rat& v) {
        if (std::find(colors.begin(), colors.end(), u) == colors.end() ||
            std::find(colors.begin(), colors.end(), v) == colors.end())
            throw PreconditionError("r_super_colored: color outside the declared set");
        const std::size_t n = l.dim();
        const Rat& au = alpha.at(u);
        const Rat& bu = beta.at(u);
        Mat m(n * n, n * n);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                VecQ col = au * tensor(l.bracket_basis(a, b), z);
                col[a * n + b] += bu * detail::sign_pow(l.degree(a) * l.degree(b));
                m.set_col(a * n + b, col);
            }
        return LinOp2(n, std::move(m));
    };
    return f;
}

/// {a^2(x)b(x)a, a(x)b(x)a^2} with a = sum s_i e_i, s_i over `grid`, and b over
/// the basis (the family is linear in b). Vectors live in J^{(x)3}.
inline std::vector<VecQ> jordan_spanning_family(const AlgebraSpec& j, const std::vector<Rat>& grid)
{
    const std::size_t n = j.dim();
    std::vector<VecQ> out;
    std::vector<std::size_t> idx(n, 0);
    while (true) {
        VecQ a(n);
        for (std::size_t i = 0; i < n; ++i) a[i] = grid[idx[i]];
        const VecQ a2 = mul_vec(j, a, a);
        for (std::size_t k = 0; k < n; ++k) {
            const VecQ b = VecQ::basis(n, k);
            out.push_back(tensor(tensor(a2, b), a));
            out.push_back(tensor(tensor(a, b), a2));
        }
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (++idx[k] < grid.size()) break;
            idx[k] = 0;
            if (k == 0) return out;
        }
    }
}

/// Re-indexes a vector of J^{(x)3} into (J+)^{(x)3}, J+ = k1 (+) J.
inline VecQ embed3_in_unitalization(const VecQ& v, std::size_t n)
{
    const std::size_t m = n + 1;
    VecQ r(m * m * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) r[((i + 1) * m + (j + 1)) * m + (k + 1)] = v[(i * n + j) * n + k];
    return r;
}

struct RestrictedReport {
    bool restricted = false;
    bool full = false;
    bool unit_adjoined = false;
    std::size_t spanning_rank = 0;
};

/// The algebra the operator is built over: J itself when it has a valid
/// unit, otherwise its unitalization.
inline AlgebraSpec restricted_base(const AlgebraSpec& j) { return has_valid_unit(j) ? j : adjoin_unit(j); }

inline std::vector<VecQ> restricted_spanning_basis(const AlgebraSpec& j)
{
    const auto raw = jordan_spanning_family(j, integer_grid(0, 4));
    if (has_valid_unit(j)) return row_space_basis(raw);
    std::vector<VecQ> embedded;
    embedded.reserve(raw.size());
    for (const auto& v : raw) embedded.push_back(embed3_in_unitalization(v, j.dim()));
    return row_space_basis(embedded);
}

/// Builds R^J_{alpha,beta,gamma} with the associative-case formula over a
/// Jordan algebra and checks the braid equation on the restricted subspace
/// and on the whole of J^{(x)3}.
inline RestrictedReport jordan_r_restricted(const AlgebraSpec& j, const Rat& alpha, const Rat& beta, const Rat& gamma)
{
    if (!is_commutative(j) || !is_jordan_identity(j))
        throw PreconditionError("jordan_r_restricted: algebra is not a Jordan algebra");
    RestrictedReport rep;
    rep.unit_adjoined = !has_valid_unit(j);
    const AlgebraSpec base = restricted_base(j);
    const LinOp2 r = r_algebra(base, alpha, beta, gamma);
    const auto spanning = restricted_spanning_basis(j);
    rep.spanning_rank = spanning.size();
    rep.restricted = restricted_braid_check(r, spanning);
    rep.full = braid_check(r);
    return rep;
}

} // namespace ybforge

#endif // YBFORGE_CONSTRUCTIONS_HPP
