#ifndef YBFORGE_PARAMGRID_HPP
#define YBFORGE_PARAMGRID_HPP

#include <ybforge/errors.hpp>
#include <ybforge/matrix.hpp>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Deterministic identity testing on tensor grids.
//
// A polynomial in variables x_1..x_m whose degree in each x_i is at most d_i
// and which vanishes on a product grid S_1 x ... x S_m with |S_i| > d_i is the
// zero polynomial (induct on m; a univariate polynomial of degree d with more
// than d roots is zero). So a clean sweep over such a grid is a proof.

namespace ybforge {

struct GridVariable {
    std::string name;
    int degree_bound = 0;
    std::vector<Rat> grid;
};

struct IdentityJob {
    using Evaluator = std::function<std::pair<Mat, Mat>(std::span<const Rat>)>;

    std::string description;
    std::vector<GridVariable> variables;
    Evaluator evaluator;
};

struct GridCertificate {
    std::string variable;
    std::size_t grid_size = 0;
    int degree_bound = 0;
};

struct GridVerdict {
    bool verdict = false;
    /// True only when the verdict is true and every grid exceeds its bound.
    bool certified = false;
    std::optional<std::vector<Rat>> witness;
    std::vector<GridCertificate> certificate;
    std::size_t points_checked = 0;
};

namespace detail {

inline void require_distinct(const GridVariable& v)
{
    for (std::size_t i = 0; i < v.grid.size(); ++i)
        for (std::size_t j = i + 1; j < v.grid.size(); ++j)
            if (v.grid[i] == v.grid[j])
                throw ConfigError("grid for '" + v.name + "' has repeated point " + to_string(v.grid[i]));
}

} // namespace detail

/// Evaluates the job at every grid point (first variable varies slowest) and
/// stops at the first failure. Does not certify anything.
inline GridVerdict evaluate_grid(const IdentityJob& job)
{
    GridVerdict out;
    for (const auto& v : job.variables) {
        detail::require_distinct(v);
        out.certificate.push_back({v.name, v.grid.size(), v.degree_bound});
        if (v.grid.empty()) {
            out.verdict = true;
            return out;
        }
    }

    const std::size_t m = job.variables.size();
    std::vector<std::size_t> idx(m, 0);
    std::vector<Rat> point(m);
    while (true) {
        for (std::size_t i = 0; i < m; ++i) point[i] = job.variables[i].grid[idx[i]];
        auto [lhs, rhs] = job.evaluator(point);
        ++out.points_checked;
        if (!(lhs == rhs)) {
            out.verdict = false;
            out.witness = point;
            return out;
        }
        std::size_t k = m;
        while (k > 0) {
            --k;
            if (++idx[k] < job.variables[k].grid.size()) break;
            idx[k] = 0;
            if (k == 0) {
                out.verdict = true;
                return out;
            }
        }
        if (m == 0) {
            out.verdict = true;
            return out;
        }
    }
}

/// Certified grid verification. Refuses (ConfigError) when some grid has no
/// more points than its variable's degree bound.
inline GridVerdict grid_verify(const IdentityJob& job)
{
    for (const auto& v : job.variables) {
        if (v.degree_bound < 0) throw ConfigError("negative degree bound for '" + v.name + "'");
        if (v.grid.size() < static_cast<std::size_t>(v.degree_bound) + 1)
            throw ConfigError("grid for '" + v.name + "' has " + std::to_string(v.grid.size()) +
                              " points; degree bound " + std::to_string(v.degree_bound) + " needs at least " +
                              std::to_string(v.degree_bound + 1));
    }
    GridVerdict out = evaluate_grid(job);
    out.certified = out.verdict;
    return out;
}

struct DegreeBound {
    std::string variable;
    int bound;
};

/// Conservative per-variable degree bounds of the defect of each checked identity.
///
/// rA-braid: every entry of R^A_{a,b,c} is linear in (a, b, c), lifts keep
///   that, and each side of the braid equation is a triple product: <= 3.
/// colored: entries of R(u,v) are p(u-v), q(u-v), pu-qv or 0, so degree <= 1
///   in each of u, v, w, p, q per factor; triple products: <= 3.
/// oneparam: S(t_i/t_j) times t_j has entries of degree <= 1 in t_i and t_j;
///   after clearing denominators each t occurs in two factors (<= 2) and q in
///   three (<= 3). Stated as 6 to leave room for other clearings.
/// wxz38: W linear in lambda, Z linear in mu, X constant; [W,W,W] and [Z,Z,Z]
///   are cubic: <= 3.
/// jordan-identity: (x^2 y) x - x^2 (y x) is cubic in x, so 3 in each
///   coordinate of x.
/// phi: phi_alpha is linear in alpha; braid sides are triple products: <= 3.
inline std::vector<DegreeBound> degree_bounds(std::string_view tag)
{
    if (tag == "rA-braid") return {{"alpha", 3}, {"beta", 3}, {"gamma", 3}};
    if (tag == "colored") return {{"u", 3}, {"v", 3}, {"w", 3}, {"p", 3}, {"q", 3}};
    if (tag == "oneparam") return {{"t1", 6}, {"t2", 6}, {"t3", 6}, {"q", 6}};
    if (tag == "wxz38") return {{"lambda", 3}, {"mu", 3}};
    if (tag == "jordan-identity") return {{"x", 3}};
    if (tag == "phi") return {{"alpha", 3}};
    throw PreconditionError("unknown construction tag '" + std::string(tag) + "'");
}

inline int degree_bound(std::string_view tag, std::string_view variable)
{
    for (const auto& b : degree_bounds(tag))
        if (b.variable == variable) return b.bound;
    throw PreconditionError("tag '" + std::string(tag) + "' has no variable '" + std::string(variable) + "'");
}

/// {start, start+1, ..., start+size-1}
inline std::vector<Rat> integer_grid(long start, std::size_t size)
{
    std::vector<Rat> g;
    g.reserve(size);
    for (std::size_t i = 0; i < size; ++i) g.emplace_back(start + static_cast<long>(i));
    return g;
}

} // namespace ybforge

#endif // YBFORGE_PARAMGRID_HPP
