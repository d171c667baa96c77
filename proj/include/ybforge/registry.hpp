#ifndef YBFORGE_REGISTRY_HPP
#define YBFORGE_REGISTRY_HPP

#include <ybforge/algebra.hpp>
#include <ybforge/lie.hpp>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

// Named example structures used by the tests and the CLI.

namespace ybforge {

using AnyStructure = std::variant<AlgebraSpec, CoalgebraSpec, SuperLieSpec, ColorLieSpec>;

/// Q[X]/(X^2), basis (1, x).
inline AlgebraSpec dual2()
{
    AlgebraSpec a({"1", "x"});
    a.set(0, 0, VecQ{1, 0});
    a.set(0, 1, VecQ{0, 1});
    a.set(1, 0, VecQ{0, 1});
    a.set(1, 1, VecQ{0, 0});
    a.set_unit(VecQ{1, 0});
    return a;
}

/// Q[X]/(X^2 - m), basis (1, x).
inline AlgebraSpec split2(const Rat& m)
{
    AlgebraSpec a({"1", "x"});
    a.set(0, 0, VecQ{1, 0});
    a.set(0, 1, VecQ{0, 1});
    a.set(1, 0, VecQ{0, 1});
    a.set(1, 1, VecQ{m, 0});
    a.set_unit(VecQ{1, 0});
    return a;
}

/// 2x2 matrices, basis (E11, E12, E21, E22).
inline AlgebraSpec mat2()
{
    AlgebraSpec a({"E11", "E12", "E21", "E22"});
    // E_ij = basis index 2*i + j; E_ij E_kl = delta_jk E_il
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l)
                    if (j == k) a.c(2 * i + j, 2 * k + l, 2 * i + l) = 1;
    a.set_unit(VecQ{1, 0, 0, 1});
    return a;
}

inline AlgebraSpec t21(const Rat& s, const Rat& t) { return theorem21_instance(s, t); }

/// Symmetric 2x2 matrices under a o b = (ab + ba)/2, basis (E11, E22, S)
/// with S = E12 + E21.
inline AlgebraSpec sym2jordan()
{
    AlgebraSpec a({"E11", "E22", "S"});
    const Rat half(1, 2);
    a.set(0, 0, VecQ{1, 0, 0});
    a.set(1, 1, VecQ{0, 1, 0});
    a.set(0, 1, VecQ{0, 0, 0});
    a.set(1, 0, VecQ{0, 0, 0});
    a.set(0, 2, VecQ{0, 0, half});
    a.set(2, 0, VecQ{0, 0, half});
    a.set(1, 2, VecQ{0, 0, half});
    a.set(2, 1, VecQ{0, 0, half});
    a.set(2, 2, VecQ{1, 1, 0});
    a.set_unit(VecQ{1, 1, 0});
    return a;
}

/// Heisenberg Lie algebra: x, y, z all even, [x,y] = z = -[y,x].
inline SuperLieSpec heis3()
{
    std::vector<Rat> table(27);
    table[(0 * 3 + 1) * 3 + 2] = 1;
    table[(1 * 3 + 0) * 3 + 2] = -1;
    return SuperLieSpec({"x", "y", "z"}, {0, 0, 0}, std::move(table));
}

/// gl(1|1): E11, E22 even, E12, E21 odd, [a,b] = ab - (-1)^{|a||b|} ba.
inline SuperLieSpec gl11()
{
    // Basis index -> matrix unit (row, col).
    const int row[4] = {0, 1, 0, 1};
    const int col[4] = {0, 1, 1, 0};
    const std::vector<int> grading{0, 0, 1, 1};
    auto index_of = [&](int r, int c) {
        for (std::size_t k = 0; k < 4; ++k)
            if (row[k] == r && col[k] == c) return k;
        return std::size_t{0};
    };
    std::vector<Rat> table(64);
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = 0; b < 4; ++b) {
            const int sign = (grading[a] * grading[b]) % 2 == 0 ? 1 : -1;
            if (col[a] == row[b]) table[(a * 4 + b) * 4 + index_of(row[a], col[b])] += 1;
            if (col[b] == row[a]) table[(a * 4 + b) * 4 + index_of(row[b], col[a])] -= sign;
        }
    return SuperLieSpec({"E11", "E22", "E12", "E21"}, grading, std::move(table));
}

inline CoalgebraSpec theorem22(const Rat& beta) { return theorem22_instance(beta); }

struct ExampleParams {
    Rat s = -1, t = -1, m = 1, beta = -1;
};

inline const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> names{"dual2", "split2", "mat2",  "t21",
                                                "sym2jordan", "heis3", "gl11", "theorem22"};
    return names;
}

inline AnyStructure make_example(std::string_view name, const ExampleParams& p = {})
{
    if (name == "dual2") return dual2();
    if (name == "split2") return split2(p.m);
    if (name == "mat2") return mat2();
    if (name == "t21") return t21(p.s, p.t);
    if (name == "sym2jordan") return sym2jordan();
    if (name == "heis3") return heis3();
    if (name == "gl11") return gl11();
    if (name == "theorem22") return theorem22(p.beta);
    throw PreconditionError("unknown example '" + std::string(name) + "'");
}

} // namespace ybforge

#endif // YBFORGE_REGISTRY_HPP
