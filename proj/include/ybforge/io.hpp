#ifndef YBFORGE_IO_HPP
#define YBFORGE_IO_HPP

#include <ybforge/algebra.hpp>
#include <ybforge/errors.hpp>
#include <ybforge/lie.hpp>
#include <ybforge/operator.hpp>
#include <ybforge/registry.hpp>

#include <json.hpp>

#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

// JSON file formats. Rationals are always written as canonical "p/q" strings;
// integer JSON numbers are accepted on input.

namespace ybforge {

using json = nlohmann::json;

inline constexpr const char* algebra_convention = "table[i][j][k] is the e_k-coefficient of e_i e_j";
inline constexpr const char* coalgebra_convention = "table[k][i][j] is the e_i(x)e_j-coefficient of eta(e_k)";
inline constexpr const char* lie_convention = "table[i][j][k] is the e_k-coefficient of [e_i,e_j]";
inline constexpr const char* linop2_convention =
    "mat[r][c]: e_i(x)e_j has index i*n+j; column c holds the image of basis tensor c";

inline json rat_to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const json& j)
{
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw ParseError("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

inline json vec_to_json(const VecQ& v)
{
    json a = json::array();
    for (const auto& c : v.coords()) a.push_back(rat_to_json(c));
    return a;
}

inline VecQ vec_from_json(const json& j, std::size_t dim, const char* what)
{
    if (!j.is_array() || j.size() != dim)
        throw ParseError(std::string(what) + " must be an array of " + std::to_string(dim) + " rationals");
    VecQ v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rat_from_json(j[i]);
    return v;
}

namespace detail {

inline json table_to_json(const std::vector<Rat>& table, std::size_t n)
{
    json t = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < n; ++j) {
            json cell = json::array();
            for (std::size_t k = 0; k < n; ++k) cell.push_back(rat_to_json(table[(i * n + j) * n + k]));
            row.push_back(std::move(cell));
        }
        t.push_back(std::move(row));
    }
    return t;
}

inline std::vector<Rat> table_from_json(const json& t, std::size_t n)
{
    if (!t.is_array() || t.size() != n) throw ParseError("table must be an n x n x n array");
    std::vector<Rat> out(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!t[i].is_array() || t[i].size() != n) throw ParseError("table must be an n x n x n array");
        for (std::size_t j = 0; j < n; ++j) {
            if (!t[i][j].is_array() || t[i][j].size() != n) throw ParseError("table must be an n x n x n array");
            for (std::size_t k = 0; k < n; ++k) out[(i * n + j) * n + k] = rat_from_json(t[i][j][k]);
        }
    }
    return out;
}

inline std::size_t read_dim(const json& j)
{
    if (!j.contains("dim") || !j["dim"].is_number_unsigned() || j["dim"].get<std::size_t>() == 0)
        throw ParseError("\"dim\" must be a positive integer");
    return j["dim"].get<std::size_t>();
}

inline std::vector<std::string> read_basis(const json& j, std::size_t n)
{
    if (!j.contains("basis")) {
        std::vector<std::string> b;
        for (std::size_t i = 0; i < n; ++i) b.push_back("e" + std::to_string(i));
        return b;
    }
    const json& b = j["basis"];
    if (!b.is_array() || b.size() != n) throw ParseError("\"basis\" must list dim names");
    std::vector<std::string> out;
    for (const auto& s : b) {
        if (!s.is_string()) throw ParseError("basis names must be strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

inline const json& require(const json& j, const char* key)
{
    if (!j.contains(key)) throw ParseError(std::string("missing \"") + key + "\"");
    return j[key];
}

} // namespace detail

inline json to_json(const AlgebraSpec& a)
{
    json j{{"kind", "algebra"},
           {"dim", a.dim()},
           {"basis", a.basis()},
           {"convention", algebra_convention},
           {"table", detail::table_to_json(a.table(), a.dim())}};
    if (a.unit()) j["unit"] = vec_to_json(*a.unit());
    return j;
}

inline json to_json(const CoalgebraSpec& c)
{
    json j{{"kind", "coalgebra"},
           {"dim", c.dim()},
           {"basis", c.basis()},
           {"convention", coalgebra_convention},
           {"table", detail::table_to_json(c.table(), c.dim())}};
    if (c.counit()) j["counit"] = vec_to_json(*c.counit());
    return j;
}

inline json to_json(const SuperLieSpec& l)
{
    return json{{"kind", "superlie"},
                {"dim", l.dim()},
                {"basis", l.basis()},
                {"grading", l.grading()},
                {"convention", lie_convention},
                {"table", detail::table_to_json(l.table(), l.dim())}};
}

inline json to_json(const ColorLieSpec& l)
{
    const std::size_t order = l.group_order();
    json values = json::array();
    for (std::size_t a = 0; a < order; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < order; ++b) row.push_back(rat_to_json(l.theta(a, b)));
        values.push_back(std::move(row));
    }
    return json{{"kind", "colorlie"},
                {"dim", l.dim()},
                {"basis", l.basis()},
                {"group", l.moduli()},
                {"grading", l.grading()},
                {"theta", {{"order", "mixed-radix, first component most significant"}, {"values", values}}},
                {"convention", lie_convention},
                {"table", detail::table_to_json(l.table(), l.dim())}};
}

inline json to_json(const AnyStructure& s)
{
    return std::visit([](const auto& x) { return to_json(x); }, s);
}

inline AnyStructure structure_from_json(const json& j)
{
    try {
        if (!j.is_object()) throw ParseError("structure file must be a JSON object");
        const std::string kind = detail::require(j, "kind").get<std::string>();
        const std::size_t n = detail::read_dim(j);
        auto basis = detail::read_basis(j, n);
        auto table = detail::table_from_json(detail::require(j, "table"), n);

        if (kind == "algebra") {
            std::optional<VecQ> unit;
            if (j.contains("unit")) unit = vec_from_json(j["unit"], n, "\"unit\"");
            return AlgebraSpec(std::move(basis), std::move(table), std::move(unit));
        }
        if (kind == "coalgebra") {
            std::optional<VecQ> counit;
            if (j.contains("counit")) counit = vec_from_json(j["counit"], n, "\"counit\"");
            return CoalgebraSpec(std::move(basis), std::move(table), std::move(counit));
        }
        if (kind == "superlie") {
            auto grading = detail::require(j, "grading").get<std::vector<int>>();
            return SuperLieSpec(std::move(basis), std::move(grading), std::move(table));
        }
        if (kind == "colorlie") {
            auto moduli = detail::require(j, "group").get<std::vector<int>>();
            auto grading = detail::require(j, "grading").get<std::vector<std::vector<int>>>();
            const json& values = detail::require(detail::require(j, "theta"), "values");
            std::vector<Rat> theta;
            for (const auto& row : values)
                for (const auto& v : row) theta.push_back(rat_from_json(v));
            return ColorLieSpec(std::move(basis), std::move(moduli), std::move(grading), std::move(theta),
                                std::move(table));
        }
        throw ParseError("unknown kind '" + kind + "'");
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed structure file: ") + e.what());
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

inline json to_json(const LinOp2& r)
{
    json rows = json::array();
    for (std::size_t i = 0; i < r.mat.rows(); ++i) rows.push_back(vec_to_json(r.mat.row(i)));
    return json{{"kind", "linop2"}, {"n", r.n}, {"convention", linop2_convention}, {"mat", rows}};
}

inline LinOp2 linop2_from_json(const json& j)
{
    try {
        if (!j.is_object() || j.value("kind", "") != "linop2") throw ParseError("operator file must have kind \"linop2\"");
        const std::size_t n = detail::require(j, "n").get<std::size_t>();
        if (n == 0) throw ParseError("\"n\" must be positive");
        const json& rows = detail::require(j, "mat");
        const std::size_t d = n * n;
        if (!rows.is_array() || rows.size() != d) throw ParseError("\"mat\" must have n^2 rows");
        Mat m(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            const VecQ row = vec_from_json(rows[i], d, "operator row");
            for (std::size_t k = 0; k < d; ++k) m(i, k) = row[k];
        }
        return LinOp2(n, std::move(m));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed operator file: ") + e.what());
    }
}

inline json parse_json_text(std::istream& is)
{
    try {
        return json::parse(is);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return parse_json_text(in);
}

inline void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace ybforge

#endif // YBFORGE_IO_HPP
