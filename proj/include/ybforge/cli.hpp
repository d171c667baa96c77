#ifndef YBFORGE_CLI_HPP
#define YBFORGE_CLI_HPP

#include <ybforge/constructions.hpp>
#include <ybforge/io.hpp>
#include <ybforge/registry.hpp>
#include <ybforge/report.hpp>
#include <ybforge/wsubspace.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

// Command-line front end. run_cli() is the whole program; tools/ybforge.cpp
// only forwards argv to it so the tests can drive every command in-process.

namespace ybforge::cli {

struct Io {
    std::ostream& out;
    std::ostream& err;
    std::istream& in;
};

namespace detail {

inline bool is_registry_spec(const std::string& s)
{
    const std::string name = s.substr(0, s.find(':'));
    for (const auto& n : example_names())
        if (n == name) return true;
    return false;
}

inline std::vector<Rat> parse_rat_list(const std::string& s)
{
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_rat(tok));
    return out;
}

/// A structure argument is a JSON file path, or a registry name with
/// optional parameters: "split2:1/2", "t21:-1,-1", "theorem22:-1".
inline AnyStructure load_structure(const std::string& source)
{
    if (std::filesystem::exists(source)) return structure_from_json(read_json_file(source));
    if (!is_registry_spec(source)) throw ParseError("no such file or example: '" + source + "'");
    const auto colon = source.find(':');
    const std::string name = source.substr(0, colon);
    ExampleParams p;
    if (colon != std::string::npos) {
        const auto args = parse_rat_list(source.substr(colon + 1));
        if (name == "split2" && args.size() == 1) p.m = args[0];
        else if (name == "t21" && args.size() == 2) {
            p.s = args[0];
            p.t = args[1];
        } else if (name == "theorem22" && args.size() == 1) p.beta = args[0];
        else throw ParseError("bad parameters for example '" + name + "'");
    }
    return make_example(name, p);
}

template <class T>
T load_as(const std::string& source, const char* what)
{
    AnyStructure s = load_structure(source);
    if (auto* x = std::get_if<T>(&s)) return *x;
    throw ParseError("'" + source + "' is not " + what);
}

inline int grid_size(int flag_value, int bound, int fallback)
{
    int size = fallback;
    if (flag_value > 0) size = flag_value;
    else if (const char* env = std::getenv("YBFORGE_GRID")) {
        try {
            std::size_t used = 0;
            size = std::stoi(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            throw ConfigError(std::string("YBFORGE_GRID is not an integer: '") + env + "'");
        }
    }
    if (size < bound + 1)
        throw ConfigError("grid size " + std::to_string(size) + " cannot certify degree bound " + std::to_string(bound) +
                          " (need >= " + std::to_string(bound + 1) + ")");
    return size;
}

inline VecQ parse_z(const SuperLieSpec& l, const std::string& s)
{
    for (std::size_t i = 0; i < l.dim(); ++i)
        if (l.basis()[i] == s) return VecQ::basis(l.dim(), i);
    auto coords = parse_rat_list(s);
    if (coords.size() != l.dim()) throw ParseError("--z must be a basis name or " + std::to_string(l.dim()) + " coordinates");
    return VecQ(std::move(coords));
}

/// "0:1,1:2,2:3"
inline ColorTable parse_table(const std::string& s)
{
    ColorTable t;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto colon = tok.find(':');
        if (colon == std::string::npos) throw ParseError("table entries must look like color:value");
        t[parse_rat(tok.substr(0, colon))] = parse_rat(tok.substr(colon + 1));
    }
    return t;
}

inline json entry_witness(const std::optional<std::pair<std::size_t, std::size_t>>& d, std::size_t n, int arity)
{
    if (!d) return nullptr;
    auto decode = [&](std::size_t idx) {
        json t = json::array();
        std::vector<std::size_t> parts(static_cast<std::size_t>(arity));
        for (int k = arity - 1; k >= 0; --k) {
            parts[static_cast<std::size_t>(k)] = idx % n;
            idx /= n;
        }
        for (auto p : parts) t.push_back(p);
        return t;
    };
    return json{{"row", d->first}, {"col", d->second}, {"row_tensor", decode(d->first)}, {"col_tensor", decode(d->second)}};
}

inline void add_equation(Report& r, const std::string& name, const std::pair<Mat, Mat>& sides, std::size_t n, int arity)
{
    const auto diff = first_difference(sides.first, sides.second);
    auto& rec = r.add(name, !diff.has_value());
    rec.witness = entry_witness(diff, n, arity);
}

inline void add_wxz(Report& r, const WxzTriple& t, const std::string& prefix)
{
    const WxzReport w = wxz_check(t.w, t.x, t.z);
    r.add(prefix + "[W,W,W]=0", w.www);
    r.add(prefix + "[Z,Z,Z]=0", w.zzz);
    r.add(prefix + "[W,X,X]=0", w.wxx);
    r.add(prefix + "[X,X,Z]=0", w.xxz);
}

inline void emit(const Io& io, const Report& r, bool as_json)
{
    if (as_json) io.out << to_json(r).dump(2) << '\n';
    else write_text(io.out, r);
}

inline void write_or_print(const Io& io, const std::string& path, const json& j)
{
    if (path.empty() || path == "-") io.out << j.dump(2) << '\n';
    else write_json_file(path, j);
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, const Io& io)
{
    CLI::App app{"Exact construction and checking of Yang-Baxter operators from algebras, coalgebras and Lie superalgebras", "ybforge"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "Machine-readable JSON report");
    app.set_version_flag("--version", version_string);

    Report report;
    report.command = args;
    // Set by a subcommand that writes raw data (not a report) to stdout.
    bool raw_output = false;
    std::function<void()> action;

    // ---- examples -------------------------------------------------------
    auto* examples = app.add_subcommand("examples", "List or emit the built-in example structures");
    examples->require_subcommand(1);
    auto* ex_list = examples->add_subcommand("list", "List example names");
    ex_list->callback([&] {
        action = [&] {
            report.properties["examples"] = example_names();
            if (!as_json) {
                for (const auto& n : example_names()) io.out << n << '\n';
                raw_output = true;
            }
        };
    });
    std::string emit_name, emit_out, emit_s = "-1", emit_t = "-1", emit_m = "1", emit_beta = "-1";
    auto* ex_emit = examples->add_subcommand("emit", "Write an example structure file");
    ex_emit->add_option("name", emit_name, "Example name")->required();
    ex_emit->add_option("-o,--output", emit_out, "Output file (default: stdout)");
    ex_emit->add_option("--s", emit_s, "t21: coefficient of a in ab");
    ex_emit->add_option("--t", emit_t, "t21: coefficient of b in ab");
    ex_emit->add_option("--m", emit_m, "split2: x^2 = m");
    ex_emit->add_option("--beta", emit_beta, "theorem22: beta");
    ex_emit->callback([&] {
        action = [&] {
            ExampleParams p{parse_rat(emit_s), parse_rat(emit_t), parse_rat(emit_m), parse_rat(emit_beta)};
            const json j = to_json(make_example(emit_name, p));
            detail::write_or_print(io, emit_out, j);
            if (emit_out.empty() || emit_out == "-") raw_output = true;
            else report.properties["wrote"] = emit_out;
        };
    });

    // ---- check ----------------------------------------------------------
    std::string check_file, check_mode = "pattern3";
    std::vector<std::string> check_expect;
    auto* check = app.add_subcommand("check", "Check the axioms of an algebra, coalgebra or Lie structure file");
    check->add_option("file", check_file, "Structure file or example name")->required();
    check->add_option("--jordan-mode", check_mode, "W-subspace mode: pattern3 | symmetrized | full");
    check->add_option("--expect", check_expect,
                      "Properties that must hold (commutative, associative, unital, jordan, cocommutative, "
                      "coassociative, antisym, jacobi, bicharacter)");
    check->callback([&] {
        action = [&] {
            const WMode mode = parse_wmode(check_mode);
            const AnyStructure s = detail::load_structure(check_file);
            auto expect = [&](const std::string& name, bool value) {
                report.properties[name] = value;
                return value;
            };
            auto require_known = [&](std::initializer_list<const char*> known) {
                for (const auto& e : check_expect) {
                    bool ok = false;
                    for (const char* k : known) ok = ok || e == k;
                    if (!ok) throw ParseError("--expect " + e + " does not apply to this structure");
                }
            };
            auto emit_expected = [&](std::vector<std::string> defaults) {
                const auto& list = check_expect.empty() ? defaults : check_expect;
                for (const auto& e : list) report.add(e, report.properties.at(e).get<bool>());
            };

            if (const auto* a = std::get_if<AlgebraSpec>(&s)) {
                require_known({"commutative", "associative", "unital", "jordan"});
                const PropReport p = check_algebra_props(*a);
                expect("commutative", p.commutative);
                expect("associative", p.associative);
                expect("unital", p.unital);
                expect("jordan", p.jordan);
                report.properties["jordan_identity"] = is_jordan_identity(*a);
                emit_expected({"jordan"});
                if (p.commutative)
                    report.add("jordan_w[" + std::string(to_string(mode)) + "]", jordan_w_check(*a, mode));
            } else if (const auto* c = std::get_if<CoalgebraSpec>(&s)) {
                require_known({"cocommutative", "coassociative", "jordan"});
                const CoalgebraProps p = coalgebra_props(*c);
                expect("cocommutative", p.cocommutative);
                expect("coassociative", p.coassociative);
                const bool jco = p.cocommutative && jordan_co_check(*c, mode);
                expect("jordan", jco);
                emit_expected({"coassociative"});
                if (p.cocommutative) report.add("jordan_co[" + std::string(to_string(mode)) + "]", jco);
            } else if (const auto* l = std::get_if<SuperLieSpec>(&s)) {
                require_known({"antisym", "jacobi"});
                const SuperLieReport v = validate_superlie(*l);
                expect("antisym", v.antisym);
                expect("jacobi", v.jacobi);
                emit_expected({"antisym", "jacobi"});
            } else if (const auto* cl = std::get_if<ColorLieSpec>(&s)) {
                require_known({"bicharacter", "antisym", "jacobi"});
                const ColorLieReport v = validate_colorlie(*cl);
                expect("bicharacter", v.bicharacter);
                expect("antisym", v.antisym);
                expect("jacobi", v.jacobi);
                emit_expected({"bicharacter", "antisym", "jacobi"});
            }
        };
    });

    // ---- dualize --------------------------------------------------------
    std::string dual_in, dual_out;
    auto* dual = app.add_subcommand("dualize", "Transpose an algebra into a coalgebra or back");
    dual->add_option("file", dual_in, "Algebra or coalgebra file")->required();
    dual->add_option("-o,--output", dual_out, "Output file")->required();
    dual->callback([&] {
        action = [&] {
            const AnyStructure s = detail::load_structure(dual_in);
            if (const auto* a = std::get_if<AlgebraSpec>(&s)) {
                const CoalgebraSpec c = dualize(*a);
                write_json_file(dual_out, to_json(c));
                const CoalgebraProps cp = coalgebra_props(c);
                report.add("commutative <-> cocommutative", is_commutative(*a) == cp.cocommutative);
                report.add("associative <-> coassociative", is_associative(*a) == cp.coassociative);
                report.properties["cocommutative"] = cp.cocommutative;
                report.properties["coassociative"] = cp.coassociative;
            } else if (const auto* c = std::get_if<CoalgebraSpec>(&s)) {
                const AlgebraSpec a = dualize_co(*c);
                write_json_file(dual_out, to_json(a));
                const CoalgebraProps cp = coalgebra_props(*c);
                report.add("cocommutative <-> commutative", is_commutative(a) == cp.cocommutative);
                report.add("coassociative <-> associative", is_associative(a) == cp.coassociative);
                report.properties["commutative"] = is_commutative(a);
                report.properties["associative"] = is_associative(a);
            } else {
                throw ParseError("dualize expects an algebra or coalgebra file");
            }
            report.properties["wrote"] = dual_out;
        };
    });

    // ---- ybe ------------------------------------------------------------
    auto* ybe = app.add_subcommand("ybe", "Build and verify Yang-Baxter operators");
    ybe->require_subcommand(1);

    struct Flags {
        std::string algebra, lie, out;
        std::string alpha = "1", beta = "1", gamma = "1", p = "1", q = "1", lambda = "1", mu = "1";
        std::string u = "0", v = "1", t = "2", s_color, t_color, z, alpha_table, beta_table, part = "W";
        int grid = 0;
    } f;

    auto* build = ybe->add_subcommand("build", "Write an operator file for a construction");
    std::string build_kind;
    build->add_option("construction", build_kind, "rA | colored | oneparam | wxz38 | phi | phiInverse | superColored")
        ->required();
    build->add_option("--algebra", f.algebra, "Algebra file or example name");
    build->add_option("--lie", f.lie, "Lie superalgebra file or example name");
    build->add_option("--alpha", f.alpha);
    build->add_option("--beta", f.beta);
    build->add_option("--gamma", f.gamma);
    build->add_option("--p", f.p);
    build->add_option("--q", f.q);
    build->add_option("--lambda", f.lambda);
    build->add_option("--mu", f.mu);
    build->add_option("--u", f.u, "First color");
    build->add_option("--v", f.v, "Second color");
    build->add_option("--t", f.t, "oneparam: t = e^lambda");
    build->add_option("--z", f.z, "Central element: basis name or coordinates");
    build->add_option("--alpha-table", f.alpha_table, "superColored: color:value,...");
    build->add_option("--beta-table", f.beta_table, "superColored: color:value,...");
    build->add_option("--part", f.part, "wxz38: W | X | Z");
    build->add_option("-o,--output", f.out, "Output file (default: stdout)");
    build->callback([&] {
        action = [&] {
            LinOp2 op;
            if (build_kind == "rA") {
                op = r_algebra(detail::load_as<AlgebraSpec>(f.algebra, "an algebra"), parse_rat(f.alpha),
                               parse_rat(f.beta), parse_rat(f.gamma));
            } else if (build_kind == "colored") {
                op = r_colored(detail::load_as<AlgebraSpec>(f.algebra, "an algebra"), parse_rat(f.p), parse_rat(f.q))(
                    parse_rat(f.u), parse_rat(f.v));
            } else if (build_kind == "oneparam") {
                op = s_oneparam(detail::load_as<AlgebraSpec>(f.algebra, "an algebra"), parse_rat(f.q))(parse_rat(f.t));
            } else if (build_kind == "wxz38") {
                const auto t = wxz_thm38(detail::load_as<AlgebraSpec>(f.algebra, "an algebra"), parse_rat(f.lambda),
                                         parse_rat(f.mu));
                if (f.part == "W") op = t.w;
                else if (f.part == "X") op = t.x;
                else if (f.part == "Z") op = t.z;
                else throw ParseError("--part must be W, X or Z");
            } else if (build_kind == "phi" || build_kind == "phiInverse") {
                const auto l = detail::load_as<SuperLieSpec>(f.lie, "a Lie superalgebra");
                const VecQ z = detail::parse_z(l, f.z);
                op = build_kind == "phi" ? phi_super(l, z, parse_rat(f.alpha)) : phi_super_inverse(l, z, parse_rat(f.alpha));
            } else if (build_kind == "superColored") {
                const auto l = detail::load_as<SuperLieSpec>(f.lie, "a Lie superalgebra");
                const ColorTable at = detail::parse_table(f.alpha_table), bt = detail::parse_table(f.beta_table);
                std::vector<Rat> colors;
                for (const auto& [k, _] : at) colors.push_back(k);
                op = r_super_colored(l, detail::parse_z(l, f.z), at, bt, colors)(parse_rat(f.u), parse_rat(f.v));
            } else {
                throw ParseError("unknown construction '" + build_kind + "'");
            }
            detail::write_or_print(io, f.out, to_json(op));
            if (f.out.empty() || f.out == "-") raw_output = true;
            else report.properties["wrote"] = f.out;
        };
    });

    std::string verify_file;
    bool v_braid = false, v_qybe = false, v_inv = false, v_equiv = false;
    auto* verify = ybe->add_subcommand("verify", "Verify an operator file (default: braid and invertibility)");
    verify->add_option("file", verify_file, "Operator file (default: stdin)");
    verify->add_flag("--braid", v_braid, "R12 R23 R12 = R23 R12 R23");
    verify->add_flag("--qybe", v_qybe, "R12 R13 R23 = R23 R13 R12");
    verify->add_flag("--invertible", v_inv, "R is invertible");
    verify->add_flag("--equiv", v_equiv, "braid(R) <-> QYBE(R o tau) <-> QYBE(tau o R)");
    verify->callback([&] {
        action = [&] {
            const json j = verify_file.empty() || verify_file == "-" ? parse_json_text(io.in) : read_json_file(verify_file);
            const LinOp2 r = linop2_from_json(j);
            if (!v_braid && !v_qybe && !v_inv && !v_equiv) v_braid = v_inv = true;
            if (v_braid) detail::add_equation(report, "braid", braid_sides(r), r.n, 3);
            if (v_qybe) detail::add_equation(report, "qybe", qybe_sides(r), r.n, 3);
            if (v_inv) report.add("invertible", mat_inverse(r.mat).has_value());
            if (v_equiv) report.add("braid <-> qybe(R o tau) <-> qybe(tau o R)", braid_qybe_equiv(r));
        };
    });

    auto* colored = ybe->add_subcommand("colored", "Colored QYBE for p(u-v)1(x)ab + q(u-v)ab(x)1 - (pu-qv)b(x)a");
    colored->add_option("--algebra", f.algebra)->required();
    colored->add_option("--p", f.p);
    colored->add_option("--q", f.q);
    colored->add_option("--grid", f.grid, "Points per color variable (colors 0..N-1)");
    colored->add_option("--s", f.s_color, "Also check the WXZ-system R(s,s), R(s,t), R(t,t)");
    colored->add_option("--t", f.t_color);
    colored->callback([&] {
        action = [&] {
            const auto a = detail::load_as<AlgebraSpec>(f.algebra, "an algebra");
            const int size = detail::grid_size(f.grid, degree_bound("colored", "u"), 4);
            const ColoredFamily fam = r_colored(a, parse_rat(f.p), parse_rat(f.q));
            const GridVerdict v = colored_qybe_verify(fam, integer_grid(0, static_cast<std::size_t>(size)));
            add_grid_record(report, "colored_qybe", v, "colors 0.." + std::to_string(size - 1));
            report.properties["grid_spec"] = grid_spec_json(v);
            if (!f.s_color.empty() || !f.t_color.empty())
                detail::add_wxz(report, wxz_from_colored(fam, parse_rat(f.s_color.empty() ? "0" : f.s_color),
                                                         parse_rat(f.t_color.empty() ? "1" : f.t_color)),
                                "wxz ");
        };
    });

    auto* oneparam = ybe->add_subcommand("oneparam", "One-parameter YBE for S(t), t = e^lambda");
    oneparam->add_option("--algebra", f.algebra)->required();
    oneparam->add_option("--q", f.q);
    oneparam->add_option("--grid", f.grid, "t-grid size (t = 1..N)");
    oneparam->callback([&] {
        action = [&] {
            const auto a = detail::load_as<AlgebraSpec>(f.algebra, "an algebra");
            const int size = detail::grid_size(f.grid, degree_bound("oneparam", "t1"), 7);
            const GridVerdict v = oneparam_verify(a, parse_rat(f.q), integer_grid(1, static_cast<std::size_t>(size)));
            add_grid_record(report, "oneparam_ybe", v, "t = 1.." + std::to_string(size));
            report.properties["grid_spec"] = grid_spec_json(v);
        };
    });

    auto* wxz38 = ybe->add_subcommand("wxz38", "WXZ-system ab(x)1 + lambda 1(x)ab - b(x)a, ...");
    wxz38->add_option("--algebra", f.algebra)->required();
    wxz38->add_option("--lambda", f.lambda);
    wxz38->add_option("--mu", f.mu);
    wxz38->callback([&] {
        action = [&] {
            const auto a = detail::load_as<AlgebraSpec>(f.algebra, "an algebra");
            detail::add_wxz(report, wxz_thm38(a, parse_rat(f.lambda), parse_rat(f.mu)), "");
        };
    });

    auto* phi = ybe->add_subcommand("phi", "alpha [x,y](x)z + (-1)^{|x||y|} y(x)x on a Lie superalgebra");
    phi->add_option("--lie", f.lie)->required();
    phi->add_option("--z", f.z, "Even central element")->required();
    phi->add_option("--alpha", f.alpha);
    phi->callback([&] {
        action = [&] {
            const auto l = detail::load_as<SuperLieSpec>(f.lie, "a Lie superalgebra");
            const VecQ z = detail::parse_z(l, f.z);
            const Rat alpha = parse_rat(f.alpha);
            const LinOp2 op = phi_super(l, z, alpha);
            detail::add_equation(report, "braid", braid_sides(op), op.n, 3);
            report.add("invertible", mat_inverse(op.mat).has_value());
            const LinOp2 inv = phi_super_inverse(l, z, alpha);
            report.add("phi o phi_inverse = I", compose(op, inv) == identity2(op.n));
        };
    });

    auto* super_colored = ybe->add_subcommand("superColored", "Colored QYBE for alpha(u)[a,b](x)z + beta(u)(-1)^{|a||b|} a(x)b");
    super_colored->add_option("--lie", f.lie)->required();
    super_colored->add_option("--z", f.z)->required();
    super_colored->add_option("--alpha-table", f.alpha_table, "color:value,...; its colors form the color set")->required();
    super_colored->add_option("--beta-table", f.beta_table, "color:value,...")->required();
    super_colored->add_option("--s", f.s_color, "Also check the WXZ-system R(s,s), R(s,t), R(t,t)");
    super_colored->add_option("--t", f.t_color);
    super_colored->callback([&] {
        action = [&] {
            const auto l = detail::load_as<SuperLieSpec>(f.lie, "a Lie superalgebra");
            const ColorTable at = detail::parse_table(f.alpha_table), bt = detail::parse_table(f.beta_table);
            std::vector<Rat> colors;
            for (const auto& [k, _] : at) colors.push_back(k);
            const ColoredFamily fam = r_super_colored(l, detail::parse_z(l, f.z), at, bt, colors);
            const GridVerdict v = colored_qybe_verify(fam, colors);
            add_grid_record(report, "colored_qybe", v, "exhaustive over the color set; R(u,v) depends on u only");
            if (!f.s_color.empty() && !f.t_color.empty())
                detail::add_wxz(report, wxz_from_colored(fam, parse_rat(f.s_color), parse_rat(f.t_color)), "wxz ");
        };
    });

    auto* jr = ybe->add_subcommand("jordanRestricted", "Braid equation of R^J restricted to <a^2(x)b(x)a, a(x)b(x)a^2>");
    jr->add_option("--algebra", f.algebra)->required();
    jr->add_option("--alpha", f.alpha);
    jr->add_option("--beta", f.beta);
    jr->add_option("--gamma", f.gamma);
    jr->callback([&] {
        action = [&] {
            const auto j = detail::load_as<AlgebraSpec>(f.algebra, "an algebra");
            const RestrictedReport r = jordan_r_restricted(j, parse_rat(f.alpha), parse_rat(f.beta), parse_rat(f.gamma));
            report.add("restricted_braid", r.restricted);
            report.properties["full_braid"] = r.full;
            report.properties["unit_adjoined"] = r.unit_adjoined;
            report.properties["spanning_rank"] = r.spanning_rank;
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e, io.out, io.err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, io.out, io.err);
        return 2;
    }

    try {
        if (action) action();
    } catch (const std::exception& e) {
        // ParseError, PreconditionError, ShapeError, ConfigError: bad input.
        report.input_error = e.what();
    }

    if (report.input_error) {
        if (as_json) io.out << to_json(report).dump(2) << '\n';
        else io.err << "error: " << *report.input_error << '\n';
        return 2;
    }
    if (!raw_output) detail::emit(io, report, as_json);
    return report.exit_status();
}

inline int run_cli(const std::vector<std::string>& args)
{
    return run_cli(args, Io{std::cout, std::cerr, std::cin});
}

} // namespace ybforge::cli

#endif // YBFORGE_CLI_HPP
