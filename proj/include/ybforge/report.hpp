#ifndef YBFORGE_REPORT_HPP
#define YBFORGE_REPORT_HPP

#include <ybforge/io.hpp>
#include <ybforge/paramgrid.hpp>

#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ybforge {

inline constexpr const char* version_string = "0.1.0";

struct CheckRecord {
    std::string name;
    bool verdict = false;
    std::optional<bool> certified;
    json witness;  // null when absent
    std::string notes;
};

/// exit status: 0 iff every verdict is true, 1 if any is false, 2 on input error.
struct Report {
    std::vector<std::string> command;
    std::vector<CheckRecord> checks;
    json properties = json::object();
    std::optional<std::string> input_error;

    int exit_status() const
    {
        if (input_error) return 2;
        for (const auto& c : checks)
            if (!c.verdict) return 1;
        return 0;
    }

    CheckRecord& add(std::string name, bool verdict, std::string notes = {})
    {
        checks.push_back({std::move(name), verdict, std::nullopt, nullptr, std::move(notes)});
        return checks.back();
    }
};

inline json grid_spec_json(const GridVerdict& v)
{
    json g = json::array();
    for (const auto& c : v.certificate)
        g.push_back({{"variable", c.variable}, {"grid_size", c.grid_size}, {"degree_bound", c.degree_bound}});
    return g;
}

inline json grid_witness_json(const GridVerdict& v)
{
    if (!v.witness) return nullptr;
    json w = json::object();
    for (std::size_t i = 0; i < v.witness->size() && i < v.certificate.size(); ++i)
        w[v.certificate[i].variable] = to_string((*v.witness)[i]);
    return w;
}

/// Check record for a grid verification, with the grid certificate alongside.
inline CheckRecord& add_grid_record(Report& r, std::string name, const GridVerdict& v, std::string notes = {})
{
    auto& rec = r.add(std::move(name), v.verdict, std::move(notes));
    rec.certified = v.certified;
    rec.witness = grid_witness_json(v);
    return rec;
}

inline json to_json(const CheckRecord& c)
{
    json j{{"name", c.name}, {"verdict", c.verdict}};
    if (c.certified) j["certified"] = *c.certified;
    if (!c.witness.is_null()) j["witness"] = c.witness;
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

inline json to_json(const Report& r)
{
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    json j{{"tool", "ybforge"}, {"version", version_string}, {"command", r.command}, {"checks", checks}};
    if (!r.properties.empty()) j["properties"] = r.properties;
    if (r.input_error) j["error"] = *r.input_error;
    j["exit_status"] = r.exit_status();
    return j;
}

inline void write_text(std::ostream& os, const Report& r)
{
    if (r.input_error) {
        os << "error: " << *r.input_error << '\n';
        return;
    }
    for (const auto& [key, value] : r.properties.items())
        os << "  " << std::left << std::setw(28) << key << (value.is_string() ? value.get<std::string>() : value.dump())
           << '\n';
    for (const auto& c : r.checks) {
        os << (c.verdict ? "PASS " : "FAIL ") << std::left << std::setw(28) << c.name;
        if (c.certified && c.verdict) os << (*c.certified ? " certified" : " uncertified");
        if (!c.witness.is_null()) os << " witness=" << c.witness.dump();
        if (!c.notes.empty()) os << "  (" << c.notes << ')';
        os << '\n';
    }
}

} // namespace ybforge

#endif // YBFORGE_REPORT_HPP
