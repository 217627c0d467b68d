#include "lgwb/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lgwb {

namespace {

void dump(const Json& j, std::string& out, int indent, int level)
{
    const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ",\n";
            first = false;
            out += pad + Json(it.key()).dump() + ": ";
            dump(it.value(), out, indent, level + 1);
        }
        out += "\n" + close_pad + "}";
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        // Arrays of scalars stay on one line, and so do short arrays of them
        // (complex vectors, small matrices).
        auto scalars = [](const Json& a) {
            return std::all_of(a.begin(), a.end(), [](const Json& e) { return e.is_primitive(); });
        };
        const bool flat = scalars(j) || (j.size() <= 3 && std::all_of(j.begin(), j.end(), [&](const Json& e) {
                                             return e.is_array() && scalars(e);
                                         }));
        out += flat ? "[" : "[\n";
        bool first = true;
        for (const auto& e : j) {
            if (!first) out += flat ? ", " : ",\n";
            first = false;
            if (!flat) out += pad;
            dump(e, out, indent, level + 1);
        }
        out += flat ? "]" : "\n" + close_pad + "]";
        return;
    }
    case Json::value_t::number_float: {
        const double x = j.get<double>();
        if (!std::isfinite(x)) {
            out += "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        std::string s = buf;
        if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
        out += s;
        return;
    }
    default:
        out += j.dump();
    }
}

} // namespace

std::string dump_report(const Json& j)
{
    std::string out;
    dump(j, out, 2, 0);
    out += "\n";
    return out;
}

Json to_json(const Complex& c)
{
    return Json::array({c.real(), c.imag()});
}

Json to_json(const LatticePolytope& p)
{
    Json facets = Json::array();
    for (const auto& f : p.facets()) {
        Json jf;
        jf["normal"] = f.normal;
        jf["two_pi_alpha"] = to_string(f.offset);
        facets.push_back(std::move(jf));
    }
    Json j;
    j["name"] = p.name();
    j["dim"] = p.dim();
    j["facets"] = std::move(facets);
    Json verts = Json::array();
    for (const auto& v : p.vertices()) {
        Json coords = Json::array();
        for (const auto& c : v.coords) coords.push_back(to_string(c));
        verts.push_back(std::move(coords));
    }
    j["vertices"] = std::move(verts);
    const auto delzant = is_delzant(p);
    j["delzant"] = delzant.delzant;
    if (!delzant.delzant) j["delzant_diagnostic"] = delzant.diagnostic;
    j["monotone"] = is_monotone(p);
    if (!p.redundant_facets().empty()) j["redundant_facets"] = p.redundant_facets();
    return j;
}

Json to_json(const Superpotential& w)
{
    Json j;
    j["chart"] = w.chart;
    j["variables"] = w.variables;
    Json params = Json::array();
    for (const auto& p : w.parameters) {
        Json jp;
        jp["name"] = p.name;
        jp["definition"] = p.definition;
        jp["value"] = p.value;
        params.push_back(std::move(jp));
    }
    j["parameters"] = std::move(params);
    if (w.exact) j["text"] = to_string(*w.exact, w.ring());
    j["numeric_text"] = to_string(w.numeric, w.ring());
    return j;
}

Json to_json(const CriticalPoint& p)
{
    Json j;
    Json z = Json::array();
    for (const auto& c : p.z) z.push_back(to_json(c));
    j["z"] = std::move(z);
    j["value"] = to_json(p.value);
    j["residual"] = p.residual;
    if (p.in_domain) {
        j["in_domain"] = *p.in_domain;
    } else {
        j["in_domain"] = nullptr;
    }
    j["basin_count"] = p.basin_count;
    j["degenerate"] = p.degenerate;
    return j;
}

Json to_json(const MultisetMatch& m)
{
    Json j;
    Json pairs = Json::array();
    for (const auto& p : m.pairs) {
        Json jp;
        jp["a"] = to_json(p.a);
        jp["b"] = to_json(p.b);
        jp["distance"] = p.distance;
        pairs.push_back(std::move(jp));
    }
    j["pairs"] = std::move(pairs);
    j["max_distance"] = m.max_distance;
    Json ua = Json::array(), ub = Json::array();
    for (const auto& c : m.unmatched_a) ua.push_back(to_json(c));
    for (const auto& c : m.unmatched_b) ub.push_back(to_json(c));
    j["unmatched_a"] = std::move(ua);
    j["unmatched_b"] = std::move(ub);
    return j;
}

Json to_json(const SolverConfig& cfg)
{
    Json j;
    j["grid_angles"] = cfg.grid_angles;
    j["newton_tol"] = cfg.newton_tol;
    j["max_iter"] = cfg.max_iter;
    j["dedup_tol"] = cfg.dedup_tol;
    j["seed"] = cfg.rng_seed;
    j["grid_radii"] = cfg.grid_radii;
    return j;
}

Json to_json(const GluingVerdict& v, const Ring& ring)
{
    Json j;
    j["identity_holds"] = v.identity_holds;
    j["transformed"] = to_string(v.transformed, ring);
    j["expected"] = to_string(v.expected, ring);
    return j;
}

} // namespace lgwb
