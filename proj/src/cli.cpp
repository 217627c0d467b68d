#include "lgwb/cli.hpp"

#include "lgwb/report.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_sinks.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

namespace lgwb {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr double kEigenTol = 1e-8;

void configure_logging()
{
    static bool done = false;
    if (!done) {
        auto logger = spdlog::get("lgwb");
        if (!logger) logger = spdlog::stderr_logger_mt("lgwb");
        spdlog::set_default_logger(logger);
        done = true;
    }
    const char* env = std::getenv("LGWB_LOG");
    spdlog::set_level(env ? spdlog::level::from_str(env) : spdlog::level::warn);
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out)
{
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + out_path + "'");
    f << text;
}

struct Common {
    SolverConfig cfg;
    std::string out_path;
};

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--out", c.out_path, "Write the report to this file instead of stdout");
    sub->add_option("--grid-angles", c.cfg.grid_angles, "Seed angles per variable");
    sub->add_option("--newton-tol", c.cfg.newton_tol, "Newton residual tolerance");
    sub->add_option("--max-iter", c.cfg.max_iter, "Newton iteration cap per seed");
    sub->add_option("--dedup-tol", c.cfg.dedup_tol, "Merge tolerance in log coordinates");
    sub->add_option("--seed", c.cfg.rng_seed, "Seed for the deterministic jitter");
}

Json header(const std::string& command)
{
    Json j;
    j["schema"] = kReportSchema;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    return j;
}

Json points_json(const std::vector<CriticalPoint>& points)
{
    Json a = Json::array();
    for (const auto& p : points) a.push_back(to_json(p));
    return a;
}

// The benchmark's quantum-product matrix for a polytope whose normals have the
// standard shape; the areas are read off the offsets.
C1Matrix benchmark_matrix(const std::string& space, const LatticePolytope& p)
{
    auto offset_of = [&](const std::vector<std::int64_t>& normal) -> std::optional<Rational> {
        for (const auto& f : p.facets())
            if (f.normal == normal) return f.offset;
        return std::nullopt;
    };
    if (space == "cp1" || space == "cp2" || space == "cp3") {
        const std::size_t n = static_cast<std::size_t>(space.back() - '0');
        if (p.dim() != n || p.facets().size() != n + 1)
            throw InputError("polytope does not have the shape of " + space);
        Rational total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<std::int64_t> e(n, 0);
            e[i] = 1;
            auto a = offset_of(e);
            if (!a) throw InputError("polytope does not have the shape of " + space);
            total += *a;
        }
        auto last = offset_of(std::vector<std::int64_t>(n, -1));
        if (!last) throw InputError("polytope does not have the shape of " + space);
        total += *last;
        return c1_matrix_cpn(static_cast<int>(n), kTwoPi * to_double(total));
    }
    if (space == "p1p1") {
        auto a1 = offset_of({1, 0}), b1 = offset_of({-1, 0}), a2 = offset_of({0, 1}), b2 = offset_of({0, -1});
        if (p.dim() != 2 || p.facets().size() != 4 || !a1 || !b1 || !a2 || !b2)
            throw InputError("polytope does not have the shape of p1p1");
        return c1_matrix_p1p1(kTwoPi * to_double(*a1 + *b1), kTwoPi * to_double(*a2 + *b2));
    }
    throw InputError("unknown benchmark '" + space + "' (expected cp1, cp2, cp3, p1p1)");
}

Json eigen_check(const C1Matrix& m, const std::vector<CriticalPoint>& points, bool& passed)
{
    const auto eig = eigenvalues(m);
    const auto match = match_multisets(critical_values(points), eig, kEigenTol);
    passed = match.perfect() && match.max_distance <= kEigenTol;
    Json j;
    j["space"] = m.space_label;
    j["basis"] = m.basis_labels;
    Json ev = Json::array();
    for (const auto& e : eig) ev.push_back(to_json(e));
    j["eigenvalues"] = std::move(ev);
    j["tolerance"] = kEigenTol;
    j["match"] = to_json(match);
    j["passed"] = passed;
    return j;
}

int cmd_analyze(const std::string& command, const std::string& file, const std::string& benchmark,
                const std::string& inflate_by, const Common& c, std::ostream& out)
{
    LatticePolytope p = parse_polytope(read_file(file));
    if (!inflate_by.empty()) p = inflate(p, parse_rational(inflate_by));
    const auto w = toric_superpotential(p, Mode::symbolic);
    const auto set = solve_critical(w, c.cfg);
    const auto points = filter_in_domain(set.points, p);

    Json j = header(command);
    Json input;
    input["file"] = file;
    input["inflate"] = inflate_by.empty() ? "0" : to_string(parse_rational(inflate_by));
    input["polytope"] = to_json(p);
    j["input"] = std::move(input);
    j["superpotential"] = to_json(w);
    j["critical_points"] = points_json(points);
    Json counts;
    counts["critical_points"] = points.size();
    counts["in_domain"] = count_in_domain(points);
    j["counts"] = std::move(counts);
    if (!set.diagnostic.empty()) j["diagnostic"] = set.diagnostic;

    bool passed = true;
    if (!benchmark.empty()) j["eigenvalue_check"] = eigen_check(benchmark_matrix(benchmark, p), points, passed);
    j["config"] = to_json(c.cfg);
    emit(dump_report(j), c.out_path, out);
    return passed ? kExitOk : kExitVerification;
}

int cmd_family(const std::string& name, const FamilyParams& fp, const std::string& benchmark, const Common& c,
               std::ostream& out)
{
    const Family f = parse_family(name);
    const auto w = family(f, fp, Mode::symbolic);
    const auto set = solve_critical(w, c.cfg);
    auto points = set.points;
    if (w.domain) points = filter_in_domain(std::move(points), *w.domain);

    Json j = header("family");
    Json input;
    input["family"] = name;
    switch (f) {
    case Family::cp2_clifford:
    case Family::cp2_chekanov: input["lambda"] = fp.lambda; break;
    case Family::p1p1_clifford:
    case Family::p1p1_chekanov:
        input["l1"] = fp.lambda1;
        input["l2"] = fp.lambda2;
        break;
    case Family::hirzebruch:
        input["m"] = fp.m;
        input["A"] = fp.a;
        input["B"] = fp.b;
        break;
    }
    j["input"] = std::move(input);
    j["superpotential"] = to_json(w);
    j["critical_points"] = points_json(points);
    Json counts;
    counts["critical_points"] = points.size();
    if (w.domain) {
        counts["in_domain"] = count_in_domain(points);
    } else {
        counts["in_domain"] = nullptr;
    }
    j["counts"] = std::move(counts);
    if (!set.diagnostic.empty()) j["diagnostic"] = set.diagnostic;

    bool passed = true;
    if (!benchmark.empty()) {
        C1Matrix m;
        if (benchmark == "cp2" && (f == Family::cp2_clifford || f == Family::cp2_chekanov)) {
            m = c1_matrix_cpn(2, fp.lambda);
        } else if (benchmark == "p1p1" && (f == Family::p1p1_clifford || f == Family::p1p1_chekanov)) {
            m = c1_matrix_p1p1(fp.lambda1, fp.lambda2);
        } else {
            throw InputError("benchmark '" + benchmark + "' does not apply to family " + name);
        }
        j["eigenvalue_check"] = eigen_check(m, points, passed);
    }
    j["config"] = to_json(c.cfg);
    emit(dump_report(j), c.out_path, out);
    return passed ? kExitOk : kExitVerification;
}

Json map_json(const SubstitutionMap& m, const Ring& target, const Ring& source)
{
    Json j;
    j["text"] = to_string(m, target, source);
    if (m.monomial_part()) j["matrix"] = *m.monomial_part();
    return j;
}

Json lost_json(const LostValues& lv)
{
    Json j;
    Json src = Json::array(), dst = Json::array();
    for (const auto& v : lv.source_values) src.push_back(to_json(v));
    for (const auto& v : lv.target_values) dst.push_back(to_json(v));
    j["chekanov_values"] = std::move(src);
    j["clifford_values"] = std::move(dst);
    j["match"] = to_json(lv.match);
    j["lost_on_clifford_side"] = lv.match.unmatched_b.size();
    j["lost_on_chekanov_side"] = lv.match.unmatched_a.size();
    j["lost_points_leave_torus"] = lv.target_image_degenerate;
    return j;
}

int cmd_wallcross(const std::string& preset, bool classical, const FamilyParams& fp, const Common& c,
                  std::ostream& out)
{
    const bool p1p1 = preset == "p1p1";
    if (preset != "cp2" && preset != "p1p1" && preset != "classical-pos" && preset != "classical-neg" &&
        preset != "quantum")
        throw InputError("unknown wallcross preset '" + preset + "'");

    const auto src = family(p1p1 ? Family::p1p1_chekanov : Family::cp2_chekanov, fp, Mode::symbolic);
    const auto dst = family(p1p1 ? Family::p1p1_clifford : Family::cp2_clifford, fp, Mode::symbolic);
    const std::size_t np = src.symbolic().nparams();
    const Ring chek = src.ring();
    const Ring clif = dst.ring();

    SubstitutionMap gluing = quantum_map(np);
    std::string gluing_name = "quantum";
    if (preset == "classical-pos" || (classical && preset != "classical-neg")) {
        gluing = classical_pos_map(np);
        gluing_name = "classical-pos";
    } else if (preset == "classical-neg") {
        gluing = classical_neg_map(np);
        gluing_name = "classical-neg";
    }

    bool ok = true;
    Json j = header("wallcross");
    Json input;
    input["preset"] = preset;
    input["classical"] = classical;
    if (p1p1) {
        input["l1"] = fp.lambda1;
        input["l2"] = fp.lambda2;
    } else {
        input["lambda"] = fp.lambda;
    }
    j["input"] = std::move(input);
    j["chekanov"] = to_json(src);
    j["clifford"] = to_json(dst);

    Json verdicts;
    verdicts["gluing"] = gluing_name;
    verdicts["map"] = map_json(gluing, chek, clif);
    const auto forward = verify_chart_identity(src, dst, gluing);
    verdicts["identity"] = to_json(forward, clif);
    ok = ok && forward.identity_holds;

    if (gluing_name == "quantum") {
        const auto inverse = verify_chart_identity(dst, src, quantum_inverse_map(np));
        verdicts["inverse_identity"] = to_json(inverse, chek);
        ok = ok && inverse.identity_holds;
    }

    if (preset == "quantum") {
        // The corrected gluing is the classical one times the wall factor,
        // 1+w on the λ>0 side and 1+1/w on the λ<0 side.
        LaurentPoly h_pos(2, np), h_neg(2, np);
        h_pos.add_term({0, 0}, 1);
        h_pos.add_term({1, 0}, 1);
        h_neg.add_term({0, 0}, 1);
        h_neg.add_term({-1, 0}, 1);
        const auto from_pos = compose(wall_map(h_pos, {0, 1}), classical_pos_map(np));
        const auto from_neg = compose(wall_map(h_neg, {0, 1}), classical_neg_map(np));
        const auto target = quantum_map(np);
        bool pos_ok = true, neg_ok = true;
        for (std::size_t i = 0; i < 2; ++i) {
            pos_ok = pos_ok && rational_eq(from_pos[i], target[i]);
            neg_ok = neg_ok && rational_eq(from_neg[i], target[i]);
        }
        Json corr;
        corr["positive_side"] = map_json(from_pos, chek, clif);
        corr["positive_side_matches"] = pos_ok;
        corr["negative_side"] = map_json(from_neg, chek, clif);
        corr["negative_side_matches"] = neg_ok;
        verdicts["wall_corrections"] = std::move(corr);
        ok = ok && pos_ok && neg_ok;
    }

    const auto mono = monodromy(classical_pos_map(np), classical_neg_map(np));
    verdicts["monodromy"] = mono;
    j["verdicts"] = std::move(verdicts);

    const auto lv = lost_values(src, dst, gluing, c.cfg);
    j["lost_values"] = lost_json(lv);
    j["config"] = to_json(c.cfg);
    emit(dump_report(j), c.out_path, out);
    return ok ? kExitOk : kExitVerification;
}

std::string csv_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int cmd_plotdata(const std::string& file, const std::string& inflate_by, const Common& c, std::ostream& out)
{
    LatticePolytope p = parse_polytope(read_file(file));
    if (!inflate_by.empty()) p = inflate(p, parse_rational(inflate_by));
    const auto w = toric_superpotential(p, Mode::numeric);
    const auto points = filter_in_domain(solve_critical(w, c.cfg).points, p);

    std::vector<std::vector<double>> verts;
    for (const auto& v : p.vertices()) {
        std::vector<double> x;
        for (const auto& r : v.coords) x.push_back(to_double(r));
        verts.push_back(std::move(x));
    }
    if (p.dim() == 2) {
        const auto bc = p.barycenter();
        const double cx = to_double(bc[0]), cy = to_double(bc[1]);
        std::stable_sort(verts.begin(), verts.end(), [&](const auto& a, const auto& b) {
            return std::atan2(a[1] - cy, a[0] - cx) < std::atan2(b[1] - cy, b[0] - cx);
        });
    }

    std::ostringstream csv;
    csv << "kind,index";
    for (std::size_t i = 0; i < p.dim(); ++i) csv << ",phi" << (i + 1);
    csv << ",in_domain\n";
    auto row = [&](const char* kind, std::size_t index, const std::vector<double>& x, const std::string& flag) {
        csv << kind << ',' << index;
        for (double v : x) csv << ',' << csv_double(v);
        csv << ',' << flag << '\n';
    };
    for (std::size_t i = 0; i < verts.size(); ++i) row("polygon", i, verts[i], "");
    if (!verts.empty()) row("polygon", 0, verts.front(), "");
    for (std::size_t i = 0; i < points.size(); ++i)
        row("critical", i, log_map(points[i].z), points[i].in_domain.value_or(false) ? "1" : "0");
    emit(csv.str(), c.out_path, out);
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    configure_logging();

    CLI::App app{"Landau-Ginzburg superpotential workbench", "lgwb"};
    app.require_subcommand(1);

    Common common;
    std::string file, benchmark, inflate_by, family_name_arg, preset;
    FamilyParams fp;
    fp.lambda = 3 * std::log(10.0);
    fp.lambda1 = fp.lambda2 = 2 * std::log(10.0);
    fp.m = 3;
    fp.b = std::log(10.0);
    bool classical = false;

    auto* analyze = app.add_subcommand("analyze", "Superpotential and critical points of a polytope");
    analyze->add_option("polytope", file, "Polytope JSON file")->required();
    analyze->add_option("--benchmark", benchmark, "Compare with quantum c1 eigenvalues: cp1|cp2|cp3|p1p1");
    analyze->add_option("--inflate", inflate_by, "Inflate facets by k/2pi (rational)");
    add_common(analyze, common);

    auto* renorm = app.add_subcommand("renormalize", "Analyze an inflated polytope");
    renorm->add_option("polytope", file, "Polytope JSON file")->required();
    renorm->add_option("--inflate", inflate_by, "Inflate facets by k/2pi (rational)")->required();
    renorm->add_option("--benchmark", benchmark, "Compare with quantum c1 eigenvalues: cp1|cp2|cp3|p1p1");
    add_common(renorm, common);

    auto* fam = app.add_subcommand("family", "Closed-form superpotential families");
    fam->add_option("name", family_name_arg, "cp2_clifford|cp2_chekanov|p1p1_clifford|p1p1_chekanov|hirzebruch")
        ->required();
    fam->add_option("--lambda", fp.lambda, "CP2 line area");
    fam->add_option("--l1", fp.lambda1, "First CP1 area");
    fam->add_option("--l2", fp.lambda2, "Second CP1 area");
    fam->add_option("--m", fp.m, "Hirzebruch twist");
    auto* a_opt = fam->add_option("--A", fp.a, "Hirzebruch area A (default m*B + 3)");
    fam->add_option("--B", fp.b, "Hirzebruch fiber area");
    fam->add_option("--benchmark", benchmark, "Compare with quantum c1 eigenvalues: cp2|p1p1");
    add_common(fam, common);

    auto* wall = app.add_subcommand("wallcross", "Chart gluing identities, monodromy and lost values");
    wall->add_option("preset", preset, "cp2|p1p1|classical-pos|classical-neg|quantum")->required();
    wall->add_flag("--classical", classical, "Use the uncorrected classical gluing");
    wall->add_option("--lambda", fp.lambda, "CP2 line area");
    wall->add_option("--l1", fp.lambda1, "First CP1 area");
    wall->add_option("--l2", fp.lambda2, "Second CP1 area");
    add_common(wall, common);

    auto* plot = app.add_subcommand("plotdata", "CSV of the polytope outline and Log images of critical points");
    plot->add_option("polytope", file, "Polytope JSON file")->required();
    plot->add_option("--inflate", inflate_by, "Inflate facets by k/2pi (rational)");
    add_common(plot, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    }

    try {
        common.cfg.validate();
        if (*analyze) return cmd_analyze("analyze", file, benchmark, inflate_by, common, out);
        if (*renorm) return cmd_analyze("renormalize", file, benchmark, inflate_by, common, out);
        if (*fam) {
            if (a_opt->count() == 0) fp.a = fp.m * fp.b + 3;
            return cmd_family(family_name_arg, fp, benchmark, common, out);
        }
        if (*wall) return cmd_wallcross(preset, classical, fp, common, out);
        if (*plot) return cmd_plotdata(file, inflate_by, common, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const NumericError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitInput;
}

} // namespace lgwb
