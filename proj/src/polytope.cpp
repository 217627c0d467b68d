#include "lgwb/polytope.hpp"

#include "lgwb/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

namespace lgwb {

namespace {

std::string describe(const std::vector<Rational>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

Rational pairing(const Facet& f, const std::vector<Rational>& phi)
{
    Rational s = f.offset;
    for (std::size_t i = 0; i < phi.size(); ++i) s += Rational(static_cast<long>(f.normal[i])) * phi[i];
    return s;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& visit)
{
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        visit(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::vector<Vertex> enumerate_vertices(std::size_t dim, const std::vector<Facet>& facets)
{
    std::map<std::vector<Rational>, std::set<std::size_t>> found;
    for_each_subset(facets.size(), dim, [&](const std::vector<std::size_t>& subset) {
        RationalMatrix a;
        std::vector<Rational> b;
        for (auto f : subset) {
            std::vector<Rational> row;
            for (auto v : facets[f].normal) row.emplace_back(static_cast<long>(v));
            a.push_back(std::move(row));
            b.push_back(-facets[f].offset);
        }
        auto phi = solve_square(std::move(a), std::move(b));
        if (!phi) return;
        std::set<std::size_t> active;
        for (std::size_t f = 0; f < facets.size(); ++f) {
            const Rational s = pairing(facets[f], *phi);
            if (s < 0) return;
            if (s == 0) active.insert(f);
        }
        found.emplace(std::move(*phi), std::move(active));
    });
    std::vector<Vertex> out;
    for (auto& [coords, active] : found) out.push_back({coords, {active.begin(), active.end()}});
    return out;
}

std::size_t affine_rank(const std::vector<const std::vector<Rational>*>& points)
{
    if (points.size() < 2) return 0;
    RationalMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Rational> d(points[i]->size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = (*points[i])[j] - (*points[0])[j];
        diffs.push_back(std::move(d));
    }
    return rank(std::move(diffs));
}

// Recession cone {d : ⟨ν,d⟩ ≥ 0 ∀F} is trivial iff its slice ⟨Σν, d⟩ = 1 is empty
// (valid once the normals span ℝⁿ, so the cone is pointed).
bool recession_cone_trivial(std::size_t dim, const std::vector<Facet>& facets)
{
    std::vector<std::int64_t> total(dim, 0);
    for (const auto& f : facets)
        for (std::size_t i = 0; i < dim; ++i) total[i] += f.normal[i];

    bool nonempty = false;
    for_each_subset(facets.size(), dim - 1, [&](const std::vector<std::size_t>& subset) {
        if (nonempty) return;
        RationalMatrix a;
        std::vector<Rational> b;
        for (auto f : subset) {
            std::vector<Rational> row;
            for (auto v : facets[f].normal) row.emplace_back(static_cast<long>(v));
            a.push_back(std::move(row));
            b.emplace_back(0);
        }
        std::vector<Rational> row;
        for (auto v : total) row.emplace_back(static_cast<long>(v));
        a.push_back(std::move(row));
        b.emplace_back(1);
        auto d = solve_square(std::move(a), std::move(b));
        if (!d) return;
        for (const auto& f : facets) {
            Rational s = 0;
            for (std::size_t i = 0; i < dim; ++i) s += Rational(static_cast<long>(f.normal[i])) * (*d)[i];
            if (s < 0) return;
        }
        nonempty = true;
    });
    return !nonempty;
}

std::int64_t gcd_of(const std::vector<std::int64_t>& v)
{
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

} // namespace

LatticePolytope::LatticePolytope(std::size_t dim, std::vector<Facet> facets, std::string name, bool keep_redundant)
    : dim_(dim), facets_(std::move(facets)), name_(std::move(name))
{
    if (dim_ == 0) throw InputError("polytope dimension must be positive");
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        auto& f = facets_[i];
        if (f.normal.size() != dim_)
            throw InputError("facet " + std::to_string(i) + ": normal has wrong length");
        const auto g = gcd_of(f.normal);
        if (g == 0) throw InputError("facet " + std::to_string(i) + ": zero normal");
        for (auto& x : f.normal) x /= g;
        f.offset /= Rational(static_cast<long>(g));
    }
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (facets_[i].normal == facets_[j].normal && facets_[i].offset == facets_[j].offset)
                throw InputError("redundant facet " + std::to_string(i) + " (duplicates facet " +
                                 std::to_string(j) + ")");

    RationalMatrix normals;
    for (const auto& f : facets_) {
        std::vector<Rational> row;
        for (auto v : f.normal) row.emplace_back(static_cast<long>(v));
        normals.push_back(std::move(row));
    }
    if (rank(normals) < dim_ || !recession_cone_trivial(dim_, facets_))
        throw InputError("unbounded polytope");

    vertices_ = enumerate_vertices(dim_, facets_);
    if (vertices_.empty()) throw InputError("empty polytope");

    std::vector<const std::vector<Rational>*> all;
    for (const auto& v : vertices_) all.push_back(&v.coords);
    if (affine_rank(all) < dim_) throw InputError("polytope is not full-dimensional");

    for (std::size_t f = 0; f < facets_.size(); ++f) {
        std::vector<const std::vector<Rational>*> on_face;
        for (const auto& v : vertices_)
            if (std::binary_search(v.incident_facets.begin(), v.incident_facets.end(), f))
                on_face.push_back(&v.coords);
        if (on_face.empty() || affine_rank(on_face) + 1 < dim_) {
            if (!keep_redundant) throw InputError("redundant facet " + std::to_string(f));
            redundant_.push_back(f);
        }
    }
    for (const auto& v : vertices_) cones_.push_back(v.incident_facets);
}

std::vector<Rational> LatticePolytope::barycenter() const
{
    std::vector<Rational> c(dim_, Rational(0));
    for (const auto& v : vertices_)
        for (std::size_t i = 0; i < dim_; ++i) c[i] += v.coords[i];
    for (auto& x : c) x /= Rational(static_cast<long>(vertices_.size()));
    return c;
}

bool LatticePolytope::operator==(const LatticePolytope& other) const
{
    if (dim_ != other.dim_ || facets_.size() != other.facets_.size()) return false;
    for (std::size_t i = 0; i < facets_.size(); ++i)
        if (facets_[i].normal != other.facets_[i].normal || facets_[i].offset != other.facets_[i].offset)
            return false;
    return true;
}

namespace {

Rational json_rational(const nlohmann::json& j, const std::string& what)
{
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw InputError(what + ": expected an integer or a rational string \"p/q\"");
}

} // namespace

LatticePolytope parse_polytope(std::string_view json_text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed polytope JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc["dim"].is_number_integer())
        throw InputError("polytope JSON needs an integer \"dim\"");
    if (!doc.contains("facets") || !doc["facets"].is_array())
        throw InputError("polytope JSON needs a \"facets\" array");
    const long dim = doc["dim"].get<long>();
    if (dim <= 0) throw InputError("polytope dimension must be positive");

    std::vector<Facet> facets;
    for (std::size_t i = 0; i < doc["facets"].size(); ++i) {
        const auto& jf = doc["facets"][i];
        const std::string where = "facet " + std::to_string(i);
        if (!jf.is_object() || !jf.contains("normal") || !jf["normal"].is_array() || !jf.contains("two_pi_alpha"))
            throw InputError(where + ": needs \"normal\" and \"two_pi_alpha\"");
        std::vector<Rational> normal;
        for (const auto& x : jf["normal"]) normal.push_back(json_rational(x, where + " normal"));
        Rational offset = json_rational(jf["two_pi_alpha"], where + " two_pi_alpha");

        // Clear denominators so the normal is integral; the constructor divides by the gcd.
        mpz_class lcm = 1;
        for (const auto& x : normal) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
        Facet f;
        for (const auto& x : normal) {
            Rational scaled = x * Rational(lcm);
            if (!scaled.get_num().fits_slong_p()) throw InputError(where + ": normal entry too large");
            f.normal.push_back(scaled.get_num().get_si());
        }
        f.offset = offset * Rational(lcm);
        facets.push_back(std::move(f));
    }
    std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    return LatticePolytope(static_cast<std::size_t>(dim), std::move(facets), std::move(name));
}

std::vector<Vertex> vertices(const LatticePolytope& p)
{
    return p.vertices();
}

DelzantReport is_delzant(const LatticePolytope& p)
{
    for (const auto& cone : p.cones()) {
        std::string where;
        for (const auto& v : p.vertices())
            if (v.incident_facets == cone) where = "vertex " + describe(v.coords);
        if (where.empty()) {
            where = "cone of facets {";
            for (std::size_t i = 0; i < cone.size(); ++i) where += (i ? "," : "") + std::to_string(cone[i]);
            where += "}";
        }
        if (cone.size() != p.dim())
            return {false, where + " is not simple (" + std::to_string(cone.size()) + " facets meet)"};
        IntMatrix m;
        for (auto f : cone) m.push_back(p.facets()[f].normal);
        const auto det = determinant(m);
        if (det != 1 && det != -1) return {false, where + " has normal determinant " + std::to_string(det)};
    }
    return {};
}

std::optional<MonotoneCenter> monotone_center(const LatticePolytope& p)
{
    // Unknowns (φ, c): ⟨ν,φ⟩ − c = −α for every facet.
    RationalMatrix a;
    std::vector<Rational> b;
    for (const auto& f : p.facets()) {
        std::vector<Rational> row;
        for (auto v : f.normal) row.emplace_back(static_cast<long>(v));
        row.emplace_back(-1);
        a.push_back(std::move(row));
        b.push_back(-f.offset);
    }
    auto sol = solve_any(std::move(a), std::move(b));
    if (!sol) return std::nullopt;
    Rational c = sol->back();
    if (c <= 0) return std::nullopt;
    sol->pop_back();
    return MonotoneCenter{std::move(*sol), c};
}

bool is_monotone(const LatticePolytope& p)
{
    return monotone_center(p).has_value();
}

LatticePolytope inflate(const LatticePolytope& p, const Rational& k_over_2pi)
{
    if (k_over_2pi < 0) throw InputError("inflation amount must be nonnegative");
    auto facets = p.facets();
    for (auto& f : facets) f.offset += k_over_2pi;
    LatticePolytope out(p.dim(), std::move(facets), p.name(), true);
    out.cones_ = p.cones_;
    return out;
}

LatticePolytope transform(const LatticePolytope& p, const IntMatrix& sigma)
{
    if (sigma.size() != p.dim()) throw InputError("transform matrix has wrong size");
    auto facets = p.facets();
    for (auto& f : facets) {
        std::vector<std::int64_t> nu(p.dim(), 0);
        for (std::size_t i = 0; i < p.dim(); ++i)
            for (std::size_t j = 0; j < p.dim(); ++j) nu[i] += sigma[i][j] * f.normal[j];
        f.normal = std::move(nu);
    }
    return LatticePolytope(p.dim(), std::move(facets), p.name(), !p.redundant_facets().empty());
}

std::vector<double> log_map(std::span<const std::complex<double>> z)
{
    std::vector<double> phi;
    phi.reserve(z.size());
    for (auto zi : z) {
        if (zi == 0.0) throw InputError("Log map undefined at a zero coordinate");
        phi.push_back(-std::log(std::abs(zi)) / (2 * std::numbers::pi));
    }
    return phi;
}

bool contains_log(const LatticePolytope& p, std::span<const std::complex<double>> z, bool strict, double tol)
{
    if (z.size() != p.dim()) throw InputError("point dimension does not match polytope");
    const auto phi = log_map(z);
    for (const auto& f : p.facets()) {
        double s = to_double(f.offset);
        for (std::size_t i = 0; i < phi.size(); ++i) s += static_cast<double>(f.normal[i]) * phi[i];
        if (strict ? !(s > tol) : !(s >= -tol)) return false;
    }
    return true;
}

LatticePolytope projective_space_polytope(std::size_t n, const Rational& size)
{
    std::vector<Facet> facets;
    for (std::size_t i = 0; i < n; ++i) {
        Facet f{std::vector<std::int64_t>(n, 0), Rational(0)};
        f.normal[i] = 1;
        facets.push_back(std::move(f));
    }
    facets.push_back({std::vector<std::int64_t>(n, -1), size});
    return LatticePolytope(n, std::move(facets), "cp" + std::to_string(n));
}

LatticePolytope p1p1_polytope(const Rational& size1, const Rational& size2)
{
    return LatticePolytope(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, 0}, size1}, {{0, -1}, size2}}, "p1p1");
}

LatticePolytope hirzebruch_polytope(int m, const Rational& a, const Rational& b)
{
    return LatticePolytope(2, {{{1, 0}, 0}, {{0, 1}, 0}, {{0, -1}, b}, {{-1, -m}, a}},
                           "hirzebruch" + std::to_string(m));
}

} // namespace lgwb
