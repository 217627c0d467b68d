#include "lgwb/critical.hpp"

#include "lgwb/roots.hpp"

#include <Eigen/Dense>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

namespace lgwb {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
// Seeds whose log-modulus leaves this band are abandoned.
constexpr double kMaxLogModulus = 200.0;
constexpr double kMaxStep = 2.0;
constexpr double kDegenerateRatio = 1e-9;
constexpr int kMaxPasses = 4;
// Seeds whose residual has not halved for this many steps are dropped.
constexpr int kStallIters = 15;

using VectorXc = Eigen::VectorXcd;
using MatrixXc = Eigen::MatrixXcd;

double wrap_angle(double a)
{
    a = std::remainder(a, kTwoPi);
    return a <= -std::numbers::pi ? a + kTwoPi : a;
}

struct Term {
    std::vector<double> e;
    Complex c;
};

struct System {
    std::vector<Term> terms;
    std::vector<NumericPoly> grad;  // for reported residuals
};

System make_system(const NumericPoly& w)
{
    System s{{}, gradient_system(w)};
    for (const auto& [e, c] : w.terms()) s.terms.push_back({{e.begin(), e.end()}, c});
    return s;
}

// W, its log-gradient, log-Hessian and term scale at z = exp(x), one pass over the terms.
struct Local {
    Complex value;
    VectorXc f;
    MatrixXc j;
    double scale = 0.0;
};

Local local_at(const System& s, const VectorXc& x)
{
    const auto n = x.size();
    Local l{0.0, VectorXc::Zero(n), MatrixXc::Zero(n, n), 0.0};
    for (const auto& t : s.terms) {
        Complex arg = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) arg += t.e[static_cast<std::size_t>(i)] * x[i];
        const Complex v = t.c * std::exp(arg);
        l.value += v;
        l.scale += std::abs(v);
        for (Eigen::Index a = 0; a < n; ++a) {
            const double ea = t.e[static_cast<std::size_t>(a)];
            if (ea == 0.0) continue;
            l.f[a] += ea * v;
            for (Eigen::Index b = 0; b < n; ++b) l.j(a, b) += ea * t.e[static_cast<std::size_t>(b)] * v;
        }
    }
    return l;
}

std::vector<Complex> exp_all(const VectorXc& x)
{
    std::vector<Complex> z(static_cast<std::size_t>(x.size()));
    for (Eigen::Index i = 0; i < x.size(); ++i) z[static_cast<std::size_t>(i)] = std::exp(x[i]);
    return z;
}

double residual_at(const System& s, const std::vector<Complex>& z)
{
    double r = 0.0;
    for (const auto& g : s.grad) r = std::max(r, std::abs(eval(g, std::span<const Complex>(z))));
    return r;
}

// Near a non-Morse point Newton stops at |x - x*| ~ sqrt(tol), so the smallest
// singular value is only resolved down to about sqrt(tol) times the term scale.
// The ratio test alone misses one-variable cases.
bool is_degenerate(const MatrixXc& j, double scale, double tol)
{
    Eigen::JacobiSVD<MatrixXc> svd(j);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0) return true;
    const double top = sv[0], low = sv[sv.size() - 1];
    return top == 0.0 || low / top < kDegenerateRatio || low <= 10 * std::sqrt(tol) * scale;
}

// The term scale Σ|c z^a| keeps the test meaningful when every coefficient is tiny.
bool converged_residual(double res, Complex value, double scale, double tol)
{
    return res <= tol * std::min(1.0 + std::abs(value), scale);
}

// x − r with imaginary parts wrapped into (−π, π].
VectorXc periodic_diff(const VectorXc& x, const VectorXc& r)
{
    VectorXc d = x - r;
    for (Eigen::Index i = 0; i < d.size(); ++i) d[i] = Complex(d[i].real(), wrap_angle(d[i].imag()));
    return d;
}

// Damped Newton on F(x) = grad W(exp x). Returns the converged x, if any.
// Known roots in `deflate` are pushed away with the operator
// M(x) = Π (1/|x − r|² + 1), which rescales the Newton step by 1/(1 − ∇log M·dx).
std::optional<VectorXc> newton(const System& s, VectorXc x, const SolverConfig& cfg,
                               const std::vector<VectorXc>& deflate = {})
{
    double best = std::numeric_limits<double>::infinity();
    int best_it = 0;
    for (int it = 0; it <= cfg.max_iter; ++it) {
        const Local l = local_at(s, x);
        const double res = l.f.cwiseAbs().maxCoeff();
        if (!std::isfinite(res)) return std::nullopt;
        if (res < 0.5 * best) {
            best = res;
            best_it = it;
        } else if (it - best_it > kStallIters) {
            return std::nullopt;
        }
        if (converged_residual(res, l.value, l.scale, cfg.newton_tol)) {
            // One polishing step, kept only if it helps.
            VectorXc dx = l.j.fullPivLu().solve(-l.f);
            if (dx.allFinite() && dx.norm() < 1e-3) {
                VectorXc y = x + dx;
                if (local_at(s, y).f.cwiseAbs().maxCoeff() < res) return y;
            }
            return x;
        }
        if (it == cfg.max_iter) break;
        VectorXc dx = l.j.fullPivLu().solve(-l.f);
        if (!dx.allFinite()) return std::nullopt;
        if (!deflate.empty()) {
            double slope = 0.0;
            for (const auto& r : deflate) {
                const VectorXc d = periodic_diff(x, r);
                const double n2 = d.squaredNorm();
                if (n2 == 0.0) return std::nullopt;
                slope += -2.0 * d.dot(dx).real() / (n2 * n2) / (1.0 / n2 + 1.0);
            }
            if (!std::isfinite(slope) || std::abs(1.0 - slope) < 1e-12) return std::nullopt;
            dx /= 1.0 - slope;
        }
        const double len = dx.norm();
        if (len > kMaxStep) dx *= kMaxStep / len;
        x += dx;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            if (std::abs(x[i].real()) > kMaxLogModulus) return std::nullopt;
    }
    return std::nullopt;
}

// Log-modulus seed centers.
std::vector<std::vector<double>> seed_centers(const NumericPoly& w, const SolverConfig& cfg,
                                              const LatticePolytope* domain)
{
    const std::size_t n = w.nvars();
    std::vector<std::vector<double>> centers;

    auto product = [&](const std::vector<std::vector<double>>& per_var) {
        std::vector<std::vector<double>> out{{}};
        for (const auto& choices : per_var) {
            std::vector<std::vector<double>> next;
            for (const auto& prefix : out)
                for (double c : choices) {
                    auto v = prefix;
                    v.push_back(c);
                    next.push_back(std::move(v));
                }
            out = std::move(next);
        }
        return out;
    };

    if (!cfg.grid_radii.empty()) {
        std::vector<std::vector<double>> logs;
        for (const auto& radii : cfg.grid_radii) {
            std::vector<double> l;
            for (double r : radii) l.push_back(std::log(r));
            logs.push_back(std::move(l));
        }
        return product(logs);
    }

    if (domain) {
        const auto bary = domain->barycenter();
        std::vector<double> b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = to_double(bary[i]);
        auto to_log = [&](const std::vector<double>& phi) {
            std::vector<double> l(n);
            for (std::size_t i = 0; i < n; ++i) l[i] = -kTwoPi * phi[i];
            return l;
        };
        centers.push_back(to_log(b));
        // halfway to each vertex, the vertex, and a bit past it: critical points
        // outside the domain still have to be found
        for (const auto& v : domain->vertices())
            for (double t : {0.5, 1.0, 1.5}) {
                std::vector<double> phi(n);
                for (std::size_t i = 0; i < n; ++i) phi[i] = b[i] + t * (to_double(v.coords[i]) - b[i]);
                centers.push_back(to_log(phi));
            }
    }

    // Scales between 1 and the smallest coefficient modulus.
    double smallest = 1.0;
    for (const auto& [e, c] : w.terms()) smallest = std::min(smallest, std::abs(c));
    const double ls = std::log(smallest);
    std::set<double> levels;
    if (domain) {
        for (double t : {0.0, 0.5, 1.0}) levels.insert(t * ls);
    } else {
        for (double t : {0.0, 0.25, 1.0 / 3.0, 0.5, 2.0 / 3.0, 0.75, 1.0}) levels.insert(t * ls);
    }
    for (auto& c : product(std::vector<std::vector<double>>(n, std::vector<double>(levels.begin(), levels.end()))))
        centers.push_back(std::move(c));
    return centers;
}

bool same_point(const VectorXc& a, const VectorXc& b, double tol)
{
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        if (std::abs(a[i].real() - b[i].real()) > tol) return false;
        if (std::abs(wrap_angle(a[i].imag() - b[i].imag())) > tol) return false;
    }
    return true;
}

bool point_less(const CriticalPoint& a, const CriticalPoint& b)
{
    if (a.value.real() != b.value.real()) return a.value.real() < b.value.real();
    if (a.value.imag() != b.value.imag()) return a.value.imag() < b.value.imag();
    for (std::size_t i = 0; i < a.z.size(); ++i) {
        if (a.z[i].real() != b.z[i].real()) return a.z[i].real() < b.z[i].real();
        if (a.z[i].imag() != b.z[i].imag()) return a.z[i].imag() < b.z[i].imag();
    }
    return false;
}

} // namespace

void SolverConfig::validate() const
{
    if (!(newton_tol > 0)) throw InputError("newton tolerance must be positive");
    if (!(dedup_tol > newton_tol)) throw InputError("dedup tolerance must exceed newton tolerance");
    if (grid_angles < 1) throw InputError("grid angles must be at least 1");
    if (max_iter < 0) throw InputError("max iterations must be nonnegative");
    for (const auto& radii : grid_radii)
        for (double r : radii)
            if (!(r > 0)) throw InputError("grid radii must be positive");
}

std::vector<NumericPoly> gradient_system(const NumericPoly& w)
{
    std::vector<NumericPoly> g;
    for (std::size_t i = 0; i < w.nvars(); ++i) g.push_back(log_derivative(w, i));
    return g;
}

std::vector<NumericPoly> gradient_system(const Superpotential& w)
{
    return gradient_system(w.numeric);
}

CriticalSet solve_critical(const NumericPoly& w, const SolverConfig& cfg, const LatticePolytope* domain)
{
    cfg.validate();
    const std::size_t n = w.nvars();
    if (n == 0) throw InputError("superpotential has no variables");
    if (!cfg.grid_radii.empty() && cfg.grid_radii.size() != n)
        throw InputError("grid radii must be given for every variable");
    if (domain && domain->dim() != n) throw InputError("domain dimension does not match superpotential");

    const System sys = make_system(w);
    CriticalSet out;
    const bool constant = std::all_of(sys.grad.begin(), sys.grad.end(), [](const auto& g) { return g.is_zero(); });
    if (constant) {
        out.diagnostic = "superpotential is constant: every point is critical (degenerate)";
        return out;
    }

    std::mt19937_64 rng(cfg.rng_seed);
    std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);

    std::vector<VectorXc> reps;
    std::vector<int> basins;
    const auto centers = seed_centers(w, cfg, domain);

    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= static_cast<std::size_t>(cfg.grid_angles);

    // First pass plain Newton; further passes deflate every root found so far
    // and stop once a pass adds nothing. Small basins are caught this way.
    for (int pass = 0; pass < kMaxPasses; ++pass) {
        const std::vector<VectorXc> known = pass == 0 ? std::vector<VectorXc>{} : reps;
        const std::size_t before = reps.size();
        for (const auto& center : centers) {
            for (std::size_t k = 0; k < combos; ++k) {
                VectorXc x(static_cast<Eigen::Index>(n));
                std::size_t rest = k;
                for (std::size_t i = 0; i < n; ++i) {
                    const auto a = rest % static_cast<std::size_t>(cfg.grid_angles);
                    rest /= static_cast<std::size_t>(cfg.grid_angles);
                    const double theta = kTwoPi * (static_cast<double>(a) + 0.25) / cfg.grid_angles;
                    const double re = center[i] + jitter(rng);
                    const double im = theta + jitter(rng);
                    x[static_cast<Eigen::Index>(i)] = Complex(re, im);
                }
                ++out.seeds;
                auto root = newton(sys, x, cfg, known);
                if (!root) continue;
                ++out.converged;
                for (Eigen::Index i = 0; i < root->size(); ++i)
                    (*root)[i] = Complex((*root)[i].real(), wrap_angle((*root)[i].imag()));
                bool merged = false;
                for (std::size_t r = 0; r < reps.size(); ++r)
                    if (same_point(reps[r], *root, cfg.dedup_tol)) {
                        ++basins[r];
                        merged = true;
                        break;
                    }
                if (!merged) {
                    reps.push_back(*root);
                    basins.push_back(1);
                }
            }
        }
        spdlog::debug("solve_critical: pass {} found {} new points", pass, reps.size() - before);
        if (pass > 0 && reps.size() == before) break;
    }

    for (std::size_t r = 0; r < reps.size(); ++r) {
        CriticalPoint p;
        p.z = exp_all(reps[r]);
        p.value = eval(w, std::span<const Complex>(p.z));
        p.residual = residual_at(sys, p.z);
        p.basin_count = basins[r];
        const auto loc = local_at(sys, reps[r]);
        p.degenerate = is_degenerate(loc.j, loc.scale, cfg.newton_tol);
        out.points.push_back(std::move(p));
    }
    std::sort(out.points.begin(), out.points.end(), point_less);
    if (out.points.empty()) out.diagnostic = "no seed converged (" + std::to_string(out.seeds) + " seeds tried)";
    spdlog::debug("solve_critical: {} seeds, {} converged, {} distinct points", out.seeds, out.converged,
                  out.points.size());
    return out;
}

CriticalSet solve_critical(const Superpotential& w, const SolverConfig& cfg)
{
    return solve_critical(w.numeric, cfg, w.domain ? &*w.domain : nullptr);
}

std::vector<Complex> hirzebruch_polynomial(int m, double a, double b)
{
    if (m < 1) throw InputError("hirzebruch twist m must be a positive integer");
    const double ea = std::exp(-a);
    const double eb = std::exp(-b);
    const double mm = static_cast<double>(m) * m;
    if (m == 1) {
        // z(z² − e^{−B})²·z^{-1} cleared: (z² − e^{−B})² − e^{−A} z.
        return {eb * eb, -ea, -2 * eb, 0.0, 1.0};
    }
    std::vector<Complex> c(static_cast<std::size_t>(m) + 3, 0.0);
    const auto shift = static_cast<std::size_t>(m - 2);
    c[shift] += eb * eb;
    c[shift + 2] += -2 * eb;
    c[shift + 4] += 1.0;
    c[0] += -mm * ea;
    return c;
}

std::vector<CriticalPoint> hirzebruch_critical(int m, double a, double b)
{
    if (!(b > 0 && a > m * b)) throw InputError("hirzebruch areas need A > m*B > 0");
    const double ea = std::exp(-a);
    const double eb = std::exp(-b);
    const auto coeffs = hirzebruch_polynomial(m, a, b);
    const auto roots = poly_roots(coeffs);

    FamilyParams fp;
    fp.m = m;
    fp.a = a;
    fp.b = b;
    const auto w = family(Family::hirzebruch, fp, Mode::numeric);
    const auto grad = gradient_system(w);

    std::vector<CriticalPoint> out;
    for (const auto& z2 : roots) {
        const Complex gap = z2 * z2 - eb;
        if (std::abs(gap) < 1e-12 * eb) throw NumericError("degenerate recovery: z2^2 = e^-B at a root");
        const Complex z1 = static_cast<double>(m) * ea * detail::ipow(z2, 1 - m) / gap;
        CriticalPoint p;
        p.z = {z1, z2};
        p.value = eval(w.numeric, std::span<const Complex>(p.z));
        for (const auto& g : grad) p.residual = std::max(p.residual, std::abs(eval(g, std::span<const Complex>(p.z))));
        if (!(p.residual <= 1e-9 * (1.0 + std::abs(p.value))))
            throw NumericError("eliminated critical point fails the gradient check (residual " +
                               std::to_string(p.residual) + ")");
        out.push_back(std::move(p));
    }
    std::sort(out.begin(), out.end(), point_less);
    return out;
}

std::vector<CriticalPoint> filter_in_domain(std::vector<CriticalPoint> points, const LatticePolytope& p, double tol)
{
    for (auto& pt : points) {
        if (pt.z.size() != p.dim()) throw InputError("critical point dimension does not match polytope");
        pt.in_domain = contains_log(p, pt.z, true, tol);
    }
    return points;
}

std::size_t count_in_domain(const std::vector<CriticalPoint>& points)
{
    return static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [](const auto& p) { return p.in_domain.value_or(false); }));
}

std::vector<Complex> critical_values(const std::vector<CriticalPoint>& points)
{
    std::vector<Complex> v;
    for (const auto& p : points) v.push_back(p.value);
    return v;
}

} // namespace lgwb
