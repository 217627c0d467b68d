#include "lgwb/laurent.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace lgwb {

namespace {

void trim(Exponent& e)
{
    while (!e.empty() && e.back() == 0) e.pop_back();
}

std::string format_double(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string power_string(const std::string& name, int e)
{
    return e == 1 ? name : name + "^" + std::to_string(e);
}

std::string monomial_string(const Exponent& e, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += power_string(i < names.size() ? names[i] : "x" + std::to_string(i + 1), e[i]);
    }
    return s;
}

// Joins "coeff" and "monomial" text, writing "-" for a -1 coefficient.
std::string join_term(std::string coeff, const std::string& mono)
{
    if (mono.empty()) return coeff;
    if (coeff == "1") return mono;
    if (coeff == "-1") return "-" + mono;
    return coeff + "*" + mono;
}

template <class Poly, class CoeffFmt>
std::string render(const Poly& p, const Ring& ring, CoeffFmt&& coeff_fmt)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        std::string term = join_term(coeff_fmt(c), monomial_string(e, ring.variables));
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

} // namespace

namespace detail {

Complex ipow(Complex base, int e)
{
    if (e < 0) return 1.0 / ipow(base, -e);
    Complex r = 1.0;
    while (e > 0) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

} // namespace detail

ParamCoeff::ParamCoeff(const Rational& c)
{
    add_term({}, c);
}

ParamCoeff ParamCoeff::parameter(std::size_t index, int power, const Rational& scale)
{
    ParamCoeff p;
    Exponent e(index + 1, 0);
    e[index] = power;
    p.add_term(std::move(e), scale);
    return p;
}

std::size_t ParamCoeff::span() const
{
    std::size_t n = 0;
    for (const auto& [e, c] : terms_) n = std::max(n, e.size());
    return n;
}

void ParamCoeff::add_term(Exponent e, const Rational& c)
{
    trim(e);
    if (c == 0) return;
    // mpq_class(n, d) is not reduced on construction
    Rational v(c);
    v.canonicalize();
    auto [it, inserted] = terms_.try_emplace(std::move(e), v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamCoeff ParamCoeff::inverse() const
{
    if (!is_monomial()) throw NumericError("only parameter monomials are invertible");
    const auto& [e, c] = *terms_.begin();
    ParamCoeff r;
    Exponent inv(e);
    for (auto& x : inv) x = -x;
    r.add_term(std::move(inv), 1 / c);
    return r;
}

Complex ParamCoeff::eval(std::span<const Complex> params) const
{
    Complex sum = 0.0;
    for (const auto& [e, c] : terms_) {
        Complex t = to_double(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (i >= params.size()) throw InputError("unassigned parameter");
            t *= detail::ipow(params[i], e[i]);
        }
        sum += t;
    }
    return sum;
}

ParamCoeff ParamCoeff::operator-() const
{
    ParamCoeff r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

ParamCoeff& ParamCoeff::operator+=(const ParamCoeff& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamCoeff& ParamCoeff::operator-=(const ParamCoeff& o)
{
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b)
{
    ParamCoeff r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exponent e(std::max(ea.size(), eb.size()), 0);
            for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            r.add_term(std::move(e), ca * cb);
        }
    return r;
}

std::string ParamCoeff::to_string(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    auto one = [&](const Exponent& e, const Rational& c) {
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += power_string(i < names.size() ? names[i] : "p" + std::to_string(i + 1), e[i]);
        }
        return join_term(lgwb::to_string(c), mono);
    };
    if (terms_.size() == 1) return one(terms_.begin()->first, terms_.begin()->second);
    // Printed by total degree, then q1 before q2; the map order puts q2 first.
    std::vector<std::pair<Exponent, const Rational*>> order;
    std::size_t width = span();
    for (const auto& [e, c] : terms_) {
        Exponent padded(e);
        padded.resize(width, 0);
        order.emplace_back(std::move(padded), &c);
    }
    auto degree = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); };
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        const int da = degree(a.first), db = degree(b.first);
        return da != db ? da < db : a.first > b.first;
    });
    std::string out = "(";
    bool first = true;
    for (const auto& [e, c] : order) {
        std::string t = one(e, *c);
        if (first) {
            out += t;
        } else if (t.front() == '-') {
            out += " - " + t.substr(1);
        } else {
            out += " + " + t;
        }
        first = false;
    }
    return out + ")";
}

NumericPoly to_numeric(const LaurentPoly& p, std::span<const Complex> params)
{
    if (params.size() < p.nparams()) throw InputError("unassigned parameter");
    NumericPoly r(p.nvars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, c.eval(params));
    return r;
}

Complex eval(const LaurentPoly& p, const Ring& ring, std::span<const Complex> z,
             const std::map<std::string, Complex>& params)
{
    std::vector<Complex> values;
    for (std::size_t i = 0; i < p.nparams(); ++i) {
        if (i >= ring.parameters.size()) throw InputError("ring has too few parameter names");
        auto it = params.find(ring.parameters[i]);
        if (it == params.end()) throw InputError("unassigned parameter '" + ring.parameters[i] + "'");
        values.push_back(it->second);
    }
    return eval(p, z, values);
}

std::string to_string(const LaurentPoly& p, const Ring& ring)
{
    return render(p, ring, [&](const ParamCoeff& c) { return c.to_string(ring.parameters); });
}

std::string to_string(const NumericPoly& p, const Ring& ring)
{
    return render(p, ring, [](const Complex& c) {
        if (c.imag() == 0.0) return format_double(c.real());
        std::string im = format_double(c.imag());
        return "(" + format_double(c.real()) + (im.front() == '-' ? im : "+" + im) + "i)";
    });
}

LaurentRational::LaurentRational(LaurentPoly num)
    : num_(std::move(num)), den_(LaurentPoly::constant(ParamCoeff(1), num_.nvars(), num_.nparams()))
{
}

LaurentRational::LaurentRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den))
{
    num_.check_compatible(den_);
    normalize();
}

std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b)
{
    a.check_compatible(b);
    if (b.is_zero()) return std::nullopt;
    const std::size_t n = a.nvars();
    if (a.is_zero()) return LaurentPoly(n, a.nparams());
    const auto& [lead_e, lead_c] = *b.terms().rbegin();
    if (!lead_c.is_monomial()) return std::nullopt;
    const ParamCoeff lead_inv = lead_c.inverse();

    // Per variable, min and max exponents add under multiplication, so every
    // quotient exponent lies in [lo, hi]. Each step removes a lex-larger
    // exponent from that box, which bounds the loop.
    auto bounds = [n](const LaurentPoly& p) {
        Exponent mn = p.terms().begin()->first, mx = mn;
        for (const auto& [e, c] : p.terms())
            for (std::size_t i = 0; i < n; ++i) {
                mn[i] = std::min(mn[i], e[i]);
                mx[i] = std::max(mx[i], e[i]);
            }
        return std::pair{mn, mx};
    };
    const auto [amin, amax] = bounds(a);
    const auto [bmin, bmax] = bounds(b);
    Exponent lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        lo[i] = amin[i] - bmin[i];
        hi[i] = amax[i] - bmax[i];
        if (lo[i] > hi[i]) return std::nullopt;
    }

    LaurentPoly q(n, a.nparams());
    LaurentPoly rem = a;
    while (!rem.is_zero()) {
        const auto& [e, c] = *rem.terms().rbegin();
        Exponent qe(n);
        for (std::size_t i = 0; i < n; ++i) {
            qe[i] = e[i] - lead_e[i];
            if (qe[i] < lo[i] || qe[i] > hi[i]) return std::nullopt;
        }
        const LaurentPoly t = LaurentPoly::monomial(qe, c * lead_inv, a.nparams());
        q += t;
        rem -= t * b;
    }
    return q;
}

void LaurentRational::normalize()
{
    if (den_.is_zero()) throw NumericError("zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly::constant(ParamCoeff(1), num_.nvars(), num_.nparams());
        return;
    }
    const std::size_t n = den_.nvars();
    Exponent shift(n);
    bool first = true;
    for (const auto& [e, c] : den_.terms()) {
        for (std::size_t i = 0; i < n; ++i) shift[i] = first ? e[i] : std::min(shift[i], e[i]);
        first = false;
    }
    for (auto& x : shift) x = -x;
    LaurentPoly mono = LaurentPoly::monomial(shift, ParamCoeff(1), den_.nparams());
    const auto& lead = den_.terms().rbegin()->second;
    if (lead.is_monomial()) mono = mono.scaled(lead.inverse());
    num_ = num_ * mono;
    den_ = den_ * mono;
    if (!den_.is_monomial()) {
        if (auto q = exact_quotient(num_, den_)) {
            num_ = std::move(*q);
            den_ = LaurentPoly::constant(ParamCoeff(1), num_.nvars(), num_.nparams());
        }
    }
}

bool LaurentRational::is_polynomial() const
{
    return den_.is_monomial() && den_.terms().begin()->second == ParamCoeff(1) &&
           std::all_of(den_.terms().begin()->first.begin(), den_.terms().begin()->first.end(),
                       [](int x) { return x == 0; });
}

LaurentRational LaurentRational::operator-() const
{
    LaurentRational r(*this);
    r.num_ = -r.num_;
    return r;
}

LaurentRational operator+(const LaurentRational& a, const LaurentRational& b)
{
    if (a.den_ == b.den_) return LaurentRational(a.num_ + b.num_, a.den_);
    return LaurentRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

LaurentRational operator-(const LaurentRational& a, const LaurentRational& b)
{
    return a + (-b);
}

LaurentRational operator*(const LaurentRational& a, const LaurentRational& b)
{
    return LaurentRational(a.num_ * b.num_, a.den_ * b.den_);
}

LaurentRational operator/(const LaurentRational& a, const LaurentRational& b)
{
    if (b.is_zero()) throw NumericError("division by the zero rational function");
    return LaurentRational(a.num_ * b.den_, a.den_ * b.num_);
}

LaurentRational LaurentRational::pow(int k) const
{
    if (k < 0) {
        if (is_zero()) throw NumericError("negative power of zero");
        return LaurentRational(den_.pow(-k), num_.pow(-k));
    }
    return LaurentRational(num_.pow(k), den_.pow(k));
}

bool rational_eq(const LaurentRational& a, const LaurentRational& b)
{
    return a.num() * b.den() == b.num() * a.den();
}

Complex eval(const LaurentRational& r, std::span<const Complex> z, std::span<const Complex> params)
{
    const Complex d = eval(r.den(), z, params);
    if (d == 0.0) throw NumericError("denominator vanishes at evaluation point");
    return eval(r.num(), z, params) / d;
}

std::string to_string(const LaurentRational& r, const Ring& ring)
{
    if (r.is_polynomial()) return to_string(r.num(), ring);
    return "(" + to_string(r.num(), ring) + ")/(" + to_string(r.den(), ring) + ")";
}

} // namespace lgwb
