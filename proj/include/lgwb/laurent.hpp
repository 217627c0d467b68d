#pragma once

// Sparse multivariate Laurent polynomials.
//
// Laurent<C> maps exponent vectors to coefficients of type C and keeps the
// canonical form: terms in lexicographic exponent order, no zero
// coefficients. Two coefficient rings are used:
//   ParamCoeff            exact rationals times integer powers of named
//                         parameters (symbolic mode)
//   std::complex<double>  evaluated weights (numeric mode)

#include "lgwb/error.hpp"
#include "lgwb/lattice.hpp"
#include "lgwb/rational.hpp"

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lgwb {

using Exponent = std::vector<int>;
using Complex = std::complex<double>;

// Variable and parameter names for rendering and name-based evaluation.
struct Ring {
    std::vector<std::string> variables;
    std::vector<std::string> parameters;
};

// Finite sum of rational multiples of parameter monomials q^e.
// Keys have trailing zero exponents trimmed, so values do not depend on the
// length of the parameter list.
class ParamCoeff {
public:
    ParamCoeff() = default;
    ParamCoeff(long c) : ParamCoeff(Rational(c)) {}
    ParamCoeff(const Rational& c);

    static ParamCoeff parameter(std::size_t index, int power = 1, const Rational& scale = 1);

    const std::map<Exponent, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    // Largest parameter index used, plus one.
    std::size_t span() const;

    // Only defined for monomials; throws NumericError otherwise.
    ParamCoeff inverse() const;

    Complex eval(std::span<const Complex> params) const;

    ParamCoeff operator-() const;
    ParamCoeff& operator+=(const ParamCoeff& o);
    ParamCoeff& operator-=(const ParamCoeff& o);
    friend ParamCoeff operator+(ParamCoeff a, const ParamCoeff& b) { return a += b; }
    friend ParamCoeff operator-(ParamCoeff a, const ParamCoeff& b) { return a -= b; }
    friend ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b);
    bool operator==(const ParamCoeff& o) const { return terms_ == o.terms_; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    void add_term(Exponent e, const Rational& c);
    std::map<Exponent, Rational> terms_;
};

namespace detail {

inline bool is_zero(const ParamCoeff& c) { return c.is_zero(); }
inline bool is_zero(const Complex& c) { return c == 0.0; }
inline ParamCoeff inverse(const ParamCoeff& c) { return c.inverse(); }
inline Complex inverse(const Complex& c) { return 1.0 / c; }
inline Complex eval_coeff(const ParamCoeff& c, std::span<const Complex> params) { return c.eval(params); }
inline Complex eval_coeff(const Complex& c, std::span<const Complex>) { return c; }

Complex ipow(Complex base, int e);

} // namespace detail

template <class C>
class Laurent {
public:
    using Coeff = C;
    using Terms = std::map<Exponent, C>;

    Laurent() = default;
    explicit Laurent(std::size_t nvars, std::size_t nparams = 0) : nvars_(nvars), nparams_(nparams) {}

    static Laurent constant(const C& c, std::size_t nvars, std::size_t nparams = 0)
    {
        Laurent p(nvars, nparams);
        p.add_term(Exponent(nvars, 0), c);
        return p;
    }

    static Laurent monomial(const Exponent& e, const C& c, std::size_t nparams = 0)
    {
        Laurent p(e.size(), nparams);
        p.add_term(e, c);
        return p;
    }

    // z_i^power (0-based index).
    static Laurent variable(std::size_t i, std::size_t nvars, std::size_t nparams = 0, int power = 1)
    {
        Exponent e(nvars, 0);
        e.at(i) = power;
        return monomial(e, C(1), nparams);
    }

    std::size_t nvars() const { return nvars_; }
    std::size_t nparams() const { return nparams_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }

    void add_term(const Exponent& e, const C& c)
    {
        if (e.size() != nvars_) throw InputError("exponent length does not match number of variables");
        if (detail::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (detail::is_zero(it->second)) terms_.erase(it);
        }
    }

    Laurent operator-() const
    {
        Laurent r(nvars_, nparams_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    Laurent& operator+=(const Laurent& o)
    {
        check_compatible(o);
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) { return *this += -o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b)
    {
        a.check_compatible(b);
        Laurent r(a.nvars_, a.nparams_);
        Exponent e(a.nvars_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    Laurent scaled(const C& c) const
    {
        Laurent r(nvars_, nparams_);
        for (const auto& [e, x] : terms_) r.add_term(e, x * c);
        return r;
    }

    // Negative exponents require a monomial with invertible coefficient.
    Laurent pow(int k) const
    {
        if (k < 0) {
            if (!is_monomial()) throw InputError("negative power of a non-monomial Laurent polynomial");
            const auto& [e, c] = *terms_.begin();
            Exponent inv(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
            return monomial(inv, detail::inverse(c), nparams_).pow(-k);
        }
        Laurent result = constant(C(1), nvars_, nparams_);
        Laurent base = *this;
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k) base *= base;
        }
        return result;
    }

    bool operator==(const Laurent& o) const
    {
        return nvars_ == o.nvars_ && nparams_ == o.nparams_ && terms_ == o.terms_;
    }

    void check_compatible(const Laurent& o) const
    {
        if (nvars_ != o.nvars_) throw InputError("mismatched number of variables");
        if (nparams_ != o.nparams_) throw InputError("mismatched parameter lists");
    }

private:
    std::size_t nvars_ = 0;
    std::size_t nparams_ = 0;
    Terms terms_;
};

using LaurentPoly = Laurent<ParamCoeff>;
using NumericPoly = Laurent<Complex>;

// z_i ∂p/∂z_i, 0-based variable index.
template <class C>
Laurent<C> log_derivative(const Laurent<C>& p, std::size_t i)
{
    if (i >= p.nvars()) throw InputError("variable index out of range");
    Laurent<C> r(p.nvars(), p.nparams());
    for (const auto& [e, c] : p.terms())
        if (e[i] != 0) r.add_term(e, c * C(static_cast<long>(e[i])));
    return r;
}

// Numeric value; terms are summed in canonical order.
template <class C>
Complex eval(const Laurent<C>& p, std::span<const Complex> z, std::span<const Complex> params = {})
{
    if (z.size() != p.nvars()) throw InputError("point dimension does not match number of variables");
    if (params.size() < p.nparams()) throw InputError("unassigned parameter");
    for (auto zi : z)
        if (zi == 0.0) throw InputError("evaluation at a zero coordinate");
    Complex sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        Complex t = detail::eval_coeff(c, params);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= detail::ipow(z[i], e[i]);
        sum += t;
    }
    return sum;
}

// Monomial change of variables z_j ↦ Π_k x_k^{m[j][k]}, so z^a ↦ x^{mᵀa}.
template <class C>
Laurent<C> apply_monomial_map(const Laurent<C>& p, const IntMatrix& m)
{
    if (m.size() != p.nvars()) throw InputError("monomial map has wrong number of rows");
    const std::size_t target = m.empty() ? 0 : m.front().size();
    Laurent<C> r(target, p.nparams());
    for (const auto& [e, c] : p.terms()) {
        Exponent out(target, 0);
        for (std::size_t j = 0; j < e.size(); ++j)
            for (std::size_t k = 0; k < target; ++k) out[k] += static_cast<int>(m[j][k]) * e[j];
        r.add_term(out, c);
    }
    return r;
}

// Evaluates every parameter, producing the numeric-mode polynomial.
NumericPoly to_numeric(const LaurentPoly& p, std::span<const Complex> params);

Complex eval(const LaurentPoly& p, const Ring& ring, std::span<const Complex> z,
             const std::map<std::string, Complex>& params);

// Canonical text, e.g. "z1 + z2 + q*z1^-1*z2^-1".
std::string to_string(const LaurentPoly& p, const Ring& ring);

std::string to_string(const NumericPoly& p, const Ring& ring);

// a/b when b divides a exactly (lex division; b's leading coefficient must be
// a parameter monomial). nullopt otherwise.
std::optional<LaurentPoly> exact_quotient(const LaurentPoly& a, const LaurentPoly& b);

// num/den with den ≠ 0. Normalized on construction: den's minimal exponent
// is shifted to 0, and when den's leading coefficient is a parameter
// monomial it is scaled to 1.
class LaurentRational {
public:
    LaurentRational() = default;
    LaurentRational(LaurentPoly num);
    LaurentRational(LaurentPoly num, LaurentPoly den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }
    std::size_t nparams() const { return num_.nparams(); }
    bool is_zero() const { return num_.is_zero(); }

    // True when the value is a Laurent polynomial after normalization.
    bool is_polynomial() const;

    LaurentRational operator-() const;
    friend LaurentRational operator+(const LaurentRational& a, const LaurentRational& b);
    friend LaurentRational operator-(const LaurentRational& a, const LaurentRational& b);
    friend LaurentRational operator*(const LaurentRational& a, const LaurentRational& b);
    friend LaurentRational operator/(const LaurentRational& a, const LaurentRational& b);
    LaurentRational pow(int k) const;

    // Structural equality of the normalized pairs (use rational_eq for values).
    bool operator==(const LaurentRational& o) const { return num_ == o.num_ && den_ == o.den_; }

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_;
};

bool rational_eq(const LaurentRational& a, const LaurentRational& b);

Complex eval(const LaurentRational& r, std::span<const Complex> z, std::span<const Complex> params = {});

std::string to_string(const LaurentRational& r, const Ring& ring);

} // namespace lgwb
