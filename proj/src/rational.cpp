#include "lgwb/rational.hpp"

#include "lgwb/error.hpp"

#include <cctype>
#include <cmath>

namespace lgwb {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

    bool negative = false;
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational value;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        auto num = body.substr(0, slash);
        auto den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw InputError("malformed rational '" + std::string(text) + "'");
        mpz_class d{std::string(den)};
        if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
        value = Rational(mpz_class{std::string(num)}, d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        auto ip = body.substr(0, dot);
        auto fp = body.substr(dot + 1);
        if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
            throw InputError("malformed decimal '" + std::string(text) + "'");
        mpz_class scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
        mpz_class whole(ip.empty() ? std::string("0") : std::string(ip));
        mpz_class frac(fp.empty() ? std::string("0") : std::string(fp));
        value = Rational(whole * scale + frac, scale);
    } else {
        if (!all_digits(body))
            throw InputError("malformed rational '" + std::string(text) + "'");
        value = Rational(mpz_class{std::string(body)});
    }
    value.canonicalize();
    return negative ? Rational(-value) : value;
}

Rational rational_from_double(double x)
{
    if (!std::isfinite(x)) throw InputError("non-finite value cannot be made rational");
    Rational r(x);  // mpq_set_d is exact
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r)
{
    return r.get_str();
}

} // namespace lgwb
