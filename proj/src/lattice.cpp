#include "lgwb/lattice.hpp"

#include "lgwb/error.hpp"

#include <sstream>

namespace lgwb {

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    if (a.empty()) return {};
    const std::size_t inner = a.front().size();
    if (b.size() != inner) throw InputError("matrix dimension mismatch in multiply");
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    IntMatrix c(a.size(), std::vector<std::int64_t>(cols, 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < inner; ++k)
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

IntMatrix transpose(const IntMatrix& a)
{
    if (a.empty()) return {};
    IntMatrix t(a.front().size(), std::vector<std::int64_t>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

namespace {

RationalMatrix to_rational(const IntMatrix& a)
{
    RationalMatrix r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (auto v : a[i]) r[i].emplace_back(static_cast<long>(v));
    return r;
}

// Row-reduces in place; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < ncols && row < a.size(); ++col) {
        std::size_t p = row;
        while (p < a.size() && a[p][col] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        const Rational inv = 1 / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

std::int64_t determinant(const IntMatrix& a)
{
    const std::size_t n = a.size();
    RationalMatrix m = to_rational(a);
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t p = col;
        while (p < n && m[p][col] == 0) ++p;
        if (p == n) return 0;
        if (p != col) {
            std::swap(m[p], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det.get_num().get_si();
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a)
{
    const std::size_t n = a.size();
    const auto det = determinant(a);
    if (det != 1 && det != -1) return std::nullopt;
    RationalMatrix aug = to_rational(a);
    for (std::size_t i = 0; i < n; ++i) {
        aug[i].resize(2 * n, Rational(0));
        aug[i][n + i] = 1;
    }
    row_reduce(aug, n);
    IntMatrix inv(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j].get_num().get_si();
    return inv;
}

std::string to_string(const IntMatrix& a)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < a[i].size(); ++j) os << (j ? "," : "") << a[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

std::size_t rank(RationalMatrix a)
{
    if (a.empty()) return 0;
    return row_reduce(a, a.front().size()).size();
}

std::optional<std::vector<Rational>> solve_square(RationalMatrix a, std::vector<Rational> b)
{
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    if (row_reduce(a, n).size() != n) return std::nullopt;
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
    return x;
}

std::optional<std::vector<Rational>> solve_any(RationalMatrix a, std::vector<Rational> b)
{
    if (a.empty()) return std::vector<Rational>{};
    const std::size_t ncols = a.front().size();
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
    const auto pivots = row_reduce(a, ncols + 1);
    if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
    std::vector<Rational> x(ncols, Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][ncols];
    return x;
}

} // namespace lgwb
