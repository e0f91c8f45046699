#ifndef AIRPOCKETS_SERIES_SYSTEM_HPP
#define AIRPOCKETS_SERIES_SYSTEM_HPP

// Exact polynomials over Q, fraction-free determinants, and square linear
// systems with truncated-series entries.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "airpockets/error.hpp"
#include "airpockets/series.hpp"

namespace airpockets {

/// Dense polynomial in x over Q, kept without trailing zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<long> coeffs) {
        for (long c : coeffs) coeffs_.emplace_back(c);
        trim();
    }
    static Polynomial x() { return Polynomial{0, 1}; }
    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int i) const {
        return i >= 0 && i <= degree() ? coeffs_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool operator==(const Polynomial&) const = default;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
        return Polynomial(std::move(c));
    }
    Polynomial operator-() const { return Polynomial{} - *this; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return Polynomial(std::move(c));
    }

    /// Exact quotient; throws when b does not divide a.
    friend Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw Error(ErrorCode::DivisionByZeroSeries, "polynomial division by 0");
        std::vector<Rational> rem = a.coeffs_;
        if (a.degree() < b.degree()) {
            if (a.is_zero()) return {};
            throw Error(ErrorCode::NonInvertible, "inexact polynomial division");
        }
        std::vector<Rational> q(a.degree() - b.degree() + 1);
        const Rational& lead = b.coeffs_.back();
        for (int i = a.degree() - b.degree(); i >= 0; --i) {
            Rational f = rem[i + b.degree()] / lead;
            q[i] = f;
            if (sgn(f) == 0) continue;
            for (int j = 0; j <= b.degree(); ++j) rem[i + j] -= f * b.coeffs_[j];
        }
        for (const auto& r : rem)
            if (sgn(r) != 0) throw Error(ErrorCode::NonInvertible, "inexact polynomial division");
        return Polynomial(std::move(q));
    }

    TruncatedSeries to_series(int order) const {
        TruncatedSeries s(order);
        for (int i = 0; i <= std::min(order, degree()); ++i) s[i] = coeffs_[i];
        return s;
    }

    std::string to_string() const {
        return is_zero() ? "0" : to_series(degree()).to_string();
    }

private:
    void trim() {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// Determinant by Bareiss fraction-free elimination; every division is exact.
inline Polynomial determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return Polynomial{1};
    Polynomial prev{1};
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return {};
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = {};
        }
        prev = m[k][k];
    }
    Polynomial det = m[n - 1][n - 1];
    return negate ? -det : det;
}

struct SeriesSystem {
    std::vector<std::vector<TruncatedSeries>> matrix;
    std::vector<TruncatedSeries> rhs;

    std::size_t dimension() const noexcept { return rhs.size(); }
    int order() const { return rhs.empty() ? 0 : rhs.front().order(); }

    static SeriesSystem from_polynomials(const PolyMatrix& m, const std::vector<Polynomial>& b,
                                         int order) {
        SeriesSystem sys;
        for (const auto& row : m) {
            auto& out = sys.matrix.emplace_back();
            for (const auto& p : row) out.push_back(p.to_series(order));
        }
        for (const auto& p : b) sys.rhs.push_back(p.to_series(order));
        return sys;
    }
};

/// Gaussian elimination over truncated series. Each column pivots on the
/// entry of least x-valuation; a pivot without a constant term means the
/// determinant vanishes at x = 0 and the system is rejected.
inline std::vector<TruncatedSeries> solve_series_system(const SeriesSystem& sys) {
    const std::size_t n = sys.dimension();
    if (sys.matrix.size() != n)
        throw Error(ErrorCode::BadParams, "matrix and right-hand side sizes differ");
    for (const auto& row : sys.matrix)
        if (row.size() != n) throw Error(ErrorCode::BadParams, "matrix is not square");

    auto a = sys.matrix;
    auto b = sys.rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        int best = 0;
        for (std::size_t row = col; row < n; ++row) {
            auto v = a[row][col].valuation();
            if (v && (pivot == n || *v < best)) {
                pivot = row;
                best = *v;
            }
        }
        if (pivot == n || best > 0)
            throw Error(ErrorCode::SingularToOrder,
                        "no invertible pivot in column " + std::to_string(col));
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        TruncatedSeries inv = inverse(a[col][col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            TruncatedSeries factor = a[row][col] * inv;
            for (std::size_t j = col; j < n; ++j)
                if (!a[col][j].is_zero()) a[row][j] -= factor * a[col][j];
            b[row] -= factor * b[col];
        }
    }
    std::vector<TruncatedSeries> x(n, TruncatedSeries(sys.order()));
    for (std::size_t i = n; i-- > 0;) {
        TruncatedSeries acc = b[i];
        for (std::size_t j = i + 1; j < n; ++j)
            if (!a[i][j].is_zero()) acc -= a[i][j] * x[j];
        x[i] = div(acc, a[i][i]);
    }

    for (std::size_t i = 0; i < n; ++i) {
        TruncatedSeries residual = -sys.rhs[i];
        for (std::size_t j = 0; j < n; ++j)
            if (!sys.matrix[i][j].is_zero()) residual += sys.matrix[i][j] * x[j];
        if (!residual.is_zero())
            throw Error(ErrorCode::SingularToOrder,
                        "nonzero residual in row " + std::to_string(i));
    }
    return x;
}

} // namespace airpockets

#endif // AIRPOCKETS_SERIES_SYSTEM_HPP
