#ifndef AIRPOCKETS_SERIES_HPP
#define AIRPOCKETS_SERIES_HPP

// Truncated power series in x with exact rational coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "airpockets/error.hpp"

namespace airpockets {

using Rational = mpq_class;
using Integer = mpz_class;

/// Default truncation order for catalog evaluations.
inline constexpr int kDefaultOrder = 40;

/// Coefficients of x^0..x^order. Binary arithmetic requires equal orders;
/// re-truncate explicitly with truncated() when they differ.
class TruncatedSeries {
public:
    TruncatedSeries() : coeffs_(1) {}

    explicit TruncatedSeries(int order) : coeffs_(check_order(order) + 1) {}

    TruncatedSeries(int order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        coeffs_.resize(check_order(order) + 1);
        for (auto& c : coeffs_) c.canonicalize();
    }

    /// Polynomial c0 + c1 x + ... truncated to `order`.
    static TruncatedSeries polynomial(int order, std::initializer_list<long> coeffs) {
        TruncatedSeries s(order);
        int i = 0;
        for (long c : coeffs) {
            if (i > order) break;
            s.coeffs_[i++] = c;
        }
        return s;
    }
    static TruncatedSeries constant(int order, const Rational& c) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(order, 1); }
    /// x^j (zero when j > order).
    static TruncatedSeries monomial(int order, int j, const Rational& c = 1) {
        TruncatedSeries s(order);
        if (j <= order) s.coeffs_[j] = c;
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int n) const { return coeffs_.at(n); }
    Rational& operator[](int n) { return coeffs_.at(n); }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    /// Index of the first nonzero coefficient; nullopt for the zero series.
    std::optional<int> valuation() const {
        for (int i = 0; i <= order(); ++i)
            if (sgn(coeffs_[i]) != 0) return i;
        return std::nullopt;
    }
    bool is_zero() const { return !valuation(); }

    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (c.get_den() != 1) return false;
        return true;
    }

    /// Coefficients as integers; throws if any is non-integral.
    std::vector<Integer> integer_coeffs() const {
        std::vector<Integer> out;
        out.reserve(coeffs_.size());
        for (int i = 0; i <= order(); ++i) {
            if (coeffs_[i].get_den() != 1)
                throw Error(ErrorCode::NonIntegral,
                            "non-integral coefficient " + coeffs_[i].get_str() + " at x^" +
                                std::to_string(i));
            out.push_back(coeffs_[i].get_num());
        }
        return out;
    }

    TruncatedSeries truncated(int new_order) const {
        if (new_order > order())
            throw Error(ErrorCode::OrderMismatch, "cannot extend a series from order " +
                                                      std::to_string(order()) + " to " +
                                                      std::to_string(new_order));
        return TruncatedSeries(new_order, {coeffs_.begin(), coeffs_.begin() + new_order + 1});
    }

    bool operator==(const TruncatedSeries& other) const { return coeffs_ == other.coeffs_; }

    TruncatedSeries operator-() const {
        TruncatedSeries r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    TruncatedSeries& operator+=(const TruncatedSeries& b) {
        require_same_order(b);
        for (int i = 0; i <= order(); ++i) coeffs_[i] += b.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator-=(const TruncatedSeries& b) {
        require_same_order(b);
        for (int i = 0; i <= order(); ++i) coeffs_[i] -= b.coeffs_[i];
        return *this;
    }
    TruncatedSeries& operator*=(const Rational& c) {
        for (auto& x : coeffs_) x *= c;
        return *this;
    }

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    friend TruncatedSeries operator*(const Rational& c, TruncatedSeries a) { return a *= c; }

    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        a.require_same_order(b);
        const int n = a.order();
        TruncatedSeries r(n);
        auto va = a.valuation();
        auto vb = b.valuation();
        if (!va || !vb) return r;
        Rational term;
        for (int i = *va; i <= n; ++i) {
            if (sgn(a.coeffs_[i]) == 0) continue;
            for (int j = *vb; i + j <= n; ++j) {
                if (sgn(b.coeffs_[j]) == 0) continue;
                mpq_mul(term.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
                r.coeffs_[i + j] += term;
            }
        }
        return r;
    }
    TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

    std::string to_string() const {
        std::string out;
        for (int i = 0; i <= order(); ++i) {
            if (sgn(coeffs_[i]) == 0) continue;
            Rational c = coeffs_[i];
            if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
            else if (sgn(c) < 0) out += "-";
            c = abs(c);
            if (c != 1 || i == 0) out += c.get_str();
            if (i > 0) out += (c != 1 ? "*x" : "x");
            if (i > 1) out += "^" + std::to_string(i);
        }
        if (out.empty()) out = "0";
        return out + " + O(x^" + std::to_string(order() + 1) + ")";
    }

private:
    static int check_order(int order) {
        if (order < 0) throw Error(ErrorCode::OrderMismatch, "negative truncation order");
        return order;
    }
    void require_same_order(const TruncatedSeries& b) const {
        if (order() != b.order())
            throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(order()) + " and " +
                                                      std::to_string(b.order()));
    }

    std::vector<Rational> coeffs_;
};

/// Multiplies by x^j. Positive j drops the overflow and keeps the order;
/// negative j divides exactly and lowers the order by |j|.
inline TruncatedSeries shift(const TruncatedSeries& a, int j) {
    const int n = a.order();
    if (j >= 0) {
        TruncatedSeries r(n);
        for (int i = 0; i + j <= n; ++i) r[i + j] = a[i];
        return r;
    }
    const int d = -j;
    auto v = a.valuation();
    if (v && *v < d)
        throw Error(ErrorCode::ValuationUnderflow,
                    "dividing by x^" + std::to_string(d) + " a series of valuation " +
                        std::to_string(*v));
    if (d > n)
        throw Error(ErrorCode::OrderMismatch, "dividing by x^" + std::to_string(d) +
                                                  " leaves no coefficients at order " +
                                                  std::to_string(n));
    TruncatedSeries r(n - d);
    for (int i = d; i <= n; ++i) r[i - d] = a[i];
    return r;
}

namespace detail {

// Quotient of a by b where b has a nonzero constant term; same order.
inline TruncatedSeries divide_unit(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = a.order();
    TruncatedSeries q(n);
    Rational inv_b0 = 1 / b[0];
    Rational acc;
    for (int i = 0; i <= n; ++i) {
        acc = a[i];
        for (int j = 1; j <= i; ++j)
            if (sgn(b[j]) != 0) acc -= b[j] * q[i - j];
        q[i] = acc * inv_b0;
    }
    return q;
}

} // namespace detail

/// a / b. The common x-valuation is cancelled first, so the result carries
/// order a.order() - valuation(b).
inline TruncatedSeries div(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                                  std::to_string(b.order()));
    auto vb = b.valuation();
    if (!vb) throw Error(ErrorCode::DivisionByZeroSeries, "divisor is zero to order");
    auto va = a.valuation();
    if (va && *va < *vb)
        throw Error(ErrorCode::ValuationUnderflow, "quotient has a pole of order " +
                                                       std::to_string(*vb - *va));
    if (*vb == 0) return detail::divide_unit(a, b);
    return detail::divide_unit(shift(a, -*vb), shift(b, -*vb));
}

inline TruncatedSeries inverse(const TruncatedSeries& a) {
    if (sgn(a[0]) == 0) throw Error(ErrorCode::NonInvertible, "constant term is zero");
    return detail::divide_unit(TruncatedSeries::one(a.order()), a);
}

/// Square root with constant term +1, by Newton iteration with order doubling.
inline TruncatedSeries sqrt(const TruncatedSeries& a) {
    if (a[0] != 1)
        throw Error(ErrorCode::BadConstantTerm, "square root needs constant term 1, got " +
                                                    a[0].get_str());
    const int n = a.order();
    TruncatedSeries s = TruncatedSeries::one(0);
    int prec = 0;
    while (prec < n) {
        prec = std::min(n, 2 * prec + 1);
        TruncatedSeries lifted(prec, s.coeffs());
        TruncatedSeries target = a.truncated(prec);
        // s <- (s + a/s) / 2
        lifted = (lifted + detail::divide_unit(target, lifted)) * Rational(1, 2);
        s = std::move(lifted);
    }
    return s.order() == n ? s : TruncatedSeries(n, s.coeffs());
}

/// a^e by repeated squaring; negative exponents invert first.
inline TruncatedSeries pow(const TruncatedSeries& a, int e) {
    if (e < 0) return pow(inverse(a), -e);
    TruncatedSeries result = TruncatedSeries::one(a.order());
    TruncatedSeries base = a;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

inline TruncatedSeries common_truncate(const TruncatedSeries& a, int order) {
    return a.order() == order ? a : a.truncated(order);
}

} // namespace airpockets

#endif // AIRPOCKETS_SERIES_HPP
