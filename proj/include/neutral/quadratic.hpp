#pragma once

#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "neutral/errors.hpp"
#include "neutral/rational.hpp"

namespace neutral {

inline bool is_square_free(std::int64_t d) {
    if (d < 1) return false;
    for (std::int64_t f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

/// Exact element p + q·sqrt(d) of the real quadratic field Q(sqrt d).
///
/// d = 1 is the pure-rational mode (q is folded into p). Mixing two values
/// with different d is an error unless one of them is rational.
class QuadraticReal {
public:
    QuadraticReal() = default;
    QuadraticReal(long long p) : p_(p) {}  // NOLINT: integers embed implicitly
    QuadraticReal(Rational p) : p_(std::move(p)) {}  // NOLINT
    QuadraticReal(Rational p, Rational q, std::int64_t d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
        if (!is_square_free(d_)) throw data_error("field parameter d = " + std::to_string(d_) +
                                                  " is not a positive square-free integer");
        normalize();
    }

    const Rational& p() const noexcept { return p_; }
    const Rational& q() const noexcept { return q_; }
    std::int64_t d() const noexcept { return d_; }
    bool is_rational() const noexcept { return q_ == 0; }

    /// Exact sign: compare p^2 with q^2 d when p and q disagree.
    int sign() const {
        const int sp = p_.sign(), sq = q_.sign();
        if (sq == 0) return sp;
        if (sp == 0 || sp == sq) return sq;
        const Rational lhs = p_ * p_, rhs = q_ * q_ * d_;
        return lhs > rhs ? sp : sq;
    }

    QuadraticReal operator-() const { return raw(-p_, -q_, d_); }

    friend QuadraticReal operator+(const QuadraticReal& a, const QuadraticReal& b) {
        const auto d = common(a, b);
        return raw(a.p_ + b.p_, a.q_ + b.q_, d);
    }
    friend QuadraticReal operator-(const QuadraticReal& a, const QuadraticReal& b) {
        const auto d = common(a, b);
        return raw(a.p_ - b.p_, a.q_ - b.q_, d);
    }
    friend QuadraticReal operator*(const QuadraticReal& a, const QuadraticReal& b) {
        const auto d = common(a, b);
        return raw(a.p_ * b.p_ + a.q_ * b.q_ * d, a.p_ * b.q_ + a.q_ * b.p_, d);
    }
    friend QuadraticReal operator/(const QuadraticReal& a, const QuadraticReal& b) {
        const auto d = common(a, b);
        // (a.p + a.q s)(b.p - b.q s) / (b.p^2 - b.q^2 d)
        const Rational norm = b.p_ * b.p_ - b.q_ * b.q_ * d;
        if (norm == 0) throw data_error("division by zero in Q(sqrt d)");
        return raw((a.p_ * b.p_ - a.q_ * b.q_ * d) / norm, (a.q_ * b.p_ - a.p_ * b.q_) / norm, d);
    }
    QuadraticReal& operator+=(const QuadraticReal& o) { return *this = *this + o; }
    QuadraticReal& operator-=(const QuadraticReal& o) { return *this = *this - o; }
    QuadraticReal& operator*=(const QuadraticReal& o) { return *this = *this * o; }
    QuadraticReal& operator/=(const QuadraticReal& o) { return *this = *this / o; }

    friend bool operator==(const QuadraticReal& a, const QuadraticReal& b) {
        return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
    }
    friend auto operator<=>(const QuadraticReal& a, const QuadraticReal& b) {
        const int s = (a - b).sign();
        return s < 0 ? std::strong_ordering::less
                     : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// Decimal rendering with `digits` significant digits, for humans only.
    std::string decimal(unsigned digits = 30) const {
        using big = boost::multiprecision::cpp_dec_float_100;
        auto to_big = [](const Rational& r) {
            return big(numerator(r)) / big(denominator(r));
        };
        big v = to_big(p_);
        if (q_ != 0) v += to_big(q_) * boost::multiprecision::sqrt(big(d_));
        return v.str(static_cast<std::streamsize>(digits));
    }

    /// "p + q*sqrt(d)" with exact rationals.
    std::string str() const {
        if (q_ == 0) return p_.str();
        return p_.str() + (q_.sign() < 0 ? " - " : " + ") + Rational(abs(q_)).str() + "*sqrt(" +
               std::to_string(d_) + ")";
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticReal& x) { return os << x.str(); }

private:
    static QuadraticReal raw(Rational p, Rational q, std::int64_t d) {
        QuadraticReal x;
        x.p_ = std::move(p);
        x.q_ = std::move(q);
        x.d_ = d;
        x.normalize();
        return x;
    }

    static std::int64_t common(const QuadraticReal& a, const QuadraticReal& b) {
        if (a.q_ == 0) return b.d_;
        if (b.q_ == 0 || a.d_ == b.d_) return a.d_;
        throw data_error("cannot mix Q(sqrt " + std::to_string(a.d_) + ") and Q(sqrt " +
                         std::to_string(b.d_) + ")");
    }

    void normalize() {
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
        }
    }

    Rational p_{0};
    Rational q_{0};
    std::int64_t d_ = 1;
};

} // namespace neutral
