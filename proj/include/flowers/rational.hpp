#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace flowers {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Thin value wrapper around GMP's mpq_class so that callers
/// never see expression templates.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t numerator, std::int64_t denominator);
    explicit Rational(mpq_class value);

    /// Parses "a/b" or "a". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    const mpq_class& value() const noexcept { return value_; }
    std::string numerator() const;
    std::string denominator() const;

    double to_double() const;
    /// Lossless "num/den" form; integers print as "k/1".
    std::string to_string() const;

    bool is_zero() const noexcept { return sgn(value_) == 0; }
    int sign() const noexcept { return sgn(value_); }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    friend Rational operator-(const Rational& r) { return Rational(mpq_class(-r.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    mpq_class value_{0};
};

Rational abs(const Rational& r);
Rational square(const Rational& r);

/// Best rational approximation of `x` with denominator at most
/// `max_denominator`, by continued-fraction convergents and semiconvergents.
Rational rationalize(double x, std::int64_t max_denominator);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace flowers
