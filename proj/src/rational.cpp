#include "flowers/rational.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace flowers {

Rational::Rational(std::int64_t value) {
    static_assert(sizeof(long) == sizeof(std::int64_t));
    value_ = mpz_class(static_cast<long>(value));
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw std::invalid_argument("Rational: zero denominator");
    }
    value_ = mpq_class(mpz_class(static_cast<long>(numerator)), mpz_class(static_cast<long>(denominator)));
    value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    mpz_class num;
    mpz_class den{1};
    try {
        if (slash == std::string_view::npos) {
            num = mpz_class(std::string(text), 10);
        } else {
            num = mpz_class(std::string(text.substr(0, slash)), 10);
            den = mpz_class(std::string(text.substr(slash + 1)), 10);
        }
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    }
    if (den == 0) {
        throw std::invalid_argument("Rational: zero denominator in '" + std::string(text) + "'");
    }
    return Rational(mpq_class(num, den));
}

std::string Rational::numerator() const { return value_.get_num().get_str(); }
std::string Rational::denominator() const { return value_.get_den().get_str(); }

double Rational::to_double() const {
    // mpq_get_d truncates; this is within one ulp, good enough for comparisons at 1e-9.
    return value_.get_d();
}

std::string Rational::to_string() const {
    return numerator() + "/" + denominator();
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) {
        throw std::domain_error("Rational: division by zero");
    }
    value_ /= rhs.value_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational square(const Rational& r) { return r * r; }

Rational rationalize(double x, std::int64_t max_denominator) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rationalize: non-finite input");
    }
    if (max_denominator < 1) {
        throw std::invalid_argument("rationalize: max_denominator must be >= 1");
    }
    const mpq_class exact(x);
    const mpz_class cap(static_cast<long>(max_denominator));
    if (exact.get_den() <= cap) {
        return Rational(exact);
    }

    // Convergents p_k/q_k of the continued fraction of `exact`.
    mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    mpz_class n = exact.get_num();
    mpz_class d = exact.get_den();
    while (true) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        const mpz_class q2 = q0 + a * q1;
        if (q2 > cap) {
            break;
        }
        const mpz_class p2 = p0 + a * p1;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const mpz_class rem = n - a * d;
        n = d;
        d = rem;
        if (d == 0) {
            break;
        }
    }
    // Best semiconvergent vs last convergent.
    mpz_class k;
    mpz_class room = cap - q0;
    mpz_fdiv_q(k.get_mpz_t(), room.get_mpz_t(), q1.get_mpz_t());
    const mpq_class bound1(p0 + k * p1, q0 + k * q1);
    const mpq_class bound2(p1, q1);
    mpq_class e1 = bound1 - exact;
    mpq_class e2 = bound2 - exact;
    return ::abs(e2) <= ::abs(e1) ? Rational(bound2) : Rational(bound1);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
}

}  // namespace flowers
