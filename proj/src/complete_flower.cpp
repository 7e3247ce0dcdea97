#include "flowers/complete_flower.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flowers {

void CompleteFlowerParams::validate() const {
    if (m < 3) {
        throw std::invalid_argument("complete flower: m must be >= 3, got " + std::to_string(m));
    }
    if (n < 3) {
        throw std::invalid_argument("complete flower: n must be >= 3, got " + std::to_string(n));
    }
}

std::string_view to_string(PairCase c) {
    switch (c) {
        case PairCase::BothAssociated: return "both-associated";
        case PairCase::OneAssociated: return "one-associated";
        case PairCase::Neither: return "neither";
    }
    return "?";
}

namespace {

void check_d(PairCase c, int d, int n) {
    const int hi = c == PairCase::BothAssociated ? n - 1 : n;
    if (d < 1 || d > hi) {
        throw std::invalid_argument("d=" + std::to_string(d) + " invalid for case " +
                                    std::string(to_string(c)) + " with n=" + std::to_string(n));
    }
}

}  // namespace

Rational cf_resistance(const CompleteFlowerParams& p, PairCase c, int d) {
    p.validate();
    check_d(c, d, p.n);
    const Rational m(p.m);
    const Rational n(p.n);
    const Rational dd(d);
    switch (c) {
        case PairCase::BothAssociated:
            return Rational(2) * dd * (n - dd) / (m * n);
        case PairCase::OneAssociated:
            return Rational(2) * dd / m - square(Rational(2) * dd - 1) / (Rational(2) * m * n);
        case PairCase::Neither:
            return Rational(2) * dd / m - Rational(2) * square(dd - 1) / (m * n);
    }
    throw std::invalid_argument("cf_resistance: unknown case");
}

Rational cf_max_resistance(const CompleteFlowerParams& p) {
    p.validate();
    const Rational m(p.m);
    const Rational n(p.n);
    if (p.n % 2 == 0) {
        return (n + 4) / (Rational(2) * m);
    }
    return (n * n + Rational(4) * n - 1) / (Rational(2) * m * n);
}

Rational cf_kirchhoff(const CompleteFlowerParams& p) {
    p.validate();
    const Rational m(p.m);
    const Rational n(p.n);
    const Rational inner = Rational(5) + Rational(12) * n + n * n +
                           m * m * (Rational(-1) + Rational(6) * n + n * n) -
                           m * (Rational(1) + Rational(18) * n + Rational(2) * n * n);
    return n * inner / (Rational(6) * m);
}

Rational cf_kemeny(const CompleteFlowerParams& p) {
    p.validate();
    const Rational m(p.m);
    const Rational n(p.n);
    return (m - 1) * (Rational(-12) * n + m * (n * n + Rational(6) * n - 1)) / (Rational(6) * m);
}

Rational sunflower_resistance(int n_in, PairCase c, int d) {
    if (n_in < 3) {
        throw std::invalid_argument("sunflower: n must be >= 3");
    }
    check_d(c, d, n_in);
    const Rational n(n_in);
    const Rational dd(d);
    switch (c) {
        case PairCase::BothAssociated:
            return Rational(2) * dd * (n - dd) / (Rational(3) * n);
        case PairCase::OneAssociated:
            return (Rational(4) * n * dd - Rational(4) * dd * dd + Rational(4) * dd - 1) / (Rational(6) * n);
        case PairCase::Neither:
            return Rational(2) * (n * dd - square(dd - 1)) / (Rational(3) * n);
    }
    throw std::invalid_argument("sunflower_resistance: unknown case");
}

Rational sunflower_kirchhoff(int n_in) {
    const Rational n(n_in);
    return (Rational(4) * n * n * n + Rational(12) * n * n - Rational(7) * n) / Rational(18);
}

Rational sunflower_kemeny(int n_in) {
    const Rational n(n_in);
    return (n * n + Rational(2) * n - 1) / Rational(3);
}

CompletePairPosition complete_pair_position(const FlowerSpec& spec, const FlowerLocator& u_in,
                                            const FlowerLocator& v_in) {
    const FlowerLocator u = canonical_locator(spec, u_in.petal, u_in.base_vertex);
    const FlowerLocator v = canonical_locator(spec, v_in.petal, v_in.base_vertex);
    if (u == v) {
        throw std::invalid_argument("complete_pair_position: identical vertices");
    }
    const int n = spec.n();
    if (u.is_associated && v.is_associated) {
        const int d = petal_span(u.petal, v.petal, n) - 1;
        return {PairCase::BothAssociated, std::min(d, n - d)};
    }
    if (u.is_associated || v.is_associated) {
        const FlowerLocator& a = u.is_associated ? u : v;
        const FlowerLocator& o = u.is_associated ? v : u;
        // a also lies in the petal after its own, as y.
        const int up = petal_span(a.petal == n ? 1 : a.petal + 1, o.petal, n);
        return {PairCase::OneAssociated, std::min(up, n + 1 - up)};
    }
    if (u.petal == v.petal) {
        return {PairCase::Neither, 1};
    }
    const int up = petal_span(u.petal, v.petal, n);
    return {PairCase::Neither, std::min(up, n + 2 - up)};
}

FlowerSpec complete_flower_spec(const CompleteFlowerParams& p) {
    p.validate();
    return FlowerSpec(complete_graph(p.m), 0, 1, p.n);
}

CompleteBaseResistance::CompleteBaseResistance(int m) : m_(m) {
    if (m < 2) {
        throw std::invalid_argument("CompleteBaseResistance: m must be >= 2");
    }
}

Rational CompleteBaseResistance::operator()(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= m_ || b >= m_) {
        throw std::out_of_range("CompleteBaseResistance: vertex out of range");
    }
    return a == b ? Rational(0) : Rational(2, m_);
}

}  // namespace flowers
