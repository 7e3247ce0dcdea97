#include "flowers/cycle_flower.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace flowers {

void CycleFlowerParams::validate() const {
    if (m < 3) {
        throw std::invalid_argument("cycle flower: m must be >= 3, got " + std::to_string(m));
    }
    if (n < 3) {
        throw std::invalid_argument("cycle flower: n must be >= 3, got " + std::to_string(n));
    }
    if (p < 1 || 2 * p > m) {
        throw std::invalid_argument("cycle flower: p must lie in 1..m/2, got " + std::to_string(p));
    }
}

Rational cycle_resistance(int m, int dist) {
    if (m < 1 || dist < 0 || dist > m) {
        throw std::invalid_argument("cycle_resistance: dist=" + std::to_string(dist) + " outside 0.." +
                                    std::to_string(m));
    }
    return Rational(static_cast<std::int64_t>(m - dist) * dist, m);
}

namespace {

void check_position(const CycleFlowerParams& params, const CyclePairPosition& pos) {
    const int m = params.m;
    auto arc_ok = [&](int q) { return q == params.p || q == m - params.p; };
    if (!arc_ok(pos.p_u) || !arc_ok(pos.p_v)) {
        throw std::invalid_argument("gs_resistance: p_u/p_v must be p or m-p");
    }
    if (pos.p_u <= 0 || pos.p_u >= m) {
        throw std::invalid_argument("gs_resistance: p_u must lie strictly between 0 and m");
    }
    if (pos.l < 0 || pos.l > m - pos.p_u || pos.k < 0 || pos.k > m - pos.p_v) {
        throw std::invalid_argument("gs_resistance: l or k outside its arc");
    }
    if (pos.same_petal) {
        if (pos.same_arc && (pos.p_u != pos.p_v || pos.k < pos.l)) {
            throw std::invalid_argument("gs_resistance: same-arc pair needs p_u == p_v and k >= l");
        }
    } else if (pos.d < 2 || pos.d > params.n) {
        throw std::invalid_argument("gs_resistance: d must lie in 2..n for different petals");
    }
}

}  // namespace

Rational gs_resistance(const CycleFlowerParams& params, const CyclePairPosition& pos) {
    params.validate();
    check_position(params, pos);
    const Rational m(params.m);
    const Rational n(params.n);
    const Rational pu(pos.p_u);
    const Rational pv(pos.p_v);
    const Rational l(pos.l);
    const Rational k(pos.k);
    const Rational d(pos.d);
    const Rational pair_scale = pu * (m - pu);  // m r(x,y)

    if (!pos.same_petal) {
        const Rational series = ((pu + l) * (m - pu - l) + k * (m - k) + pair_scale * (d - 2)) / m;
        const Rational skew = pv * (m - pv - Rational(2) * k) + pu * (m - pu + Rational(2) * l) -
                              Rational(2) * d * pair_scale;
        return series - square(skew) / (Rational(4) * n * m * pair_scale);
    }
    if (pos.same_arc) {
        const Rational gap = k - l;
        return gap * (m - gap) / m - pu * square(gap) / (n * m * (m - pu));
    }
    const Rational through_x = k + l;
    const Rational skew = pu * pu + pu * (Rational(2) * l - m) + pv * (m - Rational(2) * k - pv);
    return through_x * (m - through_x) / m - square(skew) / (Rational(4) * n * m * pair_scale);
}

Rational gs_kirchhoff(const CycleFlowerParams& params) {
    params.validate();
    const Rational m(params.m);
    const Rational n(params.n);
    const Rational p(params.p);
    const Rational first = n * (p * m - p * p) *
                           (n * n * square(m - 1) + m * m * (Rational(4) - Rational(6) * n) + Rational(6) * m * n - 1) /
                           (Rational(12) * m);
    const Rational second =
        n * (m * m * m + m - 2 - Rational(2) * n * square(m - 1) * (m + 1)) / Rational(12);
    return first - second;
}

Rational gs_kemeny(const CycleFlowerParams& params) {
    params.validate();
    const Rational m(params.m);
    const Rational n(params.n);
    const Rational p(params.p);
    return ((n * n - Rational(6) * n + 4) * (p * m - p * p) + m * m * (Rational(2) * n - 1) -
            Rational(2) * n - 1) /
           Rational(6);
}

namespace {

struct ArcPlacement {
    int arc = 2;    // 1 for the interior of D1, 2 for D2 and for associated vertices
    int other = 0;  // length of the arc not containing the vertex
    int from_x = 0;
};

/// `w` is the base vertex as seen inside one particular petal; y is only
/// passed when an associated vertex is addressed from the next petal.
ArcPlacement place(const CycleFlowerParams& params, Vertex w) {
    const int m = params.m;
    const int p = params.p;
    if (w == 0) {
        return {2, p, 0};
    }
    if (w == p) {
        return {2, p, m - p};
    }
    if (w < p) {
        return {1, m - p, w};
    }
    return {2, p, m - w};
}

}  // namespace

CyclePairPosition cycle_pair_position(const CycleFlowerParams& params, const FlowerLocator& u_in,
                                      const FlowerLocator& v_in) {
    params.validate();
    const FlowerSpec spec = cycle_flower_spec(params);
    const FlowerLocator u = canonical_locator(spec, u_in.petal, u_in.base_vertex);
    const FlowerLocator v = canonical_locator(spec, v_in.petal, v_in.base_vertex);
    if (u == v) {
        throw std::invalid_argument("cycle_pair_position: identical vertices");
    }
    const int n = params.n;
    auto next = [n](int petal) { return petal == n ? 1 : petal + 1; };
    auto in_petal = [&](const FlowerLocator& loc, int petal) -> Vertex {
        if (loc.petal == petal) return loc.base_vertex;
        if (loc.is_associated && next(loc.petal) == petal) return params.p;
        return -1;
    };

    for (int petal : {u.petal, next(u.petal)}) {
        const Vertex bu = in_petal(u, petal);
        const Vertex bv = in_petal(v, petal);
        if (bu < 0 || bv < 0) {
            continue;
        }
        ArcPlacement a = place(params, bu);
        ArcPlacement b = place(params, bv);
        CyclePairPosition pos;
        pos.same_petal = true;
        pos.same_arc = a.arc == b.arc;
        if (pos.same_arc && b.from_x < a.from_x) {
            std::swap(a, b);
        }
        pos.p_u = a.other;
        pos.l = a.from_x;
        pos.p_v = b.other;
        pos.k = b.from_x;
        return pos;
    }

    const ArcPlacement a = place(params, u.base_vertex);
    const ArcPlacement b = place(params, v.base_vertex);
    CyclePairPosition pos;
    pos.d = petal_span(v.petal, u.petal, n);
    pos.p_u = a.other;
    pos.l = a.from_x;
    pos.p_v = b.other;
    pos.k = b.from_x;
    return pos;
}

FlowerSpec cycle_flower_spec(const CycleFlowerParams& params) {
    params.validate();
    return FlowerSpec(cycle_graph(params.m), 0, params.p, params.n);
}

CycleBaseResistance::CycleBaseResistance(int m) : m_(m) {
    if (m < 3) {
        throw std::invalid_argument("CycleBaseResistance: m must be >= 3");
    }
}

Rational CycleBaseResistance::operator()(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= m_ || b >= m_) {
        throw std::out_of_range("CycleBaseResistance: vertex out of range");
    }
    const int gap = a > b ? a - b : b - a;
    return cycle_resistance(m_, std::min(gap, m_ - gap));
}

}  // namespace flowers
