#include "flowers/flower.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "flowers/resistance.hpp"

namespace flowers {

namespace {

int previous_petal(int petal, int n) { return petal == 1 ? n : petal - 1; }
int next_petal(int petal, int n) { return petal == n ? 1 : petal + 1; }

/// Base vertex that `loc` occupies inside `petal`, or -1 if it is not there.
Vertex base_vertex_in(const FlowerSpec& spec, const FlowerLocator& loc, int petal) {
    if (loc.petal == petal) {
        return loc.base_vertex;
    }
    if (loc.is_associated && next_petal(loc.petal, spec.n()) == petal) {
        return spec.y();
    }
    return -1;
}

std::vector<FlowerLocator> all_locators(const FlowerSpec& spec) {
    std::vector<FlowerLocator> out;
    out.reserve(static_cast<std::size_t>(spec.n()) * (spec.m() - 1));
    for (int p = 1; p <= spec.n(); ++p) {
        for (Vertex b = 0; b < spec.m(); ++b) {
            if (b != spec.y()) {
                out.push_back(FlowerLocator{p, b, b == spec.x()});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Closed-form pair values memoized on (base u, base v, petal offset); the
/// ring is invariant under rotation so the offset is all that matters.
class PairCache {
public:
    PairCache(const FlowerSpec& spec, const BaseResistanceSource& source)
        : spec_(spec), source_(source),
          values_(static_cast<std::size_t>(spec.m()) * spec.m() * spec.n()) {}

    const Rational& get(const FlowerLocator& u, const FlowerLocator& v) {
        const int n = spec_.n();
        const int offset = ((v.petal - u.petal) % n + n) % n;
        const std::size_t key =
            (static_cast<std::size_t>(u.base_vertex) * spec_.m() + v.base_vertex) * n + offset;
        auto& slot = values_[key];
        if (!slot) {
            slot = flower_resistance(spec_, u, v, source_);
        }
        return *slot;
    }

private:
    const FlowerSpec& spec_;
    const BaseResistanceSource& source_;
    std::vector<std::optional<Rational>> values_;
};

}  // namespace

FlowerSpec::FlowerSpec(Graph base, Vertex x, Vertex y, int n)
    : base_(std::move(base)), x_(x), y_(y), n_(n) {
    if (n_ < 3) {
        throw std::invalid_argument("flower: need n >= 3 petals, got " + std::to_string(n_));
    }
    if (!base_.contains(x_) || !base_.contains(y_)) {
        throw std::invalid_argument("flower: marked vertex outside the base graph");
    }
    if (x_ == y_) {
        throw std::invalid_argument("flower: marked vertices x and y must differ");
    }
}

FlowerLocator canonical_locator(const FlowerSpec& spec, int petal, Vertex base_vertex) {
    if (petal < 1 || petal > spec.n()) {
        throw std::invalid_argument("locator: petal " + std::to_string(petal) + " outside 1.." +
                                    std::to_string(spec.n()));
    }
    if (!spec.base().contains(base_vertex)) {
        throw std::invalid_argument("locator: base vertex " + std::to_string(base_vertex) +
                                    " not in base graph");
    }
    if (base_vertex == spec.y()) {
        return FlowerLocator{previous_petal(petal, spec.n()), spec.x(), true};
    }
    return FlowerLocator{petal, base_vertex, base_vertex == spec.x()};
}

std::string to_string(const FlowerLocator& loc) {
    return std::to_string(loc.petal) + ":" + std::to_string(loc.base_vertex);
}

FlowerLocator parse_locator(const FlowerSpec& spec, const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("locator: expected petal:basevertex, got '" + text + "'");
    }
    int petal = 0;
    int vertex = 0;
    try {
        std::size_t used = 0;
        petal = std::stoi(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("trailing");
        const std::string rest = text.substr(colon + 1);
        vertex = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("locator: expected petal:basevertex, got '" + text + "'");
    }
    return canonical_locator(spec, petal, vertex);
}

Flower::Flower(FlowerSpec spec, Graph graph, std::vector<FlowerLocator> locators, std::vector<int> slot)
    : spec_(std::move(spec)), graph_(std::move(graph)), locators_(std::move(locators)),
      slot_(std::move(slot)) {}

Vertex Flower::label(const FlowerLocator& loc) const {
    const FlowerLocator c = canonical_locator(spec_, loc.petal, loc.base_vertex);
    return (c.petal - 1) * (spec_.m() - 1) + slot_[c.base_vertex];
}

Flower build_flower(const FlowerSpec& spec) {
    const int m = spec.m();
    std::vector<int> slot(m, -1);
    slot[spec.x()] = 0;
    int next = 1;
    for (Vertex b = 0; b < m; ++b) {
        if (b != spec.x() && b != spec.y()) {
            slot[b] = next++;
        }
    }

    auto label_of = [&](int petal, Vertex b) {
        const FlowerLocator c = canonical_locator(spec, petal, b);
        return (c.petal - 1) * (m - 1) + slot[c.base_vertex];
    };

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(spec.n()) * spec.base().edge_count());
    for (int p = 1; p <= spec.n(); ++p) {
        for (const auto& [a, b] : spec.base().edges()) {
            edges.emplace_back(label_of(p, a), label_of(p, b));
        }
    }

    std::vector<FlowerLocator> locators(static_cast<std::size_t>(spec.n()) * (m - 1));
    for (int p = 1; p <= spec.n(); ++p) {
        for (Vertex b = 0; b < m; ++b) {
            if (b != spec.y()) {
                locators[label_of(p, b)] = FlowerLocator{p, b, b == spec.x()};
            }
        }
    }
    return Flower(spec, Graph::from_edges(edges), std::move(locators), std::move(slot));
}

RationalizedOracleResistance::RationalizedOracleResistance(const Graph& base, std::int64_t max_denominator,
                                                           double tolerance)
    : size_(base.vertex_count()), table_(static_cast<std::size_t>(size_) * size_) {
    const ResistanceMatrix numeric = resistance_matrix(base);
    for (int i = 0; i < size_; ++i) {
        for (int j = i + 1; j < size_; ++j) {
            const Rational snapped = rationalize(numeric(i, j), max_denominator);
            if (std::abs(snapped.to_double() - numeric(i, j)) > tolerance) {
                throw std::runtime_error("rationalized resistance " + snapped.to_string() +
                                         " misses oracle value for pair (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            }
            table_[static_cast<std::size_t>(i) * size_ + j] = snapped;
            table_[static_cast<std::size_t>(j) * size_ + i] = snapped;
        }
    }
}

Rational RationalizedOracleResistance::operator()(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= size_ || b >= size_) {
        throw std::out_of_range("base resistance: vertex out of range");
    }
    return table_[static_cast<std::size_t>(a) * size_ + b];
}

BaseResBundle make_bundle(const BaseResistanceSource& source, Vertex u, Vertex v, Vertex x, Vertex y) {
    return BaseResBundle{source(u, x), source(u, y), source(v, x), source(v, y), source(x, y)};
}

namespace {

void check_bundle(const BaseResBundle& b) {
    if (b.r_ux.sign() < 0 || b.r_uy.sign() < 0 || b.r_vx.sign() < 0 || b.r_vy.sign() < 0) {
        throw std::invalid_argument("flower bundle: negative resistance");
    }
    if (b.r_xy.sign() <= 0) {
        throw std::invalid_argument("flower bundle: r(x,y) must be positive");
    }
}

}  // namespace

Rational flower_resistance_cross(const BaseResBundle& b, int d, int n) {
    if (n < 3) {
        throw std::invalid_argument("flower_resistance_cross: n must be >= 3");
    }
    if (d < 2 || d > n) {
        throw std::invalid_argument("flower_resistance_cross: d=" + std::to_string(d) + " outside 2.." +
                                    std::to_string(n));
    }
    check_bundle(b);
    const Rational series = b.r_uy + b.r_vx + Rational(d - 2) * b.r_xy;
    const Rational skew = b.r_ux + b.r_vy - b.r_uy - b.r_vx - Rational(2 * (d - 1)) * b.r_xy;
    return series - square(skew) / (Rational(4 * n) * b.r_xy);
}

Rational flower_resistance_same(const BaseResBundle& b, const Rational& r_uv, int n) {
    if (n < 3) {
        throw std::invalid_argument("flower_resistance_same: n must be >= 3");
    }
    check_bundle(b);
    if (r_uv.sign() < 0) {
        throw std::invalid_argument("flower_resistance_same: negative r(u,v)");
    }
    const Rational skew = b.r_ux + b.r_vy - b.r_uy - b.r_vx;
    return r_uv - square(skew) / (Rational(4 * n) * b.r_xy);
}

int petal_span(int from_petal, int to_petal, int n) {
    return ((to_petal - from_petal) % n + n) % n + 1;
}

bool share_petal(const FlowerSpec& spec, const FlowerLocator& u, const FlowerLocator& v) {
    for (int petal : {u.petal, next_petal(u.petal, spec.n())}) {
        if (base_vertex_in(spec, u, petal) >= 0 && base_vertex_in(spec, v, petal) >= 0) {
            return true;
        }
    }
    return false;
}

int normalized_d(const FlowerSpec& spec, const FlowerLocator& u_in, const FlowerLocator& v_in) {
    const FlowerLocator u = canonical_locator(spec, u_in.petal, u_in.base_vertex);
    const FlowerLocator v = canonical_locator(spec, v_in.petal, v_in.base_vertex);
    if (u.petal == v.petal) {
        return 1;
    }
    const int n = spec.n();
    return std::min(petal_span(u.petal, v.petal, n), petal_span(v.petal, u.petal, n));
}

Rational flower_resistance(const FlowerSpec& spec, const FlowerLocator& u_in, const FlowerLocator& v_in,
                           const BaseResistanceSource& source) {
    const FlowerLocator u = canonical_locator(spec, u_in.petal, u_in.base_vertex);
    const FlowerLocator v = canonical_locator(spec, v_in.petal, v_in.base_vertex);
    if (u == v) {
        return Rational(0);
    }
    const int n = spec.n();
    for (int petal : {u.petal, next_petal(u.petal, n)}) {
        const Vertex bu = base_vertex_in(spec, u, petal);
        const Vertex bv = base_vertex_in(spec, v, petal);
        if (bu >= 0 && bv >= 0) {
            return flower_resistance_same(make_bundle(source, bu, bv, spec.x(), spec.y()), source(bu, bv), n);
        }
    }
    // Leaving a petal through y lands in the previous petal, so the series
    // route runs from u's petal down to v's.
    const int d = petal_span(v.petal, u.petal, n);
    return flower_resistance_cross(make_bundle(source, u.base_vertex, v.base_vertex, spec.x(), spec.y()), d, n);
}

MaxResistance max_resistance_search(const FlowerSpec& spec, const BaseResistanceSource& source) {
    const std::vector<FlowerLocator> locs = all_locators(spec);
    PairCache cache(spec, source);
    std::optional<MaxResistance> best;
    for (std::size_t i = 0; i < locs.size(); ++i) {
        for (std::size_t j = i + 1; j < locs.size(); ++j) {
            const Rational& value = cache.get(locs[i], locs[j]);
            if (!best || value > best->value) {
                best = MaxResistance{locs[i], locs[j], value, 0};
            }
        }
    }
    best->d = normalized_d(spec, best->u, best->v);
    return *best;
}

bool in_max_window(int d, int n) { return 2 * d >= n && 2 * d <= n + 4; }

std::vector<Rational> max_diff_sequence(const Graph& base, Vertex x, Vertex y, int n_from, int n_to,
                                        const BaseResistanceSource& source) {
    if (n_from < 3) {
        throw std::invalid_argument("max_diff_sequence: n_from must be >= 3");
    }
    std::vector<Rational> diffs;
    if (n_to <= n_from) {
        return diffs;
    }
    Rational previous = max_resistance_search(FlowerSpec(base, x, y, n_from), source).value;
    for (int n = n_from + 1; n <= n_to; ++n) {
        Rational current = max_resistance_search(FlowerSpec(base, x, y, n), source).value;
        diffs.push_back(current - previous);
        previous = std::move(current);
    }
    return diffs;
}

std::vector<Rational> max_diff_sequence(const Graph& base, Vertex x, Vertex y, int n_from, int n_to) {
    return max_diff_sequence(base, x, y, n_from, n_to, RationalizedOracleResistance(base));
}

Rational flower_kirchhoff_exact(const FlowerSpec& spec, const BaseResistanceSource& source) {
    const std::vector<FlowerLocator> locs = all_locators(spec);
    PairCache cache(spec, source);
    Rational total(0);
    for (std::size_t i = 0; i < locs.size(); ++i) {
        for (std::size_t j = i + 1; j < locs.size(); ++j) {
            total += cache.get(locs[i], locs[j]);
        }
    }
    return total;
}

Rational flower_kemeny_exact(const FlowerSpec& spec, const BaseResistanceSource& source) {
    const std::vector<FlowerLocator> locs = all_locators(spec);
    const Graph& base = spec.base();
    auto degree = [&](const FlowerLocator& loc) {
        return loc.is_associated ? base.degree(spec.x()) + base.degree(spec.y()) : base.degree(loc.base_vertex);
    };
    PairCache cache(spec, source);
    Rational total(0);
    for (std::size_t i = 0; i < locs.size(); ++i) {
        for (std::size_t j = i + 1; j < locs.size(); ++j) {
            total += Rational(2 * degree(locs[i]) * degree(locs[j])) * cache.get(locs[i], locs[j]);
        }
    }
    const int q = spec.n() * base.edge_count();
    return total / Rational(4 * q);
}

Rational base_kirchhoff_exact(const Graph& base, const BaseResistanceSource& source) {
    Rational total(0);
    for (Vertex i = 0; i < base.vertex_count(); ++i) {
        for (Vertex j = i + 1; j < base.vertex_count(); ++j) {
            total += source(i, j);
        }
    }
    return total;
}

Rational base_kemeny_exact(const Graph& base, const BaseResistanceSource& source) {
    Rational total(0);
    for (Vertex i = 0; i < base.vertex_count(); ++i) {
        for (Vertex j = i + 1; j < base.vertex_count(); ++j) {
            total += Rational(2 * base.degree(i) * base.degree(j)) * source(i, j);
        }
    }
    return total / Rational(4 * base.edge_count());
}

Bounds kirchhoff_bounds(const FlowerSpec& spec, const Rational& kf_base, const Rational& r_xy) {
    const Rational n(spec.n());
    const Rational m(spec.m());
    const Rational lo = n * kf_base - m * (m - 1) * r_xy / Rational(2);
    const Rational hi = kf_base * (n + n * m * (n - 1)) + r_xy * (n * n * n - n * n) * m * m / Rational(4);
    return Bounds{lo, hi};
}

Bounds kemeny_bounds(const FlowerSpec& spec, const Rational& kem_base, const Rational& r_xy, int q_base, int m_in) {
    if (q_base <= 0 || m_in <= 0) {
        throw std::invalid_argument("kemeny_bounds: q and m must be positive");
    }
    const Rational n(spec.n());
    const Rational m(m_in);
    const Rational q(q_base);
    const Rational lo = kem_base - m * (m - 1) * (m - 1) * (m - 1) * r_xy / (Rational(2) * n * q);
    const Rational hi = kem_base * (Rational(4) * n - 1) +
                        r_xy * (n * n - Rational(3) * n + 2) * square(Rational(2) * m - 2) * m * m /
                            (Rational(8) * q);
    return Bounds{lo, hi};
}

}  // namespace flowers
