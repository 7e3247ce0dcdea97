#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "flowers/graph.hpp"
#include "flowers/rational.hpp"

namespace flowers {

/// Base graph with marked vertices x != y, repeated n >= 3 times around a
/// ring. Petal i's x is the same vertex as petal (i+1)'s y, cyclically.
class FlowerSpec {
public:
    /// Throws std::invalid_argument if n < 3, x == y, or x/y are not base
    /// vertices.
    FlowerSpec(Graph base, Vertex x, Vertex y, int n);

    const Graph& base() const noexcept { return base_; }
    Vertex x() const noexcept { return x_; }
    Vertex y() const noexcept { return y_; }
    int n() const noexcept { return n_; }
    /// Base vertex count.
    int m() const noexcept { return base_.vertex_count(); }

private:
    Graph base_;
    Vertex x_;
    Vertex y_;
    int n_;
};

/// Where a flower vertex sits. Petals are numbered 1..n. An associated
/// vertex is always recorded as x of its lower petal (it is also y of the
/// next one).
struct FlowerLocator {
    int petal = 1;
    Vertex base_vertex = 0;
    bool is_associated = false;

    friend auto operator<=>(const FlowerLocator&, const FlowerLocator&) = default;
};

/// Normalizes (petal, base_vertex) into canonical form. Accepts y as the
/// base vertex and rewrites it as x of the previous petal.
FlowerLocator canonical_locator(const FlowerSpec& spec, int petal, Vertex base_vertex);

/// "petal:basevertex".
std::string to_string(const FlowerLocator& loc);
/// Parses "petal:basevertex" and canonicalizes it against `spec`.
FlowerLocator parse_locator(const FlowerSpec& spec, const std::string& text);

/// A built flower: the graph plus the bijection between labels and
/// canonical locators. Petal i owns the contiguous label block starting at
/// (i-1)(m-1): its associated vertex x first, then the remaining base
/// vertices in ascending base order.
class Flower {
public:
    const FlowerSpec& spec() const noexcept { return spec_; }
    const Graph& graph() const noexcept { return graph_; }
    Vertex label(const FlowerLocator& loc) const;
    const FlowerLocator& locator(Vertex label) const { return locators_.at(label); }
    const std::vector<FlowerLocator>& locators() const noexcept { return locators_; }

private:
    friend Flower build_flower(const FlowerSpec& spec);
    Flower(FlowerSpec spec, Graph graph, std::vector<FlowerLocator> locators, std::vector<int> slot);

    FlowerSpec spec_;
    Graph graph_;
    std::vector<FlowerLocator> locators_;
    std::vector<int> slot_;  // base vertex -> offset inside a petal block, -1 for y
};

Flower build_flower(const FlowerSpec& spec);

/// Exact resistances inside the base graph.
class BaseResistanceSource {
public:
    virtual ~BaseResistanceSource() = default;
    virtual Rational operator()(Vertex a, Vertex b) const = 0;
};

/// Any connected base: oracle floats snapped to the nearest rational with
/// denominator <= max_denominator, each checked back against the float.
class RationalizedOracleResistance final : public BaseResistanceSource {
public:
    explicit RationalizedOracleResistance(const Graph& base, std::int64_t max_denominator = 1'000'000,
                                          double tolerance = 1e-9);
    Rational operator()(Vertex a, Vertex b) const override;

private:
    int size_;
    std::vector<Rational> table_;
};

/// The five base resistances the closed forms consume.
struct BaseResBundle {
    Rational r_ux;
    Rational r_uy;
    Rational r_vx;
    Rational r_vy;
    Rational r_xy;
};

BaseResBundle make_bundle(const BaseResistanceSource& source, Vertex u, Vertex v, Vertex x, Vertex y);

/// u and v in different petals. d is the number of petals on the series
/// route that leaves u's petal through its y and enters v's petal through
/// its x (both end petals included):
///   r = r(u,y) + r(v,x) + (d-2) r(x,y)
///       - [r(u,x) + r(v,y) - r(u,y) - r(v,x) - 2(d-1) r(x,y)]^2 / (4 n r(x,y))
Rational flower_resistance_cross(const BaseResBundle& b, int d, int n);

/// u and v in the same petal:
///   r = r(u,v) - [r(u,x) + r(v,y) - r(u,y) - r(v,x)]^2 / (4 n r(x,y))
Rational flower_resistance_same(const BaseResBundle& b, const Rational& r_uv, int n);

/// Inclusive petal count from u's petal up to v's petal (1 when equal).
int petal_span(int from_petal, int to_petal, int n);

/// True if some petal contains both vertices.
bool share_petal(const FlowerSpec& spec, const FlowerLocator& u, const FlowerLocator& v);

/// min over the two walking directions of the inclusive petal count between
/// the canonical petals; 1 when both canonical petals coincide. An associated
/// vertex counts as lying in its own (lower) petal only.
int normalized_d(const FlowerSpec& spec, const FlowerLocator& u, const FlowerLocator& v);

Rational flower_resistance(const FlowerSpec& spec, const FlowerLocator& u, const FlowerLocator& v,
                           const BaseResistanceSource& source);

struct MaxResistance {
    FlowerLocator u;
    FlowerLocator v;
    Rational value;
    int d = 0;
};

/// Exhaustive scan over every vertex pair with the closed forms. Ties go to
/// the lexicographically smallest (u, v).
MaxResistance max_resistance_search(const FlowerSpec& spec, const BaseResistanceSource& source);

/// True when d lies in [n/2, n/2 + 2].
bool in_max_window(int d, int n);

/// Entry k is max(F_{n_from+k+1}) - max(F_{n_from+k}) for n_from <= n < n_to.
std::vector<Rational> max_diff_sequence(const Graph& base, Vertex x, Vertex y, int n_from, int n_to,
                                        const BaseResistanceSource& source);
std::vector<Rational> max_diff_sequence(const Graph& base, Vertex x, Vertex y, int n_from, int n_to);

/// Kirchhoff index and Kemeny's constant summed exactly from the per-pair
/// closed forms.
Rational flower_kirchhoff_exact(const FlowerSpec& spec, const BaseResistanceSource& source);
Rational flower_kemeny_exact(const FlowerSpec& spec, const BaseResistanceSource& source);

/// Kirchhoff index and Kemeny's constant of the base graph itself, from
/// exact base resistances.
Rational base_kirchhoff_exact(const Graph& base, const BaseResistanceSource& source);
Rational base_kemeny_exact(const Graph& base, const BaseResistanceSource& source);

struct Bounds {
    Rational lo;
    Rational hi;
};

/// n Kf(G) - m(m-1) r(x,y)/2  <=  Kf  <=  Kf(G)(n + n m (n-1)) + r(x,y)(n^3 - n^2) m^2 / 4
Bounds kirchhoff_bounds(const FlowerSpec& spec, const Rational& kf_base, const Rational& r_xy);

/// K(G) - m(m-1)^3 r(x,y) / (2 n q)  <=  K  <=  K(G)(4n-1) + r(x,y)(n^2-3n+2)(2m-2)^2 m^2 / (8q)
Bounds kemeny_bounds(const FlowerSpec& spec, const Rational& kem_base, const Rational& r_xy, int q_base,
                     int m);

}  // namespace flowers
