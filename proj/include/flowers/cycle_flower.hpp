#pragma once

#include "flowers/flower.hpp"
#include "flowers/rational.hpp"

// Closed forms for generalized sunflowers F_n(C_m). The base cycle is
// labeled 0..m-1 in order with x = 0 and y = p, so the short arc D1 runs
// through 1..p-1 and the long arc D2 through p+1..m-1. When p = m/2 both
// arcs have length p and D1 is still the one through vertex 1.

namespace flowers {

struct CycleFlowerParams {
    int m = 3;
    int n = 3;
    int p = 1;

    /// Throws std::invalid_argument unless m >= 3, n >= 3, 1 <= p <= m/2.
    void validate() const;
};

/// Placement of a vertex pair for the closed-form pair formula.
///   p_u, p_v   length of the x-y arc not containing u (resp. v); p for an
///              associated vertex
///   l, k       distance from x to u (resp. v) along its own arc
///   d          petals on the series route from u's petal to v's (cross pairs)
struct CyclePairPosition {
    int d = 1;
    int p_u = 1;
    int p_v = 1;
    int l = 0;
    int k = 0;
    bool same_petal = false;
    bool same_arc = false;
};

/// (m - dist) dist / m, for 0 <= dist <= m.
Rational cycle_resistance(int m, int dist);

/// Throws std::invalid_argument when the position breaks its invariants.
Rational gs_resistance(const CycleFlowerParams& params, const CyclePairPosition& pos);

Rational gs_kirchhoff(const CycleFlowerParams& params);
Rational gs_kemeny(const CycleFlowerParams& params);

/// Position of two distinct locators of cycle_flower_spec(params). Associated
/// vertices sit at l = 0 of their own petal (or l = m - p on D2 when
/// addressed as y of the next petal). Same-arc pairs come out ordered so
/// that k >= l.
CyclePairPosition cycle_pair_position(const CycleFlowerParams& params, const FlowerLocator& u,
                                      const FlowerLocator& v);

FlowerSpec cycle_flower_spec(const CycleFlowerParams& params);

class CycleBaseResistance final : public BaseResistanceSource {
public:
    explicit CycleBaseResistance(int m);
    Rational operator()(Vertex a, Vertex b) const override;

private:
    int m_;
};

}  // namespace flowers
