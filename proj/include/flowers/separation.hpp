#pragma once

#include <stdexcept>

#include "flowers/rational.hpp"

// Resistance composition across 1- and 2-separators. Callers supply the
// decomposition; nothing here inspects a graph. Works over any ordered
// field: double and flowers::Rational are the two instantiations in use.

namespace flowers {

/// Resistances for a graph split at the separator {i, j} into G1 (holding
/// u and v) and G2.
template <typename Scalar>
struct TwoSepBundle {
    Scalar r1_uv{};
    Scalar r1_ui{};
    Scalar r1_vj{};
    Scalar r1_uj{};
    Scalar r1_vi{};
    Scalar r1_ij{};
    Scalar r2_ij{};
};

/// r_G(i, j) across a cut vertex: r_G1(i, u) + r_G2(j, u).
template <typename Scalar>
Scalar compose_one_sep(const Scalar& r1_iu, const Scalar& r2_ju) {
    if (r1_iu < Scalar(0) || r2_ju < Scalar(0)) {
        throw std::invalid_argument("compose_one_sep: negative resistance");
    }
    return r1_iu + r2_ju;
}

template <typename Scalar>
Scalar compose_two_sep(const TwoSepBundle<Scalar>& b) {
    const Scalar zero(0);
    if (b.r1_uv < zero || b.r1_ui < zero || b.r1_vj < zero || b.r1_uj < zero ||
        b.r1_vi < zero || b.r1_ij < zero || b.r2_ij < zero) {
        throw std::invalid_argument("compose_two_sep: negative resistance in bundle");
    }
    const Scalar denominator = Scalar(4) * (b.r1_ij + b.r2_ij);
    if (!(denominator > zero)) {
        throw std::invalid_argument("compose_two_sep: r1_ij + r2_ij must be positive");
    }
    const Scalar skew = b.r1_ui + b.r1_vj - b.r1_uj - b.r1_vi;
    return b.r1_uv - skew * skew / denominator;
}

}  // namespace flowers
