#pragma once

#include <string_view>

#include "flowers/flower.hpp"
#include "flowers/rational.hpp"

// Closed forms for complete flowers F_n(K_m) and sunflowers SF_n = F_n(K_3).

namespace flowers {

struct CompleteFlowerParams {
    int m = 3;
    int n = 3;

    /// Throws std::invalid_argument unless m >= 3 and n >= 3.
    void validate() const;
};

/// Which of the pair's vertices are associated (shared between petals).
enum class PairCase { BothAssociated, OneAssociated, Neither };

std::string_view to_string(PairCase c);

/// d counts the petals separating the two vertices, end petals included:
///   both associated  2d(n-d)/(mn)           1 <= d <= n-1
///   one associated   2d/m - (2d-1)^2/(2mn)  1 <= d <= n
///   neither          2d/m - 2(d-1)^2/(mn)   1 <= d <= n
/// Same-petal outer pairs are d = 1 and evaluate to 2/m.
Rational cf_resistance(const CompleteFlowerParams& p, PairCase c, int d);

/// (n+4)/(2m) for even n, (n^2+4n-1)/(2mn) for odd n.
Rational cf_max_resistance(const CompleteFlowerParams& p);

Rational cf_kirchhoff(const CompleteFlowerParams& p);
Rational cf_kemeny(const CompleteFlowerParams& p);

/// m = 3 forms, written out independently of the general-m ones.
Rational sunflower_resistance(int n, PairCase c, int d);
/// (4n^3 + 12n^2 - 7n) / 18
Rational sunflower_kirchhoff(int n);
/// (n^2 + 2n - 1) / 3
Rational sunflower_kemeny(int n);

struct CompletePairPosition {
    PairCase pair_case = PairCase::Neither;
    int d = 1;
};

/// Case and petal count for two distinct canonical locators of a complete
/// flower. Throws if u == v.
CompletePairPosition complete_pair_position(const FlowerSpec& spec, const FlowerLocator& u,
                                            const FlowerLocator& v);

/// Base K_m with x = 0, y = 1.
FlowerSpec complete_flower_spec(const CompleteFlowerParams& p);

/// 2/m between distinct vertices of K_m.
class CompleteBaseResistance final : public BaseResistanceSource {
public:
    explicit CompleteBaseResistance(int m);
    Rational operator()(Vertex a, Vertex b) const override;

private:
    int m_;
};

}  // namespace flowers
