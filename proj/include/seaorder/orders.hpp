#pragma once

// Prelinear orders on utility streams: the sorted-prefix orders, their
// stabilized limit on tail-equal pairs, sign profiles across prefix lengths,
// residue-selector limits, and the composite SEA orders.

#include <string_view>
#include <vector>

#include "seaorder/streams.hpp"

namespace seaorder {

enum class Comparison { Less, Equivalent, Greater };

constexpr Comparison mirror(Comparison c) noexcept {
    switch (c) {
        case Comparison::Less: return Comparison::Greater;
        case Comparison::Greater: return Comparison::Less;
        case Comparison::Equivalent: return Comparison::Equivalent;
    }
    return c;
}

// x ⪯ y in a prelinear order whose verdict on (x, y) is c.
constexpr bool weakly_below(Comparison c) noexcept { return c != Comparison::Greater; }

template <class T>
constexpr Comparison from_ordering(T ord) noexcept {
    if (ord < 0) return Comparison::Less;
    if (ord > 0) return Comparison::Greater;
    return Comparison::Equivalent;
}

// "LESS" | "EQUIV" | "GREATER"
std::string_view to_string(Comparison c);

// Verdicts of x ⪯ₙ y for n = 1, 2, ...: `prefix` holds n = 1..preperiod,
// after which `signs` repeats.
struct SignProfile {
    std::size_t preperiod = 0;
    std::vector<Comparison> prefix;
    std::vector<Comparison> signs;

    std::size_t period() const noexcept { return signs.size(); }
    // n ≥ 1
    Comparison at(Index n) const;

    friend bool operator==(const SignProfile&, const SignProfile&) = default;
};

// Stand-in for a nonprincipal ultrafilter concentrating on {n : n ≡ residue mod modulus}.
class ResidueSelector {
public:
    ResidueSelector(Index modulus, Index residue);

    Index modulus() const noexcept { return modulus_; }
    Index residue() const noexcept { return residue_; }

    friend bool operator==(const ResidueSelector&, const ResidueSelector&) = default;

private:
    Index modulus_;
    Index residue_;
};

Comparison compare_prefix(const UtilityStream& x, const UtilityStream& y, Index n);

// Eventual value of compare_prefix on a tail-equal pair.
Comparison compare_limit(const UtilityStream& x, const UtilityStream& y);

SignProfile sign_profile(const UtilityStream& x, const UtilityStream& y, Index max_n);

inline constexpr Index kDefaultMaxN = 256;

Comparison ultra_compare(const UtilityStream& x, const UtilityStream& y, const ResidueSelector& selector,
                         Index max_n = kDefaultMaxN);

// Classes first (lex order of phase-aligned class keys), then the limit of ⪯ₙ.
Comparison compare_sea(const UtilityStream& x, const UtilityStream& y);

// E₁ classes first (lex order of tails), then the limit of ⪯ₙ with
// coordinates ordered lexicographically.
Comparison compare_sea_nested(const NestedStream& x, const NestedStream& y);

}  // namespace seaorder
