#include "seaorder/orders.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace seaorder {

namespace {

void require_same_alphabet(const UtilityStream& x, const UtilityStream& y) {
    if (x.alphabet() != y.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "streams over different alphabets");
}

using SymbolCounts = std::map<Symbol, Index>;

void add_counts(SymbolCounts& counts, const Word& w, std::size_t begin, std::size_t end, Index times) {
    if (times == 0) return;
    for (std::size_t i = begin; i < end; ++i) counts[w[i]] += times;
}

// Multiplicity of each symbol among x(0..n-1), in O(|pre| + |period|).
SymbolCounts prefix_counts(const UtilityStream& x, Index n) {
    SymbolCounts counts;
    const auto& pre = x.preperiod();
    const auto& per = x.period();
    add_counts(counts, pre, 0, std::min<Index>(n, pre.size()), 1);
    if (n > pre.size()) {
        const Index rest = n - pre.size();
        add_counts(counts, per, 0, per.size(), rest / per.size());
        add_counts(counts, per, 0, rest % per.size(), 1);
    }
    return counts;
}

// Sorted words of equal length compare lexicographically exactly as their
// multiplicity vectors do at the first symbol with different counts: more
// copies of the smaller symbol sort first.
Comparison compare_counts(const SymbolCounts& x, const SymbolCounts& y) {
    auto ix = x.begin();
    auto iy = y.begin();
    for (;;) {
        while (ix != x.end() && ix->second == 0) ++ix;
        while (iy != y.end() && iy->second == 0) ++iy;
        if (ix == x.end() && iy == y.end()) return Comparison::Equivalent;
        if (ix == x.end()) return Comparison::Greater;
        if (iy == y.end()) return Comparison::Less;
        if (ix->first != iy->first) return ix->first < iy->first ? Comparison::Less : Comparison::Greater;
        if (ix->second != iy->second) return ix->second > iy->second ? Comparison::Less : Comparison::Greater;
        ++ix;
        ++iy;
    }
}

// Sorted lists of equal length, compared lexicographically.
template <class T, class Cmp>
Comparison compare_sorted_multisets(std::vector<T> xs, std::vector<T> ys, Cmp less) {
    std::sort(xs.begin(), xs.end(), less);
    std::sort(ys.begin(), ys.end(), less);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (less(xs[i], ys[i])) return Comparison::Less;
        if (less(ys[i], xs[i])) return Comparison::Greater;
    }
    return Comparison::Equivalent;
}

}  // namespace

std::string_view to_string(Comparison c) {
    switch (c) {
        case Comparison::Less: return "LESS";
        case Comparison::Equivalent: return "EQUIV";
        case Comparison::Greater: return "GREATER";
    }
    return "?";
}

Comparison SignProfile::at(Index n) const {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "sign profiles start at n = 1");
    if (n <= preperiod) return prefix[n - 1];
    return signs[(n - 1 - preperiod) % signs.size()];
}

ResidueSelector::ResidueSelector(Index modulus, Index residue) : modulus_(modulus), residue_(residue) {
    if (modulus == 0) throw Error(ErrorCode::InvalidArgument, "selector modulus must be positive");
    if (residue >= modulus) throw Error(ErrorCode::InvalidArgument, "selector residue must be below the modulus");
}

Comparison compare_prefix(const UtilityStream& x, const UtilityStream& y, Index n) {
    require_same_alphabet(x, y);
    return compare_counts(prefix_counts(x, n), prefix_counts(y, n));
}

Comparison compare_limit(const UtilityStream& x, const UtilityStream& y) {
    require_same_alphabet(x, y);
    // For n past the difference set, the shared coordinates contribute equally
    // to both sorted prefixes; only the differing values decide.
    const auto diff = difference_set(x, y);
    Word xs;
    Word ys;
    for (Index n : diff) {
        xs.push_back(x.at(n));
        ys.push_back(y.at(n));
    }
    return compare_sorted_multisets(std::move(xs), std::move(ys), std::less<Symbol>{});
}

SignProfile sign_profile(const UtilityStream& x, const UtilityStream& y, Index max_n) {
    require_same_alphabet(x, y);
    if (max_n == 0) throw Error(ErrorCode::InvalidArgument, "max_n must be at least 1");
    std::vector<Comparison> seq;
    seq.reserve(max_n);
    for (Index n = 1; n <= max_n; ++n) seq.push_back(compare_prefix(x, y, n));

    const std::size_t len = seq.size();
    for (std::size_t period = 1; 2 * period <= len; ++period) {
        // Smallest start after which seq[i] == seq[i + period] throughout.
        std::size_t start = len - period;
        while (start > 0 && seq[start - 1] == seq[start - 1 + period]) --start;
        if (len - start < 2 * period) continue;
        SignProfile profile;
        profile.preperiod = start;
        profile.prefix.assign(seq.begin(), seq.begin() + start);
        profile.signs.assign(seq.begin() + start, seq.begin() + start + period);
        return profile;
    }
    throw Error(ErrorCode::NoPeriodDetected, "no period confirmed twice within max_n = " + std::to_string(max_n));
}

Comparison ultra_compare(const UtilityStream& x, const UtilityStream& y, const ResidueSelector& selector,
                         Index max_n) {
    const SignProfile profile = sign_profile(x, y, max_n);
    const Index p = profile.period();
    const Index g = std::gcd(selector.modulus(), p);
    // Large n ≡ r (mod m) visit exactly the phases j ≡ r - 1 - pre (mod gcd(m, p)).
    const Index offset = (selector.residue() % g + g - (1 + profile.preperiod) % g) % g;
    const Comparison verdict = profile.signs[offset];
    for (Index j = offset; j < p; j += g) {
        if (profile.signs[j] != verdict) {
            throw Error(ErrorCode::SelectorAmbiguous, "selector modulus " + std::to_string(selector.modulus()) +
                                                          " does not resolve profile period " + std::to_string(p));
        }
    }
    return verdict;
}

Comparison compare_sea(const UtilityStream& x, const UtilityStream& y) {
    require_same_alphabet(x, y);
    const ClassKey kx = class_key(x);
    const ClassKey ky = class_key(y);
    if (kx != ky) {
        const UtilityStream px(x.alphabet(), {}, kx.word);
        const UtilityStream py(y.alphabet(), {}, ky.word);
        return from_ordering(lex_compare(px, py));
    }
    return compare_limit(x, y);
}

Comparison compare_sea_nested(const NestedStream& x, const NestedStream& y) {
    if (!nested_e1_equal(x, y)) return from_ordering(lex_compare(x.tail(), y.tail()));
    std::vector<UtilityStream> xs;
    std::vector<UtilityStream> ys;
    for (Index n : difference_set(x, y)) {
        xs.push_back(x.at(n));
        ys.push_back(y.at(n));
    }
    return compare_sorted_multisets(std::move(xs), std::move(ys), [](const UtilityStream& a, const UtilityStream& b) {
        return lex_compare(a, b) < 0;
    });
}

}  // namespace seaorder
