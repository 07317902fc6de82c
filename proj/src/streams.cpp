#include "seaorder/streams.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>

namespace seaorder {

namespace {

void require_same_alphabet(const UtilityStream& x, const UtilityStream& y) {
    if (x.alphabet() != y.alphabet()) {
        throw Error(ErrorCode::AlphabetMismatch, "alphabet sizes " + std::to_string(x.alphabet().size()) +
                                                     " and " + std::to_string(y.alphabet().size()));
    }
}

// Smallest p dividing |w| such that w is p-periodic.
std::size_t primitive_root_length(const Word& w) {
    for (std::size_t p = 1; p < w.size(); ++p) {
        if (w.size() % p != 0) continue;
        bool ok = true;
        for (std::size_t i = p; i < w.size() && ok; ++i) ok = w[i] == w[i - p];
        if (ok) return p;
    }
    return w.size();
}

// Beyond this index both streams are periodic with a common period, so any
// disagreement shows up before it.
Index comparison_horizon(const UtilityStream& x, const UtilityStream& y) {
    const Index start = std::max(x.preperiod().size(), y.preperiod().size());
    return start + std::lcm(x.period().size(), y.period().size());
}

}  // namespace

Alphabet::Alphabet(std::uint32_t size) : size_(size) {
    if (size < 2) throw Error(ErrorCode::InvalidArgument, "alphabet size must be at least 2");
}

UtilityStream::UtilityStream(Alphabet alphabet, Word preperiod, Word period)
    : alphabet_(alphabet), preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (period_.empty()) throw Error(ErrorCode::InvalidArgument, "period must be nonempty");
    for (const Word* w : {&preperiod_, &period_}) {
        for (Symbol s : *w) {
            if (!alphabet_.contains(s)) {
                throw Error(ErrorCode::InvalidArgument, "symbol " + std::to_string(s) + " outside alphabet of size " +
                                                            std::to_string(alphabet_.size()));
            }
        }
    }
    period_.resize(primitive_root_length(period_));
    // Absorb preperiod symbols that already continue the cycle backwards.
    while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
        preperiod_.pop_back();
        std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    }
}

UtilityStream normalize(const StreamParts& parts) { return {parts.alphabet, parts.preperiod, parts.period}; }

UtilityStream normalize(const UtilityStream& s) { return s; }

Symbol eval(const UtilityStream& s, Index n) { return s.at(n); }

UtilityStream with_coordinate(const UtilityStream& x, Index n, Symbol v) {
    const Index cut = std::max<Index>(n + 1, x.preperiod().size());
    StreamParts parts{x.alphabet(), {}, {}};
    for (Index i = 0; i < cut; ++i) parts.preperiod.push_back(i == n ? v : x.at(i));
    for (Index i = cut; i < cut + x.period().size(); ++i) parts.period.push_back(x.at(i));
    return normalize(parts);
}

bool tail_equal(const UtilityStream& x, const UtilityStream& y) {
    require_same_alphabet(x, y);
    return class_key(x) == class_key(y);
}

ClassKey class_key(const UtilityStream& x) {
    const auto& period = x.period();
    const std::size_t k = period.size();
    const std::size_t shift = x.preperiod().size() % k;
    Word key(k);
    // key[i] = x(n) for any n ≥ |pre| with n ≡ i (mod k)
    for (std::size_t i = 0; i < k; ++i) key[i] = period[(i + k - shift) % k];
    return {std::move(key)};
}

std::vector<Index> difference_set(const UtilityStream& x, const UtilityStream& y) {
    if (!tail_equal(x, y)) throw Error(ErrorCode::NotTailEquivalent, "streams differ at infinitely many coordinates");
    // Tail-equal streams agree once both are inside their periodic parts.
    const Index bound = std::max(x.preperiod().size(), y.preperiod().size());
    std::vector<Index> diff;
    for (Index n = 0; n < bound; ++n) {
        if (x.at(n) != y.at(n)) diff.push_back(n);
    }
    return diff;
}

Word sorted_prefix(const UtilityStream& x, Index n) {
    Word out;
    out.reserve(n);
    for (Index i = 0; i < n; ++i) out.push_back(x.at(i));
    std::sort(out.begin(), out.end());
    return out;
}

std::strong_ordering lex_compare(const UtilityStream& x, const UtilityStream& y) {
    require_same_alphabet(x, y);
    const Index horizon = comparison_horizon(x, y);
    for (Index n = 0; n < horizon; ++n) {
        if (auto c = x.at(n) <=> y.at(n); c != 0) return c;
    }
    return std::strong_ordering::equal;
}

FiniteSupportPermutation FiniteSupportPermutation::from_pairs(const std::vector<std::pair<Index, Index>>& pairs) {
    FiniteSupportPermutation pi;
    std::set<Index> images;
    for (auto [from, to] : pairs) {
        if (pi.mapping_.count(from) != 0 && pi.mapping_[from] != to) {
            throw Error(ErrorCode::InvalidArgument, "point " + std::to_string(from) + " mapped twice");
        }
        pi.mapping_[from] = to;
    }
    for (auto [from, to] : pi.mapping_) {
        if (!images.insert(to).second) throw Error(ErrorCode::InvalidArgument, "mapping is not injective");
    }
    std::set<Index> domain;
    for (auto [from, to] : pi.mapping_) domain.insert(from);
    if (domain != images) throw Error(ErrorCode::InvalidArgument, "mapping does not permute its domain");
    std::erase_if(pi.mapping_, [](const auto& kv) { return kv.first == kv.second; });
    return pi;
}

FiniteSupportPermutation FiniteSupportPermutation::transposition(Index i, Index j) {
    return from_pairs({{i, j}, {j, i}});
}

FiniteSupportPermutation FiniteSupportPermutation::cycle(const std::vector<Index>& points) {
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t i = 0; i < points.size(); ++i) pairs.emplace_back(points[i], points[(i + 1) % points.size()]);
    return from_pairs(pairs);
}

Index FiniteSupportPermutation::operator()(Index n) const {
    auto it = mapping_.find(n);
    return it == mapping_.end() ? n : it->second;
}

FiniteSupportPermutation FiniteSupportPermutation::inverse() const {
    FiniteSupportPermutation inv;
    for (auto [from, to] : mapping_) inv.mapping_[to] = from;
    return inv;
}

FiniteSupportPermutation FiniteSupportPermutation::after(const FiniteSupportPermutation& other) const {
    std::vector<std::pair<Index, Index>> pairs;
    std::set<Index> points;
    for (auto [from, to] : mapping_) points.insert(from);
    for (auto [from, to] : other.mapping_) points.insert(from);
    for (Index n : points) pairs.emplace_back(n, (*this)(other(n)));
    return from_pairs(pairs);
}

UtilityStream permute(const UtilityStream& x, const FiniteSupportPermutation& pi) {
    const Index cut = std::max<Index>(pi.support_bound(), x.preperiod().size());
    StreamParts parts{x.alphabet(), {}, {}};
    for (Index n = 0; n < cut; ++n) parts.preperiod.push_back(x.at(pi(n)));
    for (Index n = cut; n < cut + x.period().size(); ++n) parts.period.push_back(x.at(n));
    return normalize(parts);
}

NestedStream::NestedStream(std::vector<UtilityStream> exceptionals, UtilityStream tail)
    : exceptionals_(std::move(exceptionals)), tail_(std::move(tail)) {
    if (tail_.alphabet() != kBinary) throw Error(ErrorCode::AlphabetMismatch, "nested tail must be binary");
    for (const auto& e : exceptionals_) {
        if (e.alphabet() != kBinary) throw Error(ErrorCode::AlphabetMismatch, "nested coordinates must be binary");
    }
    while (!exceptionals_.empty() && exceptionals_.back() == tail_) exceptionals_.pop_back();
}

NestedStream NestedStream::with_coordinate(Index n, const UtilityStream& value) const {
    std::vector<UtilityStream> coords = exceptionals_;
    while (coords.size() <= n) coords.push_back(tail_);
    coords[n] = value;
    return {std::move(coords), tail_};
}

bool nested_e1_equal(const NestedStream& x, const NestedStream& y) { return x.tail() == y.tail(); }

std::vector<Index> difference_set(const NestedStream& x, const NestedStream& y) {
    if (!nested_e1_equal(x, y)) throw Error(ErrorCode::InfiniteDifference, "nested tails differ");
    const Index bound = std::max(x.exceptionals().size(), y.exceptionals().size());
    std::vector<Index> diff;
    for (Index n = 0; n < bound; ++n) {
        if (x.at(n) != y.at(n)) diff.push_back(n);
    }
    return diff;
}

NestedStream permute(const NestedStream& x, const FiniteSupportPermutation& pi) {
    const Index cut = std::max<Index>(pi.support_bound(), x.exceptionals().size());
    std::vector<UtilityStream> coords;
    coords.reserve(cut);
    for (Index n = 0; n < cut; ++n) coords.push_back(x.at(pi(n)));
    return {std::move(coords), x.tail()};
}

namespace {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

// Real value Σ x(n)·2^{-n-1} of a binary stream.
cpp_rational binary_value(const UtilityStream& s) {
    cpp_int pre = 0;
    for (Symbol b : s.preperiod()) pre = pre * 2 + b;
    cpp_int per = 0;
    for (Symbol b : s.period()) per = per * 2 + b;
    const cpp_int cycle = (cpp_int(1) << s.period().size()) - 1;
    cpp_rational v = cpp_rational(pre) + cpp_rational(per, cycle);
    return v / cpp_rational(cpp_int(1) << s.preperiod().size());
}

}  // namespace

Between dyadic_between(const UtilityStream& a, const UtilityStream& b) {
    if (a.alphabet() != kBinary || b.alphabet() != kBinary) {
        throw Error(ErrorCode::AlphabetMismatch, "dyadic_between needs binary streams");
    }
    const auto order = lex_compare(a, b);
    if (order > 0) throw Error(ErrorCode::NotOrdered, "right endpoint precedes left endpoint");
    const cpp_rational va = binary_value(a);
    const cpp_rational vb = binary_value(b);
    // Equal reals with a <lex b means w01^ω and w10^ω: nothing lies strictly between.
    if (order == 0 || va == vb) return {a, BetweenFlag::Left};

    // Truncate the midpoint's binary expansion until it clears a. Every
    // truncation stays ≤ the midpoint < b, and they converge to it from below.
    cpp_rational rest = (va + vb) / 2;
    Word bits;
    for (;;) {
        UtilityStream z(kBinary, bits, {0});
        if (lex_compare(a, z) < 0 && lex_compare(z, b) < 0) return {std::move(z), BetweenFlag::Strict};
        rest *= 2;
        if (rest >= 1) {
            bits.push_back(1);
            rest -= 1;
        } else {
            bits.push_back(0);
        }
    }
}

}  // namespace seaorder
