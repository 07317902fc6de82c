#include "seaorder/generators.hpp"

#include <algorithm>
#include <limits>

namespace seaorder {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    // Rejection sampling keeps the draw unbiased.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = engine_();
    } while (v >= limit);
    return v % bound;
}

UtilityStream random_stream(Rng& rng, Alphabet alphabet, StreamShape shape) {
    StreamParts parts{alphabet, {}, {}};
    const std::size_t pre = rng.below(shape.max_preperiod + 1);
    const std::size_t per = rng.between(1, shape.max_period);
    for (std::size_t i = 0; i < pre; ++i) parts.preperiod.push_back(static_cast<Symbol>(rng.below(alphabet.size())));
    for (std::size_t i = 0; i < per; ++i) parts.period.push_back(static_cast<Symbol>(rng.below(alphabet.size())));
    return normalize(parts);
}

UtilityStream random_modification(Rng& rng, const UtilityStream& x, Index window, std::size_t changes) {
    UtilityStream out = x;
    for (std::size_t c = 0; c < changes; ++c) {
        out = with_coordinate(out, rng.below(window), static_cast<Symbol>(rng.below(x.alphabet().size())));
    }
    return out;
}

FiniteSupportPermutation random_permutation(Rng& rng, std::size_t max_support, Index range) {
    const std::size_t k = std::min<std::size_t>(rng.between(2, std::max<std::size_t>(max_support, 2)), range);
    std::vector<Index> points;
    while (points.size() < k) {
        const Index p = rng.below(range);
        if (std::find(points.begin(), points.end(), p) == points.end()) points.push_back(p);
    }
    std::vector<Index> images = points;
    for (std::size_t i = images.size(); i > 1; --i) std::swap(images[i - 1], images[rng.below(i)]);
    std::vector<std::pair<Index, Index>> pairs;
    for (std::size_t i = 0; i < k; ++i) pairs.emplace_back(points[i], images[i]);
    return FiniteSupportPermutation::from_pairs(pairs);
}

NestedStream random_nested(Rng& rng, const std::vector<UtilityStream>& tail_pool, NestedShape shape) {
    const UtilityStream tail = tail_pool.empty() ? random_stream(rng, kBinary, shape.coordinate)
                                                 : tail_pool[rng.below(tail_pool.size())];
    std::vector<UtilityStream> coords;
    const std::size_t k = rng.below(shape.max_exceptionals + 1);
    for (std::size_t i = 0; i < k; ++i) coords.push_back(random_stream(rng, kBinary, shape.coordinate));
    return {std::move(coords), tail};
}

std::pair<UtilityStream, UtilityStream> random_se_pair(Rng& rng, const UtilityStream& base, Index window) {
    const std::uint32_t size = base.alphabet().size();
    if (size < 4) throw Error(ErrorCode::InvalidArgument, "strong equity needs at least 4 symbols");
    const Index i = rng.below(window);
    Index j = rng.below(window - 1);
    if (j >= i) ++j;
    // Four distinct symbols, ascending: x(i) < y(i) < y(j) < x(j).
    std::vector<Symbol> values;
    while (values.size() < 4) {
        const auto v = static_cast<Symbol>(rng.below(size));
        if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    std::sort(values.begin(), values.end());
    UtilityStream x = with_coordinate(with_coordinate(base, i, values[0]), j, values[3]);
    UtilityStream y = with_coordinate(with_coordinate(base, i, values[1]), j, values[2]);
    return {std::move(x), std::move(y)};
}

std::optional<UtilityStream> random_se_step(Rng& rng, const UtilityStream& x, Index window) {
    struct Move {
        Index i, j;
    };
    std::vector<Move> moves;
    for (Index i = 0; i < window; ++i) {
        for (Index j = 0; j < window; ++j) {
            if (i != j && x.at(i) + 2 < x.at(j)) moves.push_back({i, j});
        }
    }
    if (moves.empty()) return std::nullopt;
    const Move m = moves[rng.below(moves.size())];
    const Symbol lo = x.at(m.i);
    const Symbol hi = x.at(m.j);
    // lo < a < b < hi
    Symbol a = static_cast<Symbol>(rng.between(lo + 1, hi - 2));
    Symbol b = static_cast<Symbol>(rng.between(a + 1, hi - 1));
    return with_coordinate(with_coordinate(x, m.i, a), m.j, b);
}

namespace {

// a < z < b for finite-support binary streams, if the open interval allows.
std::optional<std::pair<UtilityStream, UtilityStream>> two_between(const UtilityStream& lo, const UtilityStream& hi) {
    const Between first = dyadic_between(lo, hi);
    if (first.flag != BetweenFlag::Strict) return std::nullopt;
    const Between second = dyadic_between(first.value, hi);
    if (second.flag != BetweenFlag::Strict) return std::nullopt;
    return std::pair{first.value, second.value};
}

}  // namespace

std::optional<NestedStream> random_se_step(Rng& rng, const NestedStream& x, Index window) {
    std::vector<std::pair<Index, Index>> moves;
    for (Index i = 0; i < window; ++i) {
        for (Index j = 0; j < window; ++j) {
            if (i != j && lex_compare(x.at(i), x.at(j)) < 0) moves.emplace_back(i, j);
        }
    }
    // Shuffle so a failed interpolation does not bias toward low coordinates.
    for (std::size_t k = moves.size(); k > 1; --k) std::swap(moves[k - 1], moves[rng.below(k)]);
    for (auto [i, j] : moves) {
        if (auto ab = two_between(x.at(i), x.at(j))) {
            return x.with_coordinate(i, ab->first).with_coordinate(j, ab->second);
        }
    }
    return std::nullopt;
}

std::optional<std::pair<NestedStream, NestedStream>> random_se_pair(Rng& rng, const NestedStream& base, Index window) {
    const Index i = rng.below(window);
    Index j = rng.below(window - 1);
    if (j >= i) ++j;
    const StreamShape shape{};
    UtilityStream lo = random_stream(rng, kBinary, shape);
    UtilityStream hi = random_stream(rng, kBinary, shape);
    auto order = lex_compare(lo, hi);
    if (order == 0) return std::nullopt;
    if (order > 0) std::swap(lo, hi);
    auto ab = two_between(lo, hi);
    if (!ab) return std::nullopt;
    NestedStream x = base.with_coordinate(i, lo).with_coordinate(j, hi);
    NestedStream y = base.with_coordinate(i, ab->first).with_coordinate(j, ab->second);
    return std::pair{std::move(x), std::move(y)};
}

}  // namespace seaorder
