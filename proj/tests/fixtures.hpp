#pragma once

// Random bases and conditions shared by the unit tests and the acceptance run.

#include <algorithm>
#include <string>
#include <vector>

#include "seaorder/generators.hpp"
#include "seaorder/prelinearize.hpp"

namespace fixture {

using namespace seaorder;

inline std::vector<Label> labels(std::size_t n) {
    std::vector<Label> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

// Random edges between random elements; occasional back edges create
// equivalence classes.
inline BasePreorder random_base(Rng& rng, std::size_t n) {
    const auto names = labels(n);
    std::vector<std::pair<Label, Label>> edges;
    const std::size_t count = rng.below(2 * n + 1);
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t i = rng.below(n);
        std::size_t j = rng.below(n);
        if (i > j && rng.below(5) != 0) std::swap(i, j);
        edges.emplace_back(names[i], names[j]);
    }
    return BasePreorder(names, edges);
}

inline std::vector<Label> random_subset(Rng& rng, const std::vector<Label>& from) {
    std::vector<Label> out;
    for (const auto& l : from) {
        if (rng.coin()) out.push_back(l);
    }
    return out;
}

inline void shuffle(Rng& rng, std::vector<Label>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng.below(i)]);
}

// A random ordered partition of `domain`, not necessarily valid.
inline Condition random_partition(Rng& rng, std::vector<Label> domain) {
    shuffle(rng, domain);
    std::vector<std::vector<Label>> blocks;
    for (const auto& l : domain) {
        if (blocks.empty() || rng.below(3) == 0) {
            blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(rng.below(blocks.size() + 1)), {l});
        } else {
            blocks[rng.below(blocks.size())].push_back(l);
        }
    }
    return Condition(std::move(blocks));
}

// A valid condition on a random subdomain: a random linearization of the
// base restricted to a random subset, or a random partition that happens
// to validate.
inline Condition random_condition(Rng& rng, const BasePreorder& base) {
    if (rng.below(4) != 0) {
        auto order = base.elements();
        shuffle(rng, order);
        const Condition full = linearize(base, {}, order, order);
        return full.restrict_to(random_subset(rng, base.elements()));
    }
    for (;;) {
        Condition c = random_partition(rng, random_subset(rng, base.elements()));
        if (validate_condition(c, base)) return c;
    }
}

// Every edge holds, consecutive edges chain up, and at least one is strict.
inline bool edge_holds(const CycleEdge& e, const Condition& p, const Condition& q, const BasePreorder& base) {
    switch (e.source) {
        case EdgeSource::P: return p.contains(e.from) && p.contains(e.to) && p.strictly_below(e.from, e.to);
        case EdgeSource::Q: return q.contains(e.from) && q.contains(e.to) && q.strictly_below(e.from, e.to);
        case EdgeSource::BaseStrict: return base.strictly_below(e.from, e.to);
        case EdgeSource::BaseEquivalent: return e.from != e.to && base.equivalent(e.from, e.to);
    }
    return false;
}

inline bool replays(const Compatibility& r, const Condition& p, const Condition& q, const BasePreorder& base) {
    if (r.cycle.empty()) return false;
    bool strict = false;
    for (std::size_t k = 0; k < r.cycle.size(); ++k) {
        const auto& e = r.cycle[k];
        if (!edge_holds(e, p, q, base)) return false;
        if (e.to != r.cycle[(k + 1) % r.cycle.size()].from) return false;
        strict = strict || e.source != EdgeSource::BaseEquivalent;
    }
    return strict;
}

}  // namespace fixture
