#include "seaorder/prelinearize.hpp"

#include <algorithm>
#include <map>
#include <limits>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace seaorder {

BasePreorder::BasePreorder(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& edges)
    : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    if (std::set<Label>(elements_.begin(), elements_.end()).size() != n) {
        throw Error(ErrorCode::InvalidArgument, "duplicate element labels");
    }
    relation_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) relation_[i][i] = true;
    for (const auto& [a, b] : edges) relation_[index(a)][index(b)] = true;
    // Warshall closure
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!relation_[i][k]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (relation_[k][j]) relation_[i][j] = true;
            }
        }
    }
}

BasePreorder BasePreorder::from_relation(std::vector<Label> elements, std::vector<std::vector<bool>> relation) {
    const std::size_t n = elements.size();
    if (relation.size() != n) throw Error(ErrorCode::InvalidArgument, "relation size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (relation[i].size() != n) throw Error(ErrorCode::InvalidArgument, "relation size mismatch");
        if (!relation[i][i]) throw Error(ErrorCode::ValidationFailed, "relation is not reflexive");
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (relation[i][j] && relation[j][k] && !relation[i][k]) {
                    throw Error(ErrorCode::ValidationFailed, "relation is not transitive");
                }
            }
        }
    }
    BasePreorder base;
    base.elements_ = std::move(elements);
    base.relation_ = std::move(relation);
    return base;
}

bool BasePreorder::contains(const Label& l) const {
    return std::find(elements_.begin(), elements_.end(), l) != elements_.end();
}

std::size_t BasePreorder::index(const Label& l) const {
    auto it = std::find(elements_.begin(), elements_.end(), l);
    if (it == elements_.end()) throw Error(ErrorCode::UnknownElement, "'" + l + "' is not a base element");
    return static_cast<std::size_t>(it - elements_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> BasePreorder::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!strictly_below(i, j)) continue;
            bool covered = true;
            for (std::size_t k = 0; k < n && covered; ++k) {
                if (strictly_below(i, k) && strictly_below(k, j)) covered = false;
            }
            if (covered) out.emplace_back(i, j);
        }
    }
    return out;
}

Condition::Condition(std::vector<std::vector<Label>> blocks) : blocks_(std::move(blocks)) {
    std::set<Label> seen;
    for (auto& block : blocks_) {
        if (block.empty()) throw Error(ErrorCode::InvalidArgument, "condition blocks must be nonempty");
        std::sort(block.begin(), block.end());
        for (const auto& l : block) {
            if (!seen.insert(l).second) throw Error(ErrorCode::InvalidArgument, "'" + l + "' appears in two blocks");
        }
    }
}

std::vector<Label> Condition::domain() const {
    std::vector<Label> out;
    for (const auto& block : blocks_) out.insert(out.end(), block.begin(), block.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Condition::size() const noexcept {
    std::size_t n = 0;
    for (const auto& block : blocks_) n += block.size();
    return n;
}

std::optional<std::size_t> Condition::block_of(const Label& l) const {
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (std::binary_search(blocks_[b].begin(), blocks_[b].end(), l)) return b;
    }
    return std::nullopt;
}

bool Condition::below(const Label& a, const Label& b) const {
    auto ba = block_of(a);
    auto bb = block_of(b);
    if (!ba || !bb) throw Error(ErrorCode::UnknownElement, "label outside condition domain");
    return *ba <= *bb;
}

bool Condition::strictly_below(const Label& a, const Label& b) const { return below(a, b) && !below(b, a); }

Condition Condition::restrict_to(const std::vector<Label>& subdomain) const {
    const std::set<Label> keep(subdomain.begin(), subdomain.end());
    std::vector<std::vector<Label>> out;
    for (const auto& block : blocks_) {
        std::vector<Label> kept;
        std::copy_if(block.begin(), block.end(), std::back_inserter(kept), [&](const Label& l) { return keep.count(l) != 0; });
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    return Condition(std::move(out));
}

Condition condition_from_relation(const std::vector<Label>& labels, const std::vector<std::vector<bool>>& below) {
    const std::size_t n = labels.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!below[i][j] && !below[j][i]) throw Error(ErrorCode::ValidationFailed, "relation is not total");
            for (std::size_t k = 0; k < n; ++k) {
                if (below[i][j] && below[j][k] && !below[i][k]) {
                    throw Error(ErrorCode::ValidationFailed, "relation is not transitive");
                }
            }
        }
    }
    // In a total preorder, the number of elements weakly below x ranks x's block.
    std::map<std::size_t, std::vector<Label>> by_rank;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t rank = 0;
        for (std::size_t j = 0; j < n; ++j) rank += below[j][i] ? 1 : 0;
        by_rank[rank].push_back(labels[i]);
    }
    std::vector<std::vector<Label>> blocks;
    for (auto& [rank, block] : by_rank) blocks.push_back(std::move(block));
    return Condition(std::move(blocks));
}

bool validate_condition(const Condition& c, const BasePreorder& base) {
    const auto domain = c.domain();
    std::vector<std::size_t> idx;
    std::vector<std::size_t> block;
    for (const auto& l : domain) {
        idx.push_back(base.index(l));
        block.push_back(*c.block_of(l));
    }
    for (std::size_t a = 0; a < domain.size(); ++a) {
        for (std::size_t b = 0; b < domain.size(); ++b) {
            if ((block[a] == block[b]) != base.equivalent(idx[a], idx[b])) return false;
            if (base.strictly_below(idx[a], idx[b]) && !(block[a] < block[b])) return false;
        }
    }
    return true;
}

bool extends(const Condition& stronger, const Condition& weaker) {
    const auto dom = weaker.domain();
    for (const auto& l : dom) {
        if (!stronger.contains(l)) return false;
    }
    return stronger.restrict_to(dom) == weaker;
}

std::string_view to_string(EdgeSource s) {
    switch (s) {
        case EdgeSource::P: return "p";
        case EdgeSource::Q: return "q";
        case EdgeSource::BaseStrict: return "base";
        case EdgeSource::BaseEquivalent: return "base-equiv";
    }
    return "?";
}

namespace {

int tie_rank_of(std::size_t element, const BasePreorder& base, const TieBreak& tie_break) {
    const auto& l = base.label(element);
    auto it = std::find(tie_break.begin(), tie_break.end(), l);
    if (it != tie_break.end()) return static_cast<int>(it - tie_break.begin());
    return static_cast<int>(tie_break.size() + element);
}

// Union domain condensed by base equivalence, with strict edges from p, q and
// the base between classes.
struct ClassGraph {
    struct Edge {
        std::size_t from_class, to_class;
        std::size_t from_elem, to_elem;  // base indices
        EdgeSource source;
    };

    std::vector<std::size_t> members;  // base indices of the union domain
    std::vector<std::size_t> class_of;  // parallel to members
    std::vector<std::vector<std::size_t>> classes;  // member positions
    std::vector<std::vector<Edge>> out;

    ClassGraph(const std::vector<const Condition*>& conditions, const BasePreorder& base) {
        std::set<std::size_t> dom;
        for (const auto* c : conditions) {
            for (const auto& l : c->domain()) dom.insert(base.index(l));
        }
        members.assign(dom.begin(), dom.end());
        class_of.assign(members.size(), 0);
        for (std::size_t i = 0; i < members.size(); ++i) {
            std::size_t k = 0;
            while (k < classes.size() && !base.equivalent(members[classes[k][0]], members[i])) ++k;
            if (k == classes.size()) classes.emplace_back();
            classes[k].push_back(i);
            class_of[i] = k;
        }
        out.resize(classes.size());
        std::set<std::pair<std::size_t, std::size_t>> seen;
        auto add = [&](std::size_t a, std::size_t b, EdgeSource source) {
            const std::size_t ca = class_of[a];
            const std::size_t cb = class_of[b];
            if (!seen.insert({ca, cb}).second) return;
            out[ca].push_back({ca, cb, members[a], members[b], source});
        };
        const EdgeSource sources[] = {EdgeSource::P, EdgeSource::Q};
        for (std::size_t c = 0; c < conditions.size(); ++c) {
            const Condition& cond = *conditions[c];
            for (std::size_t a = 0; a < members.size(); ++a) {
                const Label& la = base.label(members[a]);
                if (!cond.contains(la)) continue;
                for (std::size_t b = 0; b < members.size(); ++b) {
                    const Label& lb = base.label(members[b]);
                    if (cond.contains(lb) && cond.strictly_below(la, lb)) add(a, b, sources[std::min<std::size_t>(c, 1)]);
                }
            }
        }
        for (std::size_t a = 0; a < members.size(); ++a) {
            for (std::size_t b = 0; b < members.size(); ++b) {
                if (base.strictly_below(members[a], members[b])) add(a, b, EdgeSource::BaseStrict);
            }
        }
    }

    // Class-level cycle, if any, as the edges along it.
    std::optional<std::vector<Edge>> find_cycle() const {
        enum Color { White, Gray, Black };
        std::vector<Color> color(classes.size(), White);
        std::vector<const Edge*> via(classes.size(), nullptr);
        std::optional<std::vector<Edge>> found;

        auto dfs = [&](auto&& self, std::size_t u) -> void {
            color[u] = Gray;
            for (const Edge& e : out[u]) {
                if (found) return;
                if (color[e.to_class] == Gray) {
                    std::vector<Edge> cyc{e};
                    for (std::size_t v = u; v != e.to_class; v = via[v]->from_class) cyc.push_back(*via[v]);
                    std::reverse(cyc.begin(), cyc.end());
                    found = std::move(cyc);
                    return;
                }
                if (color[e.to_class] == White) {
                    via[e.to_class] = &e;
                    self(self, e.to_class);
                }
            }
            color[u] = Black;
        };
        for (std::size_t s = 0; s < classes.size() && !found; ++s) {
            if (color[s] == White) dfs(dfs, s);
        }
        return found;
    }
};

void require_valid(const Condition& c, const BasePreorder& base, const char* what) {
    if (!validate_condition(c, base)) {
        throw Error(ErrorCode::ValidationFailed, std::string(what) + " does not prelinearize the base");
    }
}

}  // namespace

Compatibility compatible(const Condition& p, const Condition& q, const BasePreorder& base) {
    require_valid(p, base, "p");
    require_valid(q, base, "q");
    const ClassGraph graph({&p, &q}, base);
    auto cyc = graph.find_cycle();
    if (!cyc) return {};
    Compatibility result{false, {}};
    // Expand to elements: consecutive class edges may leave from a different
    // member of the class they arrived in.
    for (std::size_t k = 0; k < cyc->size(); ++k) {
        const auto& e = (*cyc)[k];
        const auto& next = (*cyc)[(k + 1) % cyc->size()];
        result.cycle.push_back({base.label(e.from_elem), base.label(e.to_elem), e.source});
        if (e.to_elem != next.from_elem) {
            result.cycle.push_back({base.label(e.to_elem), base.label(next.from_elem), EdgeSource::BaseEquivalent});
        }
    }
    return result;
}

Condition common_extension(const Condition& p, const Condition& q, const BasePreorder& base, const TieBreak& tie_break) {
    const auto verdict = compatible(p, q, base);
    if (!verdict.compatible) throw Error(ErrorCode::Incompatible, "conditions have no common extension");
    const ClassGraph graph({&p, &q}, base);
    const std::size_t k = graph.classes.size();
    std::vector<int> rank(k, std::numeric_limits<int>::max());
    std::vector<std::size_t> indegree(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
        for (std::size_t m : graph.classes[c]) rank[c] = std::min(rank[c], tie_rank_of(graph.members[m], base, tie_break));
        for (const auto& e : graph.out[c]) ++indegree[e.to_class];
    }
    using Entry = std::pair<int, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
    for (std::size_t c = 0; c < k; ++c) {
        if (indegree[c] == 0) ready.push({rank[c], c});
    }
    std::vector<std::vector<Label>> blocks;
    while (!ready.empty()) {
        const std::size_t c = ready.top().second;
        ready.pop();
        std::vector<Label> block;
        for (std::size_t m : graph.classes[c]) block.push_back(base.label(graph.members[m]));
        blocks.push_back(std::move(block));
        for (const auto& e : graph.out[c]) {
            if (--indegree[e.to_class] == 0) ready.push({rank[e.to_class], e.to_class});
        }
    }
    return Condition(std::move(blocks));
}

Condition insert_element(const Condition& c, const BasePreorder& base, const Label& e, const TieBreak& tie_break) {
    require_valid(c, base, "condition");
    const std::size_t ei = base.index(e);
    if (c.contains(e)) return c;
    auto blocks = c.blocks();
    for (auto& block : blocks) {
        if (base.equivalent(base.index(block.front()), ei)) {
            block.push_back(e);
            return Condition(std::move(blocks));
        }
    }
    // Admissible gaps g ∈ [lo, hi]: the new block goes before blocks[g].
    std::size_t lo = 0;
    std::size_t hi = blocks.size();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (const auto& l : blocks[b]) {
            const std::size_t li = base.index(l);
            if (base.strictly_below(li, ei)) lo = std::max(lo, b + 1);
            if (base.strictly_below(ei, li)) hi = std::min(hi, b);
        }
    }
    if (lo > hi) throw Error(ErrorCode::ValidationFailed, "no admissible position for '" + e + "'");
    // Lowest admissible gap in front of a block that ranks after e.
    const int e_rank = tie_rank_of(ei, base, tie_break);
    std::size_t gap = lo;
    while (gap < hi) {
        int block_rank = std::numeric_limits<int>::max();
        for (const auto& l : blocks[gap]) block_rank = std::min(block_rank, tie_rank_of(base.index(l), base, tie_break));
        if (block_rank > e_rank) break;
        ++gap;
    }
    blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(gap), std::vector<Label>{e});
    return Condition(std::move(blocks));
}

Condition linearize(const BasePreorder& base, const Condition& start, const std::vector<Label>& insertion_order,
                    const TieBreak& tie_break) {
    require_valid(start, base, "start condition");
    Condition c = start;
    for (const auto& l : insertion_order) c = insert_element(c, base, l, tie_break);
    for (const auto& l : base.elements()) c = insert_element(c, base, l, tie_break);
    return c;
}

Condition chain_union(const std::vector<Condition>& chain) {
    if (chain.empty()) return {};
    for (std::size_t k = 1; k < chain.size(); ++k) {
        if (!extends(chain[k], chain[k - 1])) {
            throw Error(ErrorCode::InvalidArgument, "condition " + std::to_string(k) + " does not extend its predecessor");
        }
    }
    std::set<Label> all;
    for (const auto& c : chain) {
        for (const auto& l : c.domain()) all.insert(l);
    }
    const std::vector<Label> labels(all.begin(), all.end());
    const std::size_t n = labels.size();
    // Each pair is decided by the first condition whose domain holds both.
    std::vector<std::vector<bool>> below(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& c : chain) {
                if (c.contains(labels[i]) && c.contains(labels[j])) {
                    below[i][j] = c.below(labels[i], labels[j]);
                    break;
                }
            }
        }
    }
    return condition_from_relation(labels, below);
}

Condition ultralimit_schedule(const Schedule& schedule, const ResidueSelector& selector, const BasePreorder& base) {
    const auto& entries = schedule.period;
    if (entries.empty()) throw Error(ErrorCode::InvalidArgument, "empty schedule");
    const auto dom = entries.front().domain();
    for (const auto& c : entries) {
        if (c.domain() != dom) throw Error(ErrorCode::InvalidArgument, "schedule entries have different domains");
        require_valid(c, base, "schedule entry");
    }
    const std::size_t len = entries.size();
    const std::size_t g = std::gcd<std::size_t>(selector.modulus(), len);
    const std::size_t first = selector.residue() % g;
    for (std::size_t j = first; j < len; j += g) {
        if (entries[j] != entries[first]) {
            throw Error(ErrorCode::CoarseSelector, "progression meets distinct schedule entries " + std::to_string(first) +
                                                       " and " + std::to_string(j));
        }
    }
    return entries[first];
}

std::string to_dot(const Condition& c, const BasePreorder& base) {
    std::ostringstream os;
    os << "digraph condition {\n  rankdir=BT;\n  node [shape=box];\n";
    const auto& blocks = c.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        os << "  b" << b << " [label=\"";
        for (std::size_t i = 0; i < blocks[b].size(); ++i) os << (i ? ", " : "") << blocks[b][i];
        os << "\"];\n";
    }
    for (std::size_t b = 0; b + 1 < blocks.size(); ++b) os << "  b" << b << " -> b" << b + 1 << ";\n";
    std::set<std::pair<std::size_t, std::size_t>> drawn;
    for (auto [i, j] : base.covers()) {
        auto bi = c.block_of(base.label(i));
        auto bj = c.block_of(base.label(j));
        if (!bi || !bj || !drawn.insert({*bi, *bj}).second) continue;
        os << "  b" << *bi << " -> b" << *bj << " [style=dashed];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace seaorder
