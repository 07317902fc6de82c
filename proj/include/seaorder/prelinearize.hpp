#pragma once

// Finite conditions of the prelinearizing poset over an explicit preorder:
// total preorders on a subdomain whose equivalence is exactly the base
// equivalence and whose strict part contains the base strict part.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seaorder/errors.hpp"
#include "seaorder/orders.hpp"

namespace seaorder {

using Label = std::string;

class BasePreorder {
public:
    // Reflexive-transitive closure of `edges` (x ⪯ y for each [x, y]); cycles
    // collapse into equivalences.
    BasePreorder(std::vector<Label> elements, const std::vector<std::pair<Label, Label>>& edges);

    // `relation[i][j]` is i ⪯ j; must already be reflexive and transitive.
    static BasePreorder from_relation(std::vector<Label> elements, std::vector<std::vector<bool>> relation);

    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<Label>& elements() const noexcept { return elements_; }
    const Label& label(std::size_t i) const { return elements_.at(i); }
    bool contains(const Label& l) const;
    // Throws UnknownElement.
    std::size_t index(const Label& l) const;

    bool below(std::size_t i, std::size_t j) const { return relation_[i][j]; }
    bool strictly_below(std::size_t i, std::size_t j) const { return relation_[i][j] && !relation_[j][i]; }
    bool equivalent(std::size_t i, std::size_t j) const { return relation_[i][j] && relation_[j][i]; }

    bool strictly_below(const Label& a, const Label& b) const { return strictly_below(index(a), index(b)); }
    bool equivalent(const Label& a, const Label& b) const { return equivalent(index(a), index(b)); }

    // Covering pairs of the strict order, for diagrams.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

private:
    BasePreorder() = default;

    std::vector<Label> elements_;
    std::vector<std::vector<bool>> relation_;
};

// An ordered partition; earlier blocks are lower. Labels inside a block are
// kept sorted so equal preorders compare equal.
class Condition {
public:
    Condition() = default;
    explicit Condition(std::vector<std::vector<Label>> blocks);

    const std::vector<std::vector<Label>>& blocks() const noexcept { return blocks_; }
    std::vector<Label> domain() const;
    std::size_t size() const noexcept;
    bool empty() const noexcept { return blocks_.empty(); }
    bool contains(const Label& l) const { return block_of(l).has_value(); }
    std::optional<std::size_t> block_of(const Label& l) const;

    // a ⪯_c b; both must be in the domain.
    bool below(const Label& a, const Label& b) const;
    bool strictly_below(const Label& a, const Label& b) const;

    Condition restrict_to(const std::vector<Label>& subdomain) const;

    friend bool operator==(const Condition&, const Condition&) = default;

private:
    std::vector<std::vector<Label>> blocks_;
};

// Total preorder with the given relation (`below[i][j]` is labels[i] ⪯ labels[j]).
// Throws ValidationFailed unless the relation is total and transitive.
Condition condition_from_relation(const std::vector<Label>& labels, const std::vector<std::vector<bool>>& below);

// Throws UnknownElement for labels outside the base.
bool validate_condition(const Condition& c, const BasePreorder& base);

// `stronger` contains `weaker`'s domain and agrees with it there.
bool extends(const Condition& stronger, const Condition& weaker);

enum class EdgeSource { P, Q, BaseStrict, BaseEquivalent };

std::string_view to_string(EdgeSource s);

struct CycleEdge {
    Label from;
    Label to;
    EdgeSource source;

    friend bool operator==(const CycleEdge&, const CycleEdge&) = default;
};

struct Compatibility {
    bool compatible = true;
    // For incompatible pairs: a closed walk from, to, from, ... with at least
    // one strict edge.
    std::vector<CycleEdge> cycle;
};

// Looks for a cycle through <_p ∪ <_q ∪ ≺ on the union domain, allowing hops
// between base-equivalent elements. Throws ValidationFailed.
Compatibility compatible(const Condition& p, const Condition& q, const BasePreorder& base);

// Ranks labels for tie-breaking: listed labels first, in list order, then
// the remaining base elements in base order.
using TieBreak = std::vector<Label>;

// Throws Incompatible.
Condition common_extension(const Condition& p, const Condition& q, const BasePreorder& base,
                           const TieBreak& tie_break = {});

Condition insert_element(const Condition& c, const BasePreorder& base, const Label& e, const TieBreak& tie_break = {});

// Inserts every base element missing from `start`, in `insertion_order`
// first and base order after that.
Condition linearize(const BasePreorder& base, const Condition& start = {}, const std::vector<Label>& insertion_order = {},
                    const TieBreak& tie_break = {});

// Union of an increasing chain c0 ⊆ c1 ⊆ ... (each extends its predecessor).
Condition chain_union(const std::vector<Condition>& chain);

struct Schedule {
    std::vector<Condition> period;
};

// Limit of the periodic schedule along {n ≡ r mod m}. Throws CoarseSelector
// when the progression meets more than one distinct entry.
Condition ultralimit_schedule(const Schedule& schedule, const ResidueSelector& selector, const BasePreorder& base);

// Graphviz: one node per block, solid edges along the block order and dashed
// edges for base covering pairs between blocks.
std::string to_dot(const Condition& c, const BasePreorder& base);

}  // namespace seaorder
