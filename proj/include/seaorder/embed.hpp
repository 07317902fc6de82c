#pragma once

// Order-preserving embedding of a countable linear order into the dyadic
// rationals of (0, 1), built one element at a time, with a finite
// Dedekind-completion lift.

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "seaorder/orders.hpp"
#include "seaorder/prelinearize.hpp"

namespace seaorder {

// The dyadic rational Σ bits[i]·2^{-i-1}, stored as its canonical word
// (nonempty, last bit 1).
class DyadicCode {
public:
    // Throws InvalidArgument on an empty word, stray characters, or a trailing 0.
    static DyadicCode from_bits(std::string_view bits);

    static DyadicCode half() { return from_bits("1"); }

    std::string bits() const;
    std::size_t length() const noexcept { return bits_.size(); }
    double approx_value() const;

    // (a + b) / 2, a / 2 and (a + 1) / 2.
    static DyadicCode midpoint(const DyadicCode& a, const DyadicCode& b);
    DyadicCode halved() const;
    DyadicCode toward_one() const;

    // Binary expansion padded with zeros or truncated to `depth` bits.
    std::string expansion(std::size_t depth) const;

    friend bool operator==(const DyadicCode&, const DyadicCode&) = default;
    // Numeric order, which is the lex order of zero-padded words.
    friend std::strong_ordering operator<=>(const DyadicCode& a, const DyadicCode& b);

private:
    explicit DyadicCode(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {}

    std::vector<std::uint8_t> bits_;
};

class EmbedState {
public:
    const std::map<Label, DyadicCode>& assignment() const noexcept { return assignment_; }
    // Assigned labels in increasing code order.
    const std::vector<Label>& ordered() const noexcept { return ordered_; }
    bool contains(const Label& l) const { return assignment_.count(l) != 0; }
    const DyadicCode& code(const Label& l) const;
    std::size_t size() const noexcept { return ordered_.size(); }

private:
    friend EmbedState embed_insert(const EmbedState&, const Label&, const std::function<Comparison(const Label&)>&);

    std::map<Label, DyadicCode> assignment_;
    std::vector<Label> ordered_;
};

// `e_versus` answers how e compares with an already assigned label.
// Throws AlreadyAssigned or InconsistentComparator.
EmbedState embed_insert(const EmbedState& state, const Label& e, const std::function<Comparison(const Label&)>& e_versus);

EmbedState embed_all(const std::vector<Label>& elements, const std::function<Comparison(const Label&, const Label&)>& cmp);

// Supremum (here: maximum) of the codes of labels inside the cut, as a
// `depth`-bit expansion. Throws EmptyCut.
std::string dedekind_lift(const EmbedState& state, const std::function<bool(const Label&)>& in_cut, std::size_t depth);

}  // namespace seaorder
