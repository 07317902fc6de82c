#pragma once

// Eventually periodic utility streams over a finite ordered alphabet, the
// finitely supported permutations acting on them, and nested streams
// (finite modifications of a constant binary-stream sequence).

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "seaorder/errors.hpp"

namespace seaorder {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;
using Index = std::uint64_t;

class Alphabet {
public:
    explicit Alphabet(std::uint32_t size);

    std::uint32_t size() const noexcept { return size_; }
    bool contains(Symbol s) const noexcept { return s < size_; }

    friend bool operator==(Alphabet, Alphabet) = default;

private:
    std::uint32_t size_;
};

inline const Alphabet kBinary{2};

// A raw, possibly non-canonical representation. Only `normalize` turns it
// into a UtilityStream.
struct StreamParts {
    Alphabet alphabet;
    Word preperiod;
    Word period;
};

// preperiod · period^ω, always held in canonical form: the period is
// primitive and the preperiod does not end with the period's last symbol.
class UtilityStream {
public:
    UtilityStream(Alphabet alphabet, Word preperiod, Word period);

    static UtilityStream constant(Alphabet alphabet, Symbol s) { return {alphabet, {}, {s}}; }

    Alphabet alphabet() const noexcept { return alphabet_; }
    const Word& preperiod() const noexcept { return preperiod_; }
    const Word& period() const noexcept { return period_; }

    Symbol at(Index n) const noexcept {
        if (n < preperiod_.size()) return preperiod_[n];
        return period_[(n - preperiod_.size()) % period_.size()];
    }

    // True iff every coordinate is 0 from some point on.
    bool has_finite_support() const noexcept { return period_.size() == 1 && period_[0] == 0; }

    friend bool operator==(const UtilityStream&, const UtilityStream&) = default;

private:
    Alphabet alphabet_;
    Word preperiod_;
    Word period_;
};

UtilityStream normalize(const StreamParts& parts);
UtilityStream normalize(const UtilityStream& s);

Symbol eval(const UtilityStream& s, Index n);

// The stream with coordinate n replaced by v.
UtilityStream with_coordinate(const UtilityStream& x, Index n, Symbol v);

// Eventual equality (the Vitali equivalence on the fragment).
bool tail_equal(const UtilityStream& x, const UtilityStream& y);

// Phase-aligned primitive word w with w^ω equal to the stream at infinity.
struct ClassKey {
    Word word;

    friend bool operator==(const ClassKey&, const ClassKey&) = default;
    friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

ClassKey class_key(const UtilityStream& x);

// Coordinates where two tail-equal streams differ, ascending. Throws
// NotTailEquivalent otherwise.
std::vector<Index> difference_set(const UtilityStream& x, const UtilityStream& y);

// First n coordinates in nondecreasing order.
Word sorted_prefix(const UtilityStream& x, Index n);

// Lexicographic order on ℕ-indexed streams.
std::strong_ordering lex_compare(const UtilityStream& x, const UtilityStream& y);

class FiniteSupportPermutation {
public:
    FiniteSupportPermutation() = default;

    // Builds from explicit (n, π(n)) pairs. Fixed points are dropped; the
    // pairs must describe a bijection of their domain onto itself.
    static FiniteSupportPermutation from_pairs(const std::vector<std::pair<Index, Index>>& pairs);
    static FiniteSupportPermutation transposition(Index i, Index j);
    // i0 -> i1 -> ... -> ik -> i0
    static FiniteSupportPermutation cycle(const std::vector<Index>& points);

    Index operator()(Index n) const;
    FiniteSupportPermutation inverse() const;
    // Composition (*this ∘ other)(n) = (*this)(other(n)).
    FiniteSupportPermutation after(const FiniteSupportPermutation& other) const;

    const std::map<Index, Index>& mapping() const noexcept { return mapping_; }
    bool is_identity() const noexcept { return mapping_.empty(); }
    // One past the largest moved point; 0 for the identity.
    Index support_bound() const noexcept { return mapping_.empty() ? 0 : mapping_.rbegin()->first + 1; }

    friend bool operator==(const FiniteSupportPermutation&, const FiniteSupportPermutation&) = default;

private:
    std::map<Index, Index> mapping_;
};

// r(n) = x(π(n)), canonicalized.
UtilityStream permute(const UtilityStream& x, const FiniteSupportPermutation& pi);

// A point of (2^ℕ)^ℕ: coordinates 0..k-1 are `exceptionals`, every later
// coordinate is `tail`. Canonical: the last exceptional differs from tail.
class NestedStream {
public:
    NestedStream(std::vector<UtilityStream> exceptionals, UtilityStream tail);

    const std::vector<UtilityStream>& exceptionals() const noexcept { return exceptionals_; }
    const UtilityStream& tail() const noexcept { return tail_; }

    const UtilityStream& at(Index n) const noexcept {
        return n < exceptionals_.size() ? exceptionals_[n] : tail_;
    }

    NestedStream with_coordinate(Index n, const UtilityStream& value) const;

    friend bool operator==(const NestedStream&, const NestedStream&) = default;

private:
    std::vector<UtilityStream> exceptionals_;
    UtilityStream tail_;
};

// Cofinite coordinatewise equality (the E₁ equivalence on the fragment).
bool nested_e1_equal(const NestedStream& x, const NestedStream& y);

std::vector<Index> difference_set(const NestedStream& x, const NestedStream& y);

NestedStream permute(const NestedStream& x, const FiniteSupportPermutation& pi);

enum class BetweenFlag { Strict, Left };

struct Between {
    UtilityStream value;
    BetweenFlag flag;
};

// A finite-support binary stream z with a ≤ z ≤ b (lex). Strict when the open
// interval (a, b) is nonempty; otherwise z = a.
Between dyadic_between(const UtilityStream& a, const UtilityStream& b);

}  // namespace seaorder
