#include "seaorder/embed.hpp"

#include <algorithm>
#include <cmath>

namespace seaorder {

DyadicCode DyadicCode::from_bits(std::string_view bits) {
    if (bits.empty()) throw Error(ErrorCode::InvalidArgument, "dyadic code must be nonempty");
    std::vector<std::uint8_t> out;
    for (char c : bits) {
        if (c != '0' && c != '1') throw Error(ErrorCode::InvalidArgument, "dyadic code must be binary");
        out.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    if (out.back() != 1) throw Error(ErrorCode::InvalidArgument, "dyadic code must end in 1");
    return DyadicCode(std::move(out));
}

std::string DyadicCode::bits() const {
    std::string s;
    for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
    return s;
}

double DyadicCode::approx_value() const {
    double v = 0;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i]) v += std::ldexp(1.0, -static_cast<int>(i) - 1);
    }
    return v;
}

DyadicCode DyadicCode::midpoint(const DyadicCode& a, const DyadicCode& b) {
    const std::size_t len = std::max(a.length(), b.length());
    // Sum of the two fractions over 2^len, carry out in front.
    std::vector<std::uint8_t> sum(len + 1, 0);
    unsigned carry = 0;
    for (std::size_t i = len; i-- > 0;) {
        const unsigned s = (i < a.length() ? a.bits_[i] : 0u) + (i < b.length() ? b.bits_[i] : 0u) + carry;
        sum[i + 1] = static_cast<std::uint8_t>(s & 1u);
        carry = s >> 1;
    }
    sum[0] = static_cast<std::uint8_t>(carry);
    // sum / 2^{len+1} read as a binary fraction is exactly the midpoint.
    while (!sum.empty() && sum.back() == 0) sum.pop_back();
    return DyadicCode(std::move(sum));
}

DyadicCode DyadicCode::halved() const {
    std::vector<std::uint8_t> out{0};
    out.insert(out.end(), bits_.begin(), bits_.end());
    return DyadicCode(std::move(out));
}

DyadicCode DyadicCode::toward_one() const {
    std::vector<std::uint8_t> out{1};
    out.insert(out.end(), bits_.begin(), bits_.end());
    return DyadicCode(std::move(out));
}

std::string DyadicCode::expansion(std::size_t depth) const {
    std::string s = bits();
    s.resize(depth, '0');
    return s;
}

std::strong_ordering operator<=>(const DyadicCode& a, const DyadicCode& b) {
    const std::size_t len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
        const unsigned x = i < a.length() ? a.bits_[i] : 0u;
        const unsigned y = i < b.length() ? b.bits_[i] : 0u;
        if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
}

const DyadicCode& EmbedState::code(const Label& l) const {
    auto it = assignment_.find(l);
    if (it == assignment_.end()) throw Error(ErrorCode::UnknownElement, "'" + l + "' is not assigned");
    return it->second;
}

EmbedState embed_insert(const EmbedState& state, const Label& e, const std::function<Comparison(const Label&)>& e_versus) {
    if (state.contains(e)) throw Error(ErrorCode::AlreadyAssigned, "'" + e + "' already has a code");
    // e must be above a prefix of the ordered labels and below the rest.
    std::size_t pos = 0;
    bool seen_less = false;
    for (std::size_t k = 0; k < state.ordered_.size(); ++k) {
        const Comparison c = e_versus(state.ordered_[k]);
        if (c == Comparison::Equivalent) {
            throw Error(ErrorCode::InconsistentComparator, "'" + e + "' ties with '" + state.ordered_[k] + "'");
        }
        if (c == Comparison::Greater) {
            if (seen_less) throw Error(ErrorCode::InconsistentComparator, "no position is consistent for '" + e + "'");
            pos = k + 1;
        } else {
            seen_less = true;
        }
    }

    DyadicCode code = DyadicCode::half();
    const auto& ord = state.ordered_;
    if (ord.empty()) {
        code = DyadicCode::half();
    } else if (pos == 0) {
        code = state.code(ord.front()).halved();
    } else if (pos == ord.size()) {
        code = state.code(ord.back()).toward_one();
    } else {
        code = DyadicCode::midpoint(state.code(ord[pos - 1]), state.code(ord[pos]));
    }

    EmbedState next = state;
    next.assignment_.emplace(e, code);
    next.ordered_.insert(next.ordered_.begin() + static_cast<std::ptrdiff_t>(pos), e);
    return next;
}

EmbedState embed_all(const std::vector<Label>& elements, const std::function<Comparison(const Label&, const Label&)>& cmp) {
    EmbedState state;
    for (const auto& e : elements) {
        state = embed_insert(state, e, [&](const Label& other) { return cmp(e, other); });
    }
    return state;
}

std::string dedekind_lift(const EmbedState& state, const std::function<bool(const Label&)>& in_cut, std::size_t depth) {
    const DyadicCode* sup = nullptr;
    for (const auto& [label, code] : state.assignment()) {
        if (in_cut(label) && (sup == nullptr || *sup < code)) sup = &code;
    }
    if (sup == nullptr) throw Error(ErrorCode::EmptyCut, "no assigned label lies in the cut");
    return sup->expansion(depth);
}

}  // namespace seaorder
