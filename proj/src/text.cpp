#include "seaorder/text.hpp"

#include <cctype>
#include <limits>
#include <set>

namespace seaorder {

namespace {

constexpr std::uint32_t kMaxDigitAlphabet = 10;

class StreamParser {
public:
    explicit StreamParser(std::string_view text) : text_(text) {}

    UtilityStream parse() {
        const std::uint64_t size = number();
        if (size < 2) fail(0, "alphabet size must be at least 2");
        if (size > std::numeric_limits<std::uint32_t>::max()) fail(0, "alphabet size too large");
        size_ = static_cast<std::uint32_t>(size);
        expect(':');
        Word pre = word(/*allow_empty=*/true);
        expect('|');
        const std::size_t period_at = pos_;
        Word per = word(/*allow_empty=*/false);
        if (per.empty()) fail(period_at, "empty period");
        if (pos_ != text_.size()) fail(pos_, "trailing characters");
        return {Alphabet(size_), std::move(pre), std::move(per)};
    }

private:
    [[noreturn]] void fail(std::size_t at, const std::string& reason) const { throw ParseError(at, reason); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void expect(char c) {
        if (peek() != c) fail(pos_, std::string("expected '") + c + "'");
        ++pos_;
    }

    std::uint64_t number() {
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            if (value > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) fail(start, "number too large");
            value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
            ++pos_;
        }
        if (pos_ == start) fail(start, "expected a number");
        return value;
    }

    Symbol symbol(std::uint64_t value, std::size_t at) const {
        if (value >= size_) fail(at, "symbol " + std::to_string(value) + " outside alphabet");
        return static_cast<Symbol>(value);
    }

    Word word(bool allow_empty) {
        Word out;
        if (size_ <= kMaxDigitAlphabet) {
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                out.push_back(symbol(static_cast<std::uint64_t>(peek() - '0'), pos_));
                ++pos_;
            }
            if (peek() == '[' && out.empty()) return bracketed(allow_empty);
            return out;
        }
        if (peek() != '[') {
            if (allow_empty) return out;
            fail(pos_, "expected '[' for alphabet larger than 10");
        }
        return bracketed(allow_empty);
    }

    Word bracketed(bool allow_empty) {
        Word out;
        expect('[');
        if (peek() == ']') {
            if (!allow_empty) fail(pos_, "empty period");
            ++pos_;
            return out;
        }
        for (;;) {
            const std::size_t at = pos_;
            out.push_back(symbol(number(), at));
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return out;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::uint32_t size_ = 0;
};

std::string render_word(const Word& w, std::uint32_t alphabet_size) {
    std::string out;
    if (alphabet_size <= kMaxDigitAlphabet) {
        for (Symbol s : w) out.push_back(static_cast<char>('0' + s));
        return out;
    }
    if (w.empty()) return out;
    out.push_back('[');
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i != 0) out.push_back(',');
        out += std::to_string(w[i]);
    }
    out.push_back(']');
    return out;
}

}  // namespace

UtilityStream parse_stream(std::string_view text) { return StreamParser(text).parse(); }

std::string render(const UtilityStream& s) {
    const auto size = s.alphabet().size();
    return std::to_string(size) + ":" + render_word(s.preperiod(), size) + "|" + render_word(s.period(), size);
}

std::string render(const FiniteSupportPermutation& pi) {
    if (pi.is_identity()) return "()";
    std::string out;
    std::set<Index> seen;
    for (auto [start, image] : pi.mapping()) {
        if (seen.count(start) != 0) continue;
        out.push_back('(');
        Index n = start;
        do {
            if (n != start) out.push_back(' ');
            out += std::to_string(n);
            seen.insert(n);
            n = pi(n);
        } while (n != start);
        out.push_back(')');
    }
    return out;
}

std::string render(const NestedStream& x) {
    std::string out = "[";
    for (std::size_t i = 0; i < x.exceptionals().size(); ++i) {
        if (i != 0) out += "; ";
        out += render(x.exceptionals()[i]);
    }
    out += x.exceptionals().empty() ? "| " : " | ";
    out += render(x.tail());
    out.push_back(']');
    return out;
}

}  // namespace seaorder
