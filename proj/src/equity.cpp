#include "seaorder/equity.hpp"

#include <algorithm>
#include <charconv>

#include "seaorder/generators.hpp"

namespace seaorder {

namespace {

template <class Less>
bool compresses(const auto& xi, const auto& yi, const auto& yj, const auto& xj, Less less) {
    return less(xi, yi) && less(yi, yj) && less(yj, xj);
}

// Stream equal to x beyond the window and to `window` below it.
UtilityStream splice(const UtilityStream& x, const Word& window) {
    const Index cut = std::max<Index>(window.size(), x.preperiod().size());
    StreamParts parts{x.alphabet(), window, {}};
    for (Index n = window.size(); n < cut; ++n) parts.preperiod.push_back(x.at(n));
    for (Index n = cut; n < cut + x.period().size(); ++n) parts.period.push_back(x.at(n));
    return normalize(parts);
}

}  // namespace

bool is_se(const UtilityStream& x, const UtilityStream& y) {
    if (x.alphabet() != y.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "streams over different alphabets");
    if (!tail_equal(x, y)) return false;
    const auto diff = difference_set(x, y);
    if (diff.size() != 2) return false;
    const Index i = diff[0];
    const Index j = diff[1];
    const auto less = std::less<Symbol>{};
    return compresses(x.at(i), y.at(i), y.at(j), x.at(j), less) ||
           compresses(x.at(j), y.at(j), y.at(i), x.at(i), less);
}

bool is_se(const NestedStream& x, const NestedStream& y) {
    if (!nested_e1_equal(x, y)) return false;
    const auto diff = difference_set(x, y);
    if (diff.size() != 2) return false;
    const Index i = diff[0];
    const Index j = diff[1];
    const auto less = [](const UtilityStream& a, const UtilityStream& b) { return lex_compare(a, b) < 0; };
    return compresses(x.at(i), y.at(i), y.at(j), x.at(j), less) ||
           compresses(x.at(j), y.at(j), y.at(i), x.at(i), less);
}

UtilityStream se_witness(const UtilityStream& x) {
    static constexpr Symbol kCylinderU[] = {0, 0, 3, 3};
    for (Index n = 0; n < 4; ++n) {
        if (x.at(n) != kCylinderU[n]) throw Error(ErrorCode::NotInCylinderU, "stream does not start with 0,0,3,3");
    }
    return with_coordinate(with_coordinate(x, 1, 1), 2, 2);
}

std::optional<ChainCertificate> se_reachable(const UtilityStream& x, const UtilityStream& y, const ReachConfig& cfg) {
    if (x.alphabet() != y.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "streams over different alphabets");
    if (cfg.max_depth == 0 || cfg.window == 0) throw Error(ErrorCode::InvalidArgument, "depth and window must be positive");
    if (!tail_equal(x, y)) throw Error(ErrorCode::WindowTooSmall, "streams differ at infinitely many coordinates");
    const auto diff = difference_set(x, y);
    if (!diff.empty() && diff.back() >= cfg.window) {
        throw Error(ErrorCode::WindowTooSmall, "streams differ at coordinate " + std::to_string(diff.back()));
    }
    if (diff.empty()) return ChainCertificate{{x}};

    const std::size_t w = cfg.window;
    Word start(w);
    Word goal(w);
    for (std::size_t n = 0; n < w; ++n) {
        start[n] = x.at(n);
        goal[n] = y.at(n);
    }

    std::map<Word, Word> parent{{start, start}};
    std::vector<Word> frontier{start};
    for (std::size_t depth = 0; depth < cfg.max_depth && !frontier.empty(); ++depth) {
        std::vector<Word> next;
        for (const Word& s : frontier) {
            for (std::size_t i = 0; i < w; ++i) {
                for (std::size_t j = 0; j < w; ++j) {
                    if (i == j || s[i] + 2 >= s[j]) continue;
                    for (Symbol a = s[i] + 1; a + 1 < s[j]; ++a) {
                        for (Symbol b = a + 1; b < s[j]; ++b) {
                            Word t = s;
                            t[i] = a;
                            t[j] = b;
                            if (!parent.emplace(t, s).second) continue;
                            if (t == goal) {
                                std::vector<UtilityStream> steps;
                                for (Word cur = t;; cur = parent.at(cur)) {
                                    steps.push_back(splice(x, cur));
                                    if (cur == start) break;
                                }
                                std::reverse(steps.begin(), steps.end());
                                return ChainCertificate{std::move(steps)};
                            }
                            next.push_back(std::move(t));
                        }
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return std::nullopt;
}

UtilityStream tranquil_interpolant(const UtilityStream& x, const UtilityStream& y) {
    if (x.alphabet() != y.alphabet()) throw Error(ErrorCode::AlphabetMismatch, "streams over different alphabets");
    if (!tail_equal(x, y)) throw Error(ErrorCode::InfiniteDifference, "streams differ at infinitely many coordinates");
    // Scalar coordinates admit no finite-support refinement; the lower value
    // is the interpolant.
    UtilityStream z = x;
    for (Index n : difference_set(x, y)) z = with_coordinate(z, n, std::min(x.at(n), y.at(n)));
    return z;
}

NestedStream tranquil_interpolant(const NestedStream& x, const NestedStream& y) {
    if (!nested_e1_equal(x, y)) throw Error(ErrorCode::InfiniteDifference, "nested tails differ");
    NestedStream z = x;
    for (Index n : difference_set(x, y)) {
        const UtilityStream* lo = &x.at(n);
        const UtilityStream* hi = &y.at(n);
        if (lex_compare(*lo, *hi) > 0) std::swap(lo, hi);
        // A lex-consecutive pair w01^ω < w10^ω has no point strictly between;
        // its upper end is the finite-support one.
        const Between mid = dyadic_between(*lo, *hi);
        z = z.with_coordinate(n, mid.flag == BetweenFlag::Strict ? mid.value : *hi);
    }
    return z;
}

OrderSpec parse_order_spec(const std::string& text) {
    auto number = [&](std::string_view s) {
        Index v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
            throw Error(ErrorCode::InvalidArgument, "bad number in order '" + text + "'");
        }
        return v;
    };
    if (text == "sea") return OrderSpec::sea();
    if (text == "sea-nested" || text == "sea_nested") return OrderSpec::sea_nested();
    if (text.rfind("prefix:", 0) == 0) return OrderSpec::prefix(number(std::string_view(text).substr(7)));
    if (text.rfind("ultra:", 0) == 0) {
        const std::string_view rest = std::string_view(text).substr(6);
        const auto comma = rest.find(',');
        if (comma == std::string_view::npos) throw Error(ErrorCode::InvalidArgument, "ultra order needs <m>,<r>");
        return OrderSpec::ultra(ResidueSelector(number(rest.substr(0, comma)), number(rest.substr(comma + 1))));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown order '" + text + "'");
}

std::string to_string(const OrderSpec& order) {
    switch (order.kind) {
        case OrderSpec::Kind::Sea: return "sea";
        case OrderSpec::Kind::SeaNested: return "sea-nested";
        case OrderSpec::Kind::Prefix: return "prefix:" + std::to_string(order.prefix_length);
        case OrderSpec::Kind::Ultra:
            return "ultra:" + std::to_string(order.selector->modulus()) + "," + std::to_string(order.selector->residue());
    }
    return "?";
}

Comparison evaluate(const OrderSpec& order, const UtilityStream& x, const UtilityStream& y) {
    switch (order.kind) {
        case OrderSpec::Kind::Sea: return compare_sea(x, y);
        case OrderSpec::Kind::Prefix: return compare_prefix(x, y, order.prefix_length);
        case OrderSpec::Kind::Ultra: return ultra_compare(x, y, *order.selector, order.max_n);
        case OrderSpec::Kind::SeaNested: break;
    }
    throw Error(ErrorCode::InvalidArgument, "order " + to_string(order) + " does not act on flat streams");
}

Comparison evaluate(const OrderSpec& order, const NestedStream& x, const NestedStream& y) {
    if (order.kind != OrderSpec::Kind::SeaNested) {
        throw Error(ErrorCode::InvalidArgument, "order " + to_string(order) + " does not act on nested streams");
    }
    return compare_sea_nested(x, y);
}

std::string_view to_string(AuditMode mode) { return mode == AuditMode::SeaLaws ? "sea_laws" : "weak_prelin"; }

AuditMode parse_audit_mode(const std::string& text) {
    if (text == "sea_laws" || text == "sea-laws") return AuditMode::SeaLaws;
    if (text == "weak_prelin" || text == "weak-prelin") return AuditMode::WeakPrelin;
    throw Error(ErrorCode::InvalidArgument, "unknown audit mode '" + text + "'");
}

std::size_t LawReport::violation_count(const std::string& law) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.law == law; }));
}

namespace {

// Each law check returns true when the law fails on the given witness.
template <class S>
struct Laws {
    const OrderSpec& order;

    Comparison cmp(const S& x, const S& y) const { return evaluate(order, x, y); }

    bool totality(const S& x, const S& y) const { return cmp(x, y) != mirror(cmp(y, x)); }

    bool transitivity(const S& x, const S& y, const S& z) const {
        return weakly_below(cmp(x, y)) && weakly_below(cmp(y, z)) && !weakly_below(cmp(x, z));
    }

    bool finite_anonymity(const S& x, const FiniteSupportPermutation& pi) const {
        return cmp(x, permute(x, pi)) != Comparison::Equivalent;
    }

    bool strict_below(const S& x, const S& y) const { return cmp(x, y) != Comparison::Less; }

    bool weak_below(const S& x, const S& y) const { return !weakly_below(cmp(x, y)); }
};

template <class S>
bool replay_as(const OrderSpec& order, const Violation& v) {
    const Laws<S> laws{order};
    const auto& w = v.witness;
    auto s = [&](std::size_t k) -> const S& { return std::get<S>(w.at(k)); };
    if (v.law == law::kTotality) return laws.totality(s(0), s(1));
    if (v.law == law::kTransitivity) return laws.transitivity(s(0), s(1), s(2));
    if (v.law == law::kFiniteAnonymity) return laws.finite_anonymity(s(0), std::get<FiniteSupportPermutation>(w.at(1)));
    if (v.law == law::kStrongEquity || v.law == law::kStrictInclusion) return laws.strict_below(s(0), s(1));
    if (v.law == law::kBaseInclusion) return laws.weak_below(s(0), s(1));
    if (v.law == law::kUndecided) {
        try {
            laws.totality(s(0), s(1));
            return false;
        } catch (const Error&) {
            return true;
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown law '" + v.law + "'");
}

constexpr Index kModificationWindow = 6;
constexpr Index kPermutationRange = 10;
constexpr std::size_t kMaxPermutationSupport = 6;
constexpr Index kSeWindow = 8;
constexpr std::size_t kMaxChainSteps = 5;

// Stream-kind specific sampling.
struct FlatSampler {
    Rng& rng;
    Alphabet alphabet;
    std::vector<UtilityStream> pool;

    FlatSampler(Rng& r, Alphabet a, std::size_t n) : rng(r), alphabet(a) {
        for (std::size_t i = 0; i < n; ++i) {
            if (i > 0 && rng.below(4) == 0) {
                pool.push_back(random_modification(rng, pool[rng.below(i)], kModificationWindow, rng.between(1, 3)));
            } else {
                pool.push_back(random_stream(rng, alphabet));
            }
        }
    }

    const UtilityStream& pick() { return pool[rng.below(pool.size())]; }

    UtilityStream near(const UtilityStream& base) {
        return random_modification(rng, base, kModificationWindow, rng.between(1, 3));
    }

    std::pair<UtilityStream, UtilityStream> se_pair(const UtilityStream& base) {
        return random_se_pair(rng, base, kSeWindow);
    }

    std::optional<UtilityStream> se_step(const UtilityStream& x) { return random_se_step(rng, x, kSeWindow); }
};

struct NestedSampler {
    Rng& rng;
    std::vector<UtilityStream> tails;
    std::vector<NestedStream> pool;

    NestedSampler(Rng& r, std::size_t n) : rng(r) {
        // A small tail pool so that many sampled pairs share an E₁ class.
        const std::size_t tail_count = std::max<std::size_t>(3, n / 100);
        for (std::size_t i = 0; i < tail_count; ++i) tails.push_back(random_stream(rng, kBinary));
        for (std::size_t i = 0; i < n; ++i) pool.push_back(random_nested(rng, tails));
    }

    const NestedStream& pick() { return pool[rng.below(pool.size())]; }

    NestedStream near(const NestedStream& base) {
        NestedStream out = base;
        const std::size_t changes = rng.between(1, 3);
        for (std::size_t c = 0; c < changes; ++c) {
            const Index n = rng.below(kModificationWindow);
            // Half the time reuse another coordinate's value so multisets can coincide.
            const UtilityStream v = rng.coin() ? out.at(rng.below(kModificationWindow)) : random_stream(rng, kBinary);
            out = out.with_coordinate(n, v);
        }
        return out;
    }

    std::pair<NestedStream, NestedStream> se_pair(const NestedStream& base) {
        for (;;) {
            if (auto p = random_se_pair(rng, base, kSeWindow)) return *p;
        }
    }

    std::optional<NestedStream> se_step(const NestedStream& x) { return random_se_step(rng, x, kSeWindow); }
};

template <class S, class Sampler>
LawReport run_audit(const AuditConfig& cfg, Sampler& sampler) {
    LawReport report;
    const Laws<S> laws{cfg.order};
    Rng& rng = sampler.rng;

    // `compared` is the stream pair whose evaluation could throw; an
    // undecided verdict is reported against it.
    auto check = [&](const char* name, std::vector<WitnessValue> witness, std::pair<S, S> compared, auto&& fails) {
        ++report.checks_run[name];
        try {
            if (fails()) report.violations.push_back({name, std::move(witness)});
        } catch (const Error&) {
            ++report.checks_run[law::kUndecided];
            report.violations.push_back({law::kUndecided, {std::move(compared.first), std::move(compared.second)}});
        }
    };

    if (cfg.mode == AuditMode::SeaLaws) {
        for (std::size_t t = 0; t < 5 * cfg.samples; ++t) {
            const S base = sampler.pick();
            auto member = [&]() -> S { return rng.coin() ? sampler.pick() : sampler.near(base); };
            const S x = member();
            const S y = member();
            const S z = member();
            for (auto [a, b] : {std::pair{&x, &y}, std::pair{&y, &z}, std::pair{&x, &z}}) {
                check(law::kTotality, {*a, *b}, {*a, *b}, [&] { return laws.totality(*a, *b); });
            }
            // Every orientation of the triple; report the first failing one.
            const S* v[3] = {&x, &y, &z};
            int perm[3] = {0, 1, 2};
            bool reported = false;
            ++report.checks_run[law::kTransitivity];
            try {
                do {
                    const S& a = *v[perm[0]];
                    const S& b = *v[perm[1]];
                    const S& c = *v[perm[2]];
                    if (!reported && laws.transitivity(a, b, c)) {
                        report.violations.push_back({law::kTransitivity, {a, b, c}});
                        reported = true;
                    }
                } while (std::next_permutation(perm, perm + 3));
            } catch (const Error&) {
                // Undecided verdicts are reported by the totality check.
            }
        }
        for (std::size_t t = 0; t < cfg.samples; ++t) {
            const S x = sampler.pick();
            const auto pi = random_permutation(rng, kMaxPermutationSupport, kPermutationRange);
            check(law::kFiniteAnonymity, {x, pi}, {x, permute(x, pi)}, [&] { return laws.finite_anonymity(x, pi); });
        }
        for (std::size_t t = 0; t < cfg.samples; ++t) {
            const auto [x, y] = sampler.se_pair(sampler.pick());
            check(law::kStrongEquity, {x, y}, {x, y}, [&] { return laws.strict_below(x, y); });
        }
    } else {
        for (std::size_t t = 0; t < cfg.samples; ++t) {
            auto [first, second] = sampler.se_pair(sampler.pick());
            std::vector<S> chain{first, second};
            const std::size_t extra = rng.below(kMaxChainSteps - 1);
            for (std::size_t k = 0; k < extra; ++k) {
                auto next = sampler.se_step(chain.back());
                if (!next) break;
                chain.push_back(std::move(*next));
            }
            for (std::size_t i = 0; i < chain.size(); ++i) {
                for (std::size_t j = i; j < chain.size(); ++j) {
                    const S& a = chain[i];
                    const S& b = chain[j];
                    check(law::kBaseInclusion, {a, b}, {a, b}, [&] { return laws.weak_below(a, b); });
                    if (i < j) check(law::kStrictInclusion, {a, b}, {a, b}, [&] { return laws.strict_below(a, b); });
                }
            }
        }
    }
    return report;
}

}  // namespace

LawReport audit_order(const AuditConfig& cfg) {
    if (cfg.samples == 0) throw Error(ErrorCode::InvalidArgument, "samples must be at least 1");
    Rng rng(cfg.seed);
    if (cfg.order.nested()) {
        NestedSampler sampler(rng, cfg.samples);
        return run_audit<NestedStream>(cfg, sampler);
    }
    if (cfg.alphabet < 4) throw Error(ErrorCode::InvalidArgument, "audits need an alphabet of at least 4 symbols");
    FlatSampler sampler(rng, Alphabet(cfg.alphabet), cfg.samples);
    return run_audit<UtilityStream>(cfg, sampler);
}

bool replay(const OrderSpec& order, const Violation& v) {
    if (order.nested()) return replay_as<NestedStream>(order, v);
    return replay_as<UtilityStream>(order, v);
}

}  // namespace seaorder
