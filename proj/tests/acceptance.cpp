// One PASS/FAIL line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "seaorder/embed.hpp"
#include "seaorder/equity.hpp"
#include "seaorder/generators.hpp"
#include "seaorder/orders.hpp"
#include "seaorder/prelinearize.hpp"
#include "seaorder/streams.hpp"
#include "seaorder/text.hpp"

using namespace seaorder;

namespace {

constexpr double kBudgetSeconds = 60.0;

// Collects failure descriptions; a criterion passes when none were recorded.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        if (failures_.size() < 5) failures_.push_back(what);
        ++failed_;
    }

    std::size_t checks() const { return checks_; }
    std::size_t failed() const { return failed_; }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::size_t checks_ = 0;
    std::size_t failed_ = 0;
    std::vector<std::string> failures_;
};

bool run_criterion(int id, const std::string& title, const std::function<void(Tally&)>& body) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(tally);
    } catch (const std::exception& e) {
        tally.expect(false, std::string("unexpected exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    tally.expect(secs < kBudgetSeconds, "over the time budget");
    const bool ok = tally.failed() == 0;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << tally.checks() << " checks, "
              << std::fixed << std::setprecision(2) << secs << " s)\n";
    for (const auto& f : tally.failures()) std::cout << "      " << f << '\n';
    if (tally.failed() > tally.failures().size()) {
        std::cout << "      ... " << tally.failed() - tally.failures().size() << " more\n";
    }
    return ok;
}

std::string describe(const LawReport& r) {
    std::ostringstream os;
    for (const auto& v : r.violations) os << v.law << ' ';
    return os.str();
}

void sea_laws(Tally& t) {
    for (std::uint32_t alphabet : {4U, 8U}) {
        const auto r = audit_order({OrderSpec::sea(), AuditMode::SeaLaws, 1000, 42, alphabet});
        const std::string tag = "sea, alphabet " + std::to_string(alphabet) + ": ";
        t.expect(r.violations.empty(), tag + describe(r));
        t.expect(r.checks_run.at(law::kTransitivity) == 5000, tag + "triple count");
        t.expect(r.checks_run.at(law::kTotality) == 5000 * 3, tag + "totality count");
        t.expect(r.checks_run.at(law::kFiniteAnonymity) == 1000, tag + "anonymity count");
        t.expect(r.checks_run.at(law::kStrongEquity) == 1000, tag + "strong equity count");
    }
    const auto r = audit_order({OrderSpec::sea_nested(), AuditMode::SeaLaws, 1000, 42, 4});
    t.expect(r.violations.empty(), "sea-nested: " + describe(r));
    t.expect(r.checks_run.at(law::kTransitivity) == 5000, "sea-nested triple count");
    t.expect(r.checks_run.at(law::kFiniteAnonymity) == 1000, "sea-nested anonymity count");
    t.expect(r.checks_run.at(law::kStrongEquity) == 1000, "sea-nested strong equity count");
}

void stabilization(Tally& t) {
    Rng rng(2);
    for (int k = 0; k < 500; ++k) {
        const auto x = random_stream(rng, Alphabet(static_cast<std::uint32_t>(rng.between(2, 8))));
        const auto y = random_modification(rng, x, 12, rng.between(1, 5));
        const auto diff = difference_set(x, y);
        const Index n0 = 1 + (diff.empty() ? 0 : diff.back());
        const Comparison lim = compare_limit(x, y);
        for (Index n = n0; n <= n0 + 200; ++n) {
            t.expect(compare_prefix(x, y, n) == lim, render(x) + " vs " + render(y) + " at n=" + std::to_string(n));
        }
    }
}

void sign_profiles(Tally& t) {
    Rng rng(3);
    for (int k = 0; k < 500; ++k) {
        const Alphabet a(static_cast<std::uint32_t>(rng.between(2, 6)));
        const auto x = random_stream(rng, a);
        const auto y = rng.below(3) == 0 ? random_modification(rng, x, 8, 3) : random_stream(rng, a);
        const auto p = sign_profile(x, y, 500);
        for (Index n = 1; n <= 500; ++n) {
            t.expect(p.at(n) == compare_prefix(x, y, n), render(x) + " vs " + render(y) + " at n=" + std::to_string(n));
        }
    }
    const auto x = parse_stream("2:|01");
    const auto y = parse_stream("2:|10");
    const auto p = sign_profile(x, y, kDefaultMaxN);
    t.expect(p.preperiod == 0 && p.period() == 2, "example profile shape");
    t.expect(p.signs == std::vector<Comparison>{Comparison::Less, Comparison::Equivalent}, "example profile signs");
    t.expect(ultra_compare(x, y, ResidueSelector(2, 1)) == Comparison::Less, "selector (2,1)");
    t.expect(ultra_compare(x, y, ResidueSelector(2, 0)) == Comparison::Equivalent, "selector (2,0)");
}

void compatibility(Tally& t) {
    Rng rng(4);
    std::size_t incompatible = 0;
    for (int b = 0; b < 500; ++b) {
        const auto base = fixture::random_base(rng, rng.between(1, 7));
        for (int k = 0; k < 4; ++k) {
            const auto p = fixture::random_condition(rng, base);
            const auto q = fixture::random_condition(rng, base);
            const auto r = compatible(p, q, base);
            t.expect(r.compatible == oracle::has_common_extension(p, q, base), "verdict disagrees with enumeration");
            if (!r.compatible) {
                ++incompatible;
                t.expect(fixture::replays(r, p, q, base), "cycle does not replay");
            }
        }
    }
    t.expect(incompatible > 0, "sample produced no incompatible pairs");
}

void extensions(Tally& t) {
    Rng rng(5);
    for (int k = 0; k < 1000; ++k) {
        const auto base = fixture::random_base(rng, rng.between(1, 7));
        const auto start = fixture::random_condition(rng, base);
        auto order = base.elements();
        fixture::shuffle(rng, order);
        auto tie = base.elements();
        fixture::shuffle(rng, tie);
        const auto full = linearize(base, start, order, tie);
        t.expect(validate_condition(full, base), "linearization does not validate");
        t.expect(full.size() == base.size(), "linearization is not total");
        t.expect(extends(full, start), "linearization does not extend its start");
    }
    for (int k = 0; k < 1000; ++k) {
        const auto base = fixture::random_base(rng, rng.between(1, 7));
        std::vector<Condition> chain{fixture::random_condition(rng, base)};
        const std::size_t len = rng.between(1, 5);
        while (chain.size() < len) {
            Condition next = chain.back();
            for (std::size_t add = rng.between(1, 2); add > 0; --add) {
                next = insert_element(next, base, base.label(rng.below(base.size())));
            }
            chain.push_back(next);
        }
        const auto u = chain_union(chain);
        t.expect(validate_condition(u, base), "chain union does not validate");
        for (const auto& c : chain) t.expect(extends(u, c), "chain union does not extend a member");
    }
    std::size_t admissible = 0;
    for (int k = 0; k < 300; ++k) {
        const auto base = fixture::random_base(rng, rng.between(1, 6));
        const auto dom = fixture::random_subset(rng, base.elements());
        Schedule s;
        for (std::size_t len = rng.between(1, 4); s.period.size() < len;) {
            auto order = base.elements();
            fixture::shuffle(rng, order);
            s.period.push_back(linearize(base, {}, order, order).restrict_to(dom));
        }
        for (Index m = 1; m <= 8; ++m) {
            for (Index r = 0; r < m; ++r) {
                try {
                    const auto c = ultralimit_schedule(s, ResidueSelector(m, r), base);
                    ++admissible;
                    t.expect(validate_condition(c, base), "ultralimit does not validate");
                } catch (const Error& e) {
                    t.expect(e.code() == ErrorCode::CoarseSelector, e.what());
                }
            }
        }
    }
    t.expect(admissible > 0, "no admissible selector");
}

void embedding(Tally& t) {
    using boost::multiprecision::cpp_rational;
    Rng rng(6);
    std::map<Label, cpp_rational> value;
    std::vector<Label> labels;
    while (labels.size() < 300) {
        const cpp_rational v(static_cast<long>(rng.below(1000000)), static_cast<long>(rng.between(1, 997)));
        bool fresh = true;
        for (const auto& [l, w] : value) fresh = fresh && w != v;
        if (!fresh) continue;
        labels.push_back("q" + std::to_string(labels.size()));
        value[labels.back()] = v;
    }
    auto cmp = [&](const Label& a, const Label& b) {
        return value.at(a) < value.at(b) ? Comparison::Less
                                         : (value.at(b) < value.at(a) ? Comparison::Greater : Comparison::Equivalent);
    };
    const auto first = embed_all(labels, cmp);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            ++pairs;
            const auto& a = labels[i];
            const auto& b = labels[j];
            const auto ca = oracle::dyadic_value(first.code(a).bits());
            const auto cb = oracle::dyadic_value(first.code(b).bits());
            t.expect((value[a] < value[b]) == (ca < cb), "order not preserved for " + a + ", " + b);
        }
    }
    t.expect(pairs == 44850, "pair count");
    std::size_t depth = 0;
    for (const auto& l : labels) depth = std::max(depth, first.code(l).length());
    for (const auto& l : labels) {
        const auto lifted = dedekind_lift(first, [&](const Label& o) { return !(value[l] < value[o]); }, depth);
        t.expect(lifted == first.code(l).expansion(depth), "lift of " + l);
    }
    auto shuffled = labels;
    fixture::shuffle(rng, shuffled);
    const auto second = embed_all(shuffled, cmp);
    t.expect(second.ordered() == first.ordered(), "insertion orders give different order types");
    for (std::size_t i = 0; i + 1 < labels.size(); ++i) {
        const auto& lo = second.ordered()[i];
        const auto& hi = second.ordered()[i + 1];
        t.expect(second.code(lo) < second.code(hi), "second assignment not increasing");
    }
}

void se_machinery(Tally& t) {
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        const Alphabet a(static_cast<std::uint32_t>(rng.between(4, 8)));
        Word pre{0, 0, 3, 3};
        for (std::size_t i = rng.below(5); i > 0; --i) pre.push_back(static_cast<Symbol>(rng.below(a.size())));
        Word per;
        for (std::size_t i = rng.between(1, 4); i > 0; --i) per.push_back(static_cast<Symbol>(rng.below(a.size())));
        const auto x = normalize(StreamParts{a, pre, per});
        const auto y = se_witness(x);
        const std::string tag = render(x);
        t.expect(y.at(0) == 0 && y.at(1) == 1 && y.at(2) == 2 && y.at(3) == 3, tag + " not mapped into [0,1,2,3]");
        t.expect(is_se(x, y), tag + " witness is not an SE step");
        for (Index n = 4; n < 4 + pre.size() + 3 * per.size(); ++n) t.expect(x.at(n) == y.at(n), tag + " tail changed");
    }

    const auto from = parse_stream("4:0303|0");
    const auto to = parse_stream("4:1212|0");
    const auto chain = se_reachable(from, to, {2, 4});
    t.expect(chain.has_value() && chain->steps.size() == 3, "chain not found at depth 2");
    if (chain) {
        for (std::size_t k = 0; k + 1 < chain->steps.size(); ++k) {
            t.expect(is_se(chain->steps[k], chain->steps[k + 1]), "chain step is not SE");
        }
    }
    t.expect(!se_reachable(to, from, {4, 4}).has_value(), "reverse chain reported reachable");

    std::vector<UtilityStream> tails;
    for (int k = 0; k < 4; ++k) tails.push_back(random_stream(rng, kBinary));
    for (int k = 0; k < 200; ++k) {
        const auto x = random_nested(rng, {tails[rng.below(tails.size())]});
        NestedStream y = x;
        for (std::size_t c = rng.between(1, 3); c > 0; --c) y = y.with_coordinate(rng.below(5), random_stream(rng, kBinary));
        const auto z = tranquil_interpolant(x, y);
        const auto diff = difference_set(x, y);
        for (Index n = 0; n < 8; ++n) {
            const bool differs = std::find(diff.begin(), diff.end(), n) != diff.end();
            if (!differs) {
                t.expect(z.at(n) == x.at(n), "interpolant moved a shared coordinate");
                continue;
            }
            const auto& lo = oracle::lex(x.at(n), y.at(n)) < 0 ? x.at(n) : y.at(n);
            const auto& hi = oracle::lex(x.at(n), y.at(n)) < 0 ? y.at(n) : x.at(n);
            t.expect(oracle::lex(lo, z.at(n)) <= 0 && oracle::lex(z.at(n), hi) <= 0, "interpolant outside interval");
            t.expect(z.at(n).has_finite_support(), "interpolant value without finite support");
        }
        t.expect(nested_e1_equal(z, x), "interpolant left the class");
    }
}

void negative_control(Tally& t) {
    const AuditConfig cfg{OrderSpec::prefix(3), AuditMode::SeaLaws, 1000, 42, 4};
    const auto r = audit_order(cfg);
    t.expect(r.violation_count(law::kFiniteAnonymity) > 0, "no finite-anonymity violation found");
    for (const auto& v : r.violations) {
        if (v.law == law::kFiniteAnonymity) t.expect(replay(cfg.order, v), "witness does not replay");
    }
}

}  // namespace

int main() {
    bool ok = true;
    ok &= run_criterion(1, "SEA laws for the class-then-limit orders", sea_laws);
    ok &= run_criterion(2, "prefix orders stabilize past the difference set", stabilization);
    ok &= run_criterion(3, "sign profiles are sound", sign_profiles);
    ok &= run_criterion(4, "compatibility matches exhaustive enumeration", compatibility);
    ok &= run_criterion(5, "linearizations, chain unions and ultralimits validate", extensions);
    ok &= run_criterion(6, "dyadic embedding preserves order", embedding);
    ok &= run_criterion(7, "strong-equity witness, chains and interpolants", se_machinery);
    ok &= run_criterion(8, "negative control on a prefix order", negative_control);
    return ok ? 0 : 1;
}
