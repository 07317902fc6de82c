#pragma once

// The strong-equity relation, bounded search for its transitive closure,
// the cylinder witness map, finite-support interpolants, and a seeded
// audit of order laws.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seaorder/orders.hpp"
#include "seaorder/streams.hpp"

namespace seaorder {

// x SE y: x, y agree off {i, j} and x(i) < y(i) < y(j) < x(j).
bool is_se(const UtilityStream& x, const UtilityStream& y);
bool is_se(const NestedStream& x, const NestedStream& y);

// Rewrites the leading (0,0,3,3) to (0,1,2,3). Throws NotInCylinderU.
UtilityStream se_witness(const UtilityStream& x);

struct ChainCertificate {
    std::vector<UtilityStream> steps;
};

struct ReachConfig {
    std::size_t max_depth = 4;
    Index window = 4;
};

// Shortest SE chain from x to y changing only coordinates below the window,
// or nullopt when none exists within max_depth steps. A chain of length 1
// is returned for x == y.
std::optional<ChainCertificate> se_reachable(const UtilityStream& x, const UtilityStream& y, const ReachConfig& cfg);

// A point weakly between x and y at every coordinate, equal to x off the
// (finite) difference set. Nested coordinates get finite-support values.
UtilityStream tranquil_interpolant(const UtilityStream& x, const UtilityStream& y);
NestedStream tranquil_interpolant(const NestedStream& x, const NestedStream& y);

struct OrderSpec {
    enum class Kind { Sea, SeaNested, Prefix, Ultra };

    Kind kind = Kind::Sea;
    Index prefix_length = 0;  // Prefix
    std::optional<ResidueSelector> selector;  // Ultra
    Index max_n = kDefaultMaxN;  // Ultra

    static OrderSpec sea() { return {}; }
    static OrderSpec sea_nested() { return {Kind::SeaNested, 0, std::nullopt}; }
    static OrderSpec prefix(Index n) { return {Kind::Prefix, n, std::nullopt}; }
    static OrderSpec ultra(ResidueSelector sel, Index max_n = kDefaultMaxN) { return {Kind::Ultra, 0, sel, max_n}; }

    bool nested() const noexcept { return kind == Kind::SeaNested; }
};

// "sea" | "sea-nested" | "prefix:<n>" | "ultra:<m>,<r>"
OrderSpec parse_order_spec(const std::string& text);
std::string to_string(const OrderSpec& order);

Comparison evaluate(const OrderSpec& order, const UtilityStream& x, const UtilityStream& y);
Comparison evaluate(const OrderSpec& order, const NestedStream& x, const NestedStream& y);

enum class AuditMode { SeaLaws, WeakPrelin };

std::string_view to_string(AuditMode mode);
AuditMode parse_audit_mode(const std::string& text);

struct AuditConfig {
    OrderSpec order;
    AuditMode mode = AuditMode::SeaLaws;
    std::size_t samples = 1000;
    std::uint64_t seed = 0;
    std::uint32_t alphabet = 4;  // ignored for nested orders
};

using WitnessValue = std::variant<UtilityStream, NestedStream, FiniteSupportPermutation>;

namespace law {
inline constexpr const char* kTotality = "totality";
inline constexpr const char* kTransitivity = "transitivity";
inline constexpr const char* kFiniteAnonymity = "finite_anonymity";
inline constexpr const char* kStrongEquity = "strong_equity";
inline constexpr const char* kBaseInclusion = "base_inclusion";
inline constexpr const char* kStrictInclusion = "strict_inclusion";
inline constexpr const char* kUndecided = "undecided";
}  // namespace law

struct Violation {
    std::string law;
    std::vector<WitnessValue> witness;
};

struct LawReport {
    std::map<std::string, std::size_t> checks_run;
    std::vector<Violation> violations;

    std::size_t violation_count(const std::string& law) const;
};

LawReport audit_order(const AuditConfig& cfg);

// Re-evaluates a violation against the order; true iff the law still fails.
bool replay(const OrderSpec& order, const Violation& v);

}  // namespace seaorder
