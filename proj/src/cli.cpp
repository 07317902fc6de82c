#include "seaorder/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "seaorder/embed.hpp"
#include "seaorder/equity.hpp"
#include "seaorder/json_io.hpp"
#include "seaorder/orders.hpp"
#include "seaorder/prelinearize.hpp"
#include "seaorder/streams.hpp"
#include "seaorder/text.hpp"

namespace seaorder::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t seed = 0;
    bool plain = false;
    bool json = false;
    bool timing = false;
    std::string dot_path;

    std::string order = "sea";
    std::string mode = "sea_laws";
    Index max_n = kDefaultMaxN;
    std::size_t samples = 1000;
    std::uint32_t alphabet = 4;
    std::size_t depth = 4;
    Index window = 4;
    std::string tie;
    std::string insert_order;

    std::vector<std::string> positional;
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--seed", opt.seed, "Random seed");
    auto* plain = cmd->add_flag("--plain", opt.plain, "Print the bare verdict");
    cmd->add_flag("--json", opt.json, "Print a JSON report (default)")->excludes(plain);
    cmd->add_flag("--timing", opt.timing, "Include elapsed time in the JSON report");
    cmd->add_option("--dot", opt.dot_path, "Write a Graphviz diagram of the result");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json load_json(const std::string& arg) {
    const std::string text = (!arg.empty() && arg.front() == '{') ? arg : read_file(arg);
    return Json::parse(text);
}

std::vector<Label> split_labels(const std::string& s) {
    std::vector<Label> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

void write_dot(const Options& opt, const Condition& c, const BasePreorder& base) {
    if (opt.dot_path.empty()) return;
    std::ofstream out(opt.dot_path);
    if (!out) throw UsageError("cannot write '" + opt.dot_path + "'");
    out << to_dot(c, base);
}

std::string join_streams(const std::vector<UtilityStream>& steps) {
    std::string s;
    for (std::size_t i = 0; i < steps.size(); ++i) s += (i ? " -> " : "") + render(steps[i]);
    return s;
}

void need_positional(const Options& opt, std::size_t lo, std::size_t hi, const char* usage) {
    if (opt.positional.size() < lo || opt.positional.size() > hi) throw UsageError(std::string("usage: ") + usage);
}

class Runner {
public:
    Runner(const Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

    void emit(Json report, const std::string& plain) {
        if (opt_.plain) {
            out_ << plain << '\n';
            return;
        }
        if (opt_.timing) {
            const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
            report["timing_ms"] = ms;
        }
        out_ << report.dump(2) << '\n';
    }

    void cmp() {
        need_positional(opt_, 2, 2, "cmp [--order O] X Y");
        OrderSpec order = parse_order_spec(opt_.order);
        order.max_n = opt_.max_n;
        const auto& p = opt_.positional;
        Comparison verdict;
        Json inputs;
        if (order.nested()) {
            const NestedStream x = nested_from_json(load_json(p[0]));
            const NestedStream y = nested_from_json(load_json(p[1]));
            verdict = evaluate(order, x, y);
            inputs = {{"x", to_json(x)}, {"y", to_json(y)}};
        } else {
            const UtilityStream x = parse_stream(p[0]);
            const UtilityStream y = parse_stream(p[1]);
            verdict = evaluate(order, x, y);
            inputs = {{"x", render(x)}, {"y", render(y)}};
        }
        inputs["order"] = to_string(order);
        emit({{"command", "cmp"}, {"inputs", inputs}, {"verdict", to_string(verdict)}}, std::string(to_string(verdict)));
    }

    void profile() {
        need_positional(opt_, 2, 2, "profile X Y [--max-n N]");
        const UtilityStream x = parse_stream(opt_.positional[0]);
        const UtilityStream y = parse_stream(opt_.positional[1]);
        const SignProfile prof = sign_profile(x, y, opt_.max_n);
        Json report = {{"command", "profile"},
                       {"inputs", {{"x", render(x)}, {"y", render(y)}, {"max_n", opt_.max_n}}}};
        report.update(to_json(prof));
        std::string plain = "preperiod=" + std::to_string(prof.preperiod) + " period=" + std::to_string(prof.period()) + " signs=";
        for (std::size_t i = 0; i < prof.signs.size(); ++i) plain += (i ? "," : "") + std::string(to_string(prof.signs[i]));
        emit(std::move(report), plain);
    }

    void audit() {
        need_positional(opt_, 0, 0, "audit [--order O] [--mode M] [--samples N] [--seed S] [--alphabet A]");
        AuditConfig cfg;
        cfg.order = parse_order_spec(opt_.order);
        cfg.order.max_n = opt_.max_n;
        cfg.mode = parse_audit_mode(opt_.mode);
        cfg.samples = opt_.samples;
        cfg.seed = opt_.seed;
        cfg.alphabet = opt_.alphabet;
        const LawReport report = audit_order(cfg);
        Json doc = {{"command", "audit"},
                    {"inputs",
                     {{"order", to_string(cfg.order)},
                      {"mode", to_string(cfg.mode)},
                      {"samples", cfg.samples},
                      {"seed", cfg.seed},
                      {"alphabet", cfg.alphabet}}}};
        doc.update(to_json(report));
        const std::string plain =
            report.violations.empty() ? "PASS" : "FAIL " + std::to_string(report.violations.size()) + " violations";
        emit(std::move(doc), plain);
    }

    void se_witness() {
        need_positional(opt_, 1, 1, "se witness X");
        const UtilityStream x = parse_stream(opt_.positional[0]);
        const UtilityStream y = seaorder::se_witness(x);
        emit({{"command", "se witness"}, {"inputs", {{"x", render(x)}}}, {"witness", render(y)}, {"is_se", is_se(x, y)}},
             render(y));
    }

    void se_reach() {
        need_positional(opt_, 2, 2, "se reach X Y [--depth D] [--window W]");
        const UtilityStream x = parse_stream(opt_.positional[0]);
        const UtilityStream y = parse_stream(opt_.positional[1]);
        const auto chain = se_reachable(x, y, {opt_.depth, opt_.window});
        Json report = {{"command", "se reach"},
                       {"inputs", {{"x", render(x)}, {"y", render(y)}, {"depth", opt_.depth}, {"window", opt_.window}}}};
        if (chain) {
            Json steps = Json::array();
            for (const auto& s : chain->steps) steps.push_back(render(s));
            report["result"] = "REACHABLE";
            report["chain"] = steps;
            emit(std::move(report), join_streams(chain->steps));
        } else {
            report["result"] = "NOT_WITHIN_BOUNDS";
            emit(std::move(report), "NOT_WITHIN_BOUNDS");
        }
    }

    void se_interp() {
        need_positional(opt_, 2, 2, "se interp X Y");
        const auto& p = opt_.positional;
        if (!p[0].empty() && p[0].front() != '{' && p[0].find(':') != std::string::npos) {
            const UtilityStream x = parse_stream(p[0]);
            const UtilityStream y = parse_stream(p[1]);
            const UtilityStream z = tranquil_interpolant(x, y);
            emit({{"command", "se interp"}, {"inputs", {{"x", render(x)}, {"y", render(y)}}}, {"interpolant", render(z)}},
                 render(z));
            return;
        }
        const NestedStream x = nested_from_json(load_json(p[0]));
        const NestedStream y = nested_from_json(load_json(p[1]));
        const NestedStream z = tranquil_interpolant(x, y);
        emit({{"command", "se interp"}, {"inputs", {{"x", to_json(x)}, {"y", to_json(y)}}}, {"interpolant", to_json(z)}},
             render(z));
    }

    void prelin_check() {
        need_positional(opt_, 2, 3, "prelin check BASE P [Q]");
        const auto& p = opt_.positional;
        const BasePreorder base = base_from_json(load_json(p[0]));
        const Condition c = condition_from_json(load_json(p[1]));
        if (p.size() == 2) {
            const bool ok = validate_condition(c, base);
            write_dot(opt_, c, base);
            emit({{"command", "prelin check"}, {"inputs", {{"p", to_json(c)}}}, {"verdict", ok ? "VALID" : "INVALID"}},
                 ok ? "VALID" : "INVALID");
            return;
        }
        const Condition q = condition_from_json(load_json(p[2]));
        const Compatibility verdict = compatible(c, q, base);
        Json report = {{"command", "prelin check"}, {"inputs", {{"p", to_json(c)}, {"q", to_json(q)}}}};
        if (verdict.compatible) {
            report["verdict"] = "COMPATIBLE";
            emit(std::move(report), "COMPATIBLE");
            return;
        }
        report["verdict"] = "INCOMPATIBLE";
        report["cycle"] = to_json(verdict.cycle);
        std::string plain = "INCOMPATIBLE";
        for (std::size_t i = 0; i < verdict.cycle.size(); ++i) {
            plain += (i ? " -> " : " ") + verdict.cycle[i].from;
        }
        if (!verdict.cycle.empty()) plain += " -> " + verdict.cycle.front().from;
        emit(std::move(report), plain);
    }

    void emit_condition(const char* command, const Condition& c, const BasePreorder& base, Json inputs) {
        write_dot(opt_, c, base);
        std::string plain;
        for (const auto& block : c.blocks()) {
            plain += plain.empty() ? "" : " < ";
            for (std::size_t i = 0; i < block.size(); ++i) plain += (i ? " ~ " : "") + block[i];
        }
        emit({{"command", command}, {"inputs", std::move(inputs)}, {"condition", to_json(c)}}, plain);
    }

    void prelin_extend() {
        need_positional(opt_, 3, 3, "prelin extend BASE C ELEMENT [--tie a,b,...]");
        const auto& p = opt_.positional;
        const BasePreorder base = base_from_json(load_json(p[0]));
        const Condition c = condition_from_json(load_json(p[1]));
        emit_condition("prelin extend", insert_element(c, base, p[2], split_labels(opt_.tie)), base,
                       {{"condition", to_json(c)}, {"element", p[2]}});
    }

    void prelin_join() {
        need_positional(opt_, 3, 3, "prelin join BASE P Q [--tie a,b,...]");
        const auto& p = opt_.positional;
        const BasePreorder base = base_from_json(load_json(p[0]));
        const Condition a = condition_from_json(load_json(p[1]));
        const Condition b = condition_from_json(load_json(p[2]));
        emit_condition("prelin join", common_extension(a, b, base, split_labels(opt_.tie)), base,
                       {{"p", to_json(a)}, {"q", to_json(b)}});
    }

    void prelin_linearize() {
        need_positional(opt_, 1, 2, "prelin linearize BASE [START] [--insert-order a,b,...] [--tie a,b,...]");
        const auto& p = opt_.positional;
        const BasePreorder base = base_from_json(load_json(p[0]));
        const Condition start = p.size() > 1 ? condition_from_json(load_json(p[1])) : Condition{};
        emit_condition("prelin linearize", linearize(base, start, split_labels(opt_.insert_order), split_labels(opt_.tie)),
                       base, {{"start", to_json(start)}});
    }

    void embed() {
        need_positional(opt_, 1, 1, "embed ORDER_JSON");
        const LinearOrderDoc doc = linear_order_from_json(load_json(opt_.positional[0]));
        std::map<Label, std::size_t> rank;
        for (std::size_t i = 0; i < doc.order.size(); ++i) rank[doc.order[i]] = i;
        const EmbedState state = embed_all(doc.elements, [&](const Label& a, const Label& b) {
            return from_ordering(rank.at(a) <=> rank.at(b));
        });
        std::string plain;
        for (const auto& l : state.ordered()) plain += l + " " + state.code(l).bits() + "\n";
        if (!plain.empty()) plain.pop_back();
        emit({{"command", "embed"}, {"inputs", {{"elements", doc.elements}, {"order", doc.order}}}, {"codes", to_json(state)}},
             plain);
    }

private:
    const Options& opt_;
    std::ostream& out_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Computable social welfare orders and prelinearization conditions", "seaorder"};
    app.require_subcommand(1);
    Options opt;

    auto* cmp = app.add_subcommand("cmp", "Compare two streams under an order");
    cmp->add_option("--order", opt.order, "sea | sea-nested | prefix:<n> | ultra:<m>,<r>");
    cmp->add_option("--max-n", opt.max_n, "Prefix lengths scanned for ultra orders");
    cmp->add_option("streams", opt.positional, "Two streams (or nested-stream JSON for sea-nested)");

    auto* profile = app.add_subcommand("profile", "Tabulate sorted-prefix verdicts across prefix lengths");
    profile->add_option("--max-n", opt.max_n, "Largest prefix length examined");
    profile->add_option("streams", opt.positional, "Two streams");

    auto* audit = app.add_subcommand("audit", "Audit an order against the SEA or weak-prelinearization laws");
    audit->add_option("--order", opt.order, "sea | sea-nested | prefix:<n> | ultra:<m>,<r>");
    audit->add_option("--mode", opt.mode, "sea_laws | weak_prelin");
    audit->add_option("--samples", opt.samples, "Sample count");
    audit->add_option("--alphabet", opt.alphabet, "Alphabet size for flat streams");
    audit->add_option("--max-n", opt.max_n, "Prefix lengths scanned for ultra orders");

    auto* se = app.add_subcommand("se", "Strong-equity tools");
    se->require_subcommand(1);
    auto* se_witness = se->add_subcommand("witness", "Map a [0,0,3,3] stream to its [0,1,2,3] SE successor");
    se_witness->add_option("stream", opt.positional, "Stream");
    auto* se_reach = se->add_subcommand("reach", "Search for a chain of SE steps");
    se_reach->add_option("streams", opt.positional, "Two streams");
    se_reach->add_option("--depth", opt.depth, "Maximum number of SE steps");
    se_reach->add_option("--window", opt.window, "Coordinates 0..window-1 may change");
    auto* se_interp = se->add_subcommand("interp", "Finite-support interpolant of two finitely differing points");
    se_interp->add_option("points", opt.positional, "Two streams, or two nested-stream JSON documents");

    auto* prelin = app.add_subcommand("prelin", "Prelinearization conditions");
    prelin->require_subcommand(1);
    auto* check = prelin->add_subcommand("check", "Validate one condition or test two for compatibility");
    check->add_option("files", opt.positional, "BASE P [Q]");
    auto* extend = prelin->add_subcommand("extend", "Insert one element into a condition");
    extend->add_option("args", opt.positional, "BASE C ELEMENT");
    extend->add_option("--tie", opt.tie, "Tie-break label order, comma separated");
    auto* join = prelin->add_subcommand("join", "Common extension of two compatible conditions");
    join->add_option("files", opt.positional, "BASE P Q");
    join->add_option("--tie", opt.tie, "Tie-break label order, comma separated");
    auto* linearize_cmd = prelin->add_subcommand("linearize", "Extend a condition to the whole base");
    linearize_cmd->add_option("files", opt.positional, "BASE [START]");
    linearize_cmd->add_option("--insert-order", opt.insert_order, "Insertion order, comma separated");
    linearize_cmd->add_option("--tie", opt.tie, "Tie-break label order, comma separated");

    auto* embed = app.add_subcommand("embed", "Embed a finite linear order into the dyadic rationals");
    embed->add_option("order", opt.positional, "Linear order JSON (file or inline)");

    for (auto* cmd : {cmp, profile, audit, se_witness, se_reach, se_interp, check, extend, join, linearize_cmd, embed}) {
        add_common(cmd, opt);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    Runner runner(opt, out);
    try {
        if (cmp->parsed()) runner.cmp();
        else if (profile->parsed()) runner.profile();
        else if (audit->parsed()) runner.audit();
        else if (se_witness->parsed()) runner.se_witness();
        else if (se_reach->parsed()) runner.se_reach();
        else if (se_interp->parsed()) runner.se_interp();
        else if (check->parsed()) runner.prelin_check();
        else if (extend->parsed()) runner.prelin_extend();
        else if (join->parsed()) runner.prelin_join();
        else if (linearize_cmd->parsed()) runner.prelin_linearize();
        else if (embed->parsed()) runner.embed();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Json::exception& e) {
        err << "error: malformed JSON: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return e.code() == ErrorCode::InvalidArgument ? kExitUsage : kExitDomain;
    }
    return kExitOk;
}

}  // namespace seaorder::cli
