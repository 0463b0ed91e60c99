// Command-line front end: parse/ground/transform/solve/verify/diagnose with
// deterministic, machine-readable output.
//
// Exit codes: 0 ok, 1 check failure, 2 parse error, 3 cap exceeded,
// 4 precondition violation.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fixlog/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitPrecondition = 4;

std::uint64_t fnv1a(std::string_view data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw fixlog::precondition_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string file;
    int bound = 0;
    std::uint64_t cap = fixlog::kDefaultInterpCap;
    std::uint64_t pair_cap = 1u << 24;
    std::uint64_t seed = 0;
    bool json_output = false;
};

fixlog::GroundProgram load_ground(const Options& opt) {
    std::string text = read_file(opt.file);
    fixlog::Program p = fixlog::parse_program(text);
    fixlog::GroundProgram g = fixlog::ground_program(p, opt.bound);
    for (const std::string& w : g.warnings) std::cerr << "warning: " << w << "\n";
    return g;
}

void emit_header(const Options& opt, const std::string& command, const std::string& digest_input) {
    std::ostringstream digest;
    digest << std::hex << fnv1a(digest_input);
    if (opt.json_output) {
        json h;
        h["record"] = "header";
        h["cmd"] = command;
        h["digest"] = digest.str();
        std::cout << h.dump() << "\n";
    } else {
        std::cout << "# cmd: " << command << "\n# digest: " << digest.str() << "\n";
    }
}

std::vector<std::string> model_names(const fixlog::Interpretation& i,
                                     const fixlog::AtomEnumeration& e) {
    std::vector<std::string> names;
    for (fixlog::AtomIndex a : i.members()) names.push_back(e.name(a));
    std::sort(names.begin(), names.end());
    return names;
}

fixlog::Interpretation parse_interp(const std::string& list, const fixlog::AtomEnumeration& e) {
    fixlog::Interpretation i(e.size());
    if (list.empty() || list == "empty") return i;
    if (list == "full") return fixlog::Interpretation::full(e.size());
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto idx = e.find(name);
        if (!idx)
            throw fixlog::precondition_error("atom '" + name + "' is not in the program base");
        i.add(*idx);
    }
    return i;
}

// ---------------------------------------------------------------- fixcomp

int cmd_fixcomp(const Options& opt, bool subsume) {
    fixlog::GroundProgram g = load_ground(opt);
    fixlog::FixpointCompletion fix = fixlog::fixpoint_completion(g);
    if (subsume) {
        // display normalization only; the completion itself keeps every clause
        fixlog::QuasiInterpretation slim(fix.fix.base_ptr());
        slim.grounding_bound = fix.fix.grounding_bound;
        slim.exact = fix.fix.exact;
        for (std::size_t pos : fixlog::non_subsumed_positions(fix.fix))
            slim.insert(fix.fix.clauses()[pos]);
        fix.fix = std::move(slim);
    }
    if (opt.json_output) {
        json out;
        out["record"] = "fixcomp";
        out["k"] = fix.stabilized_at;
        out["bound"] = g.grounding_bound;
        out["exact"] = g.exact;
        json clauses = json::array();
        for (const fixlog::QuasiClause& c : fix.fix.clauses()) {
            json clause;
            clause["head"] = g.base().name(c.head);
            json neg = json::array();
            for (fixlog::AtomIndex a : c.neg) neg.push_back(g.base().name(a));
            clause["neg"] = neg;
            clauses.push_back(clause);
        }
        out["clauses"] = clauses;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << fixlog::to_lp(fix.fix);
        std::cout << "% k = " << fix.stabilized_at << "\n";
        if (!g.exact) std::cout << "% truncated grounding, bound = " << g.grounding_bound << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- models

int cmd_models(const Options& opt, const std::string& kind, const std::string& route) {
    fixlog::GroundProgram g = load_ground(opt);
    fixlog::ModelSet set;
    if (kind == "supported") {
        if (route != "brute")
            throw fixlog::precondition_error("supported models are only computed by enumeration; "
                                             "use --route brute");
        set = fixlog::supported_models(g, opt.cap);
    } else if (route == "brute") {
        set = fixlog::stable_models_bruteforce(g, opt.cap);
    } else if (route == "fixcomp") {
        set = fixlog::stable_models_via_fixcomp(g, opt.cap);
    } else {
        auto fix = fixlog::fixpoint_completion(g);
        std::vector<fixlog::Interpretation> models =
            fixlog::completion_models(fixlog::clark_completion(fix.fix), opt.cap);
        set.models = std::move(models);
        std::sort(set.models.begin(), set.models.end());
        set.route = fixlog::ModelRoute::completion;
        set.base = g.base_ptr();
    }

    std::vector<std::vector<std::string>> rendered;
    for (const fixlog::Interpretation& m : set.models) rendered.push_back(model_names(m, g.base()));
    std::sort(rendered.begin(), rendered.end());

    if (opt.json_output) {
        json out;
        out["record"] = "models";
        out["kind"] = kind;
        out["route"] = route;
        out["count"] = rendered.size();
        out["models"] = rendered;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& names : rendered) {
            std::cout << "{";
            for (std::size_t k = 0; k < names.size(); ++k) {
                if (k) std::cout << ",";
                std::cout << names[k];
            }
            std::cout << "}\n";
        }
        std::cerr << "count=" << rendered.size() << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- verify

void render_check(const Options& opt, const fixlog::CheckReport& report,
                  const std::string& subject) {
    if (opt.json_output) {
        json out;
        out["record"] = "check";
        out["check"] = report.check;
        out["subject"] = subject;
        out["status"] = fixlog::to_string(report.status);
        out["checked"] = report.checked;
        for (const auto& [k, v] : report.fields) out[k] = v;
        out["witnesses"] = report.witnesses;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << report.check << " " << subject << " status=" << to_string(report.status)
                  << " checked=" << report.checked;
        for (const auto& [k, v] : report.fields) std::cout << " " << k << "=" << v;
        std::cout << "\n";
        for (const std::string& w : report.witnesses) std::cout << "  witness: " << w << "\n";
    }
}

int cmd_verify(const Options& opt, const std::string& which, const std::string& corpus_spec,
               int corpus_count, bool corpus_given) {
    auto run_check = [&](const fixlog::GroundProgram& g) -> fixlog::CheckReport {
        if (which == "thm1") return fixlog::check_theorem1(g, opt.cap, 4096, opt.seed);
        if (which == "prop1") return fixlog::check_prop1(g);
        if (which == "thm2") return fixlog::check_thm2_corollary(g);
        if (which == "prop2") return fixlog::check_prop2(g, 10'000, opt.cap);
        if (which == "thm5") return fixlog::check_thm5(g, 4, opt.seed, 10'000, opt.cap);
        if (which == "thm6") return fixlog::check_thm6(g, opt.pair_cap, opt.cap);
        if (which == "thm7") return fixlog::check_thm7(g, opt.pair_cap);
        if (which == "cor1") return fixlog::check_cor1(g, opt.cap);
        throw fixlog::precondition_error("unknown check '" + which + "'");
    };

    int fail = 0, pass = 0, na = 0;
    if (corpus_given) {
        fixlog::CorpusSpec spec;
        spec.seed = opt.seed;
        char strat_buf[32] = {0};
        int fields = std::sscanf(corpus_spec.c_str(), "%d,%d,%d,%lf,%31s", &spec.n_atoms,
                                 &spec.n_clauses, &spec.max_body, &spec.neg_prob, strat_buf);
        if (fields < 4)
            throw fixlog::precondition_error(
                "corpus spec must be n_atoms,n_clauses,max_body,neg_prob[,stratified]");
        spec.stratified_only = std::string(strat_buf) == "stratified";
        std::vector<fixlog::GroundProgram> corpus = fixlog::generate_corpus(spec, corpus_count);
        for (std::size_t p = 0; p < corpus.size(); ++p) {
            fixlog::CheckReport report = run_check(corpus[p]);
            render_check(opt, report, "program=" + std::to_string(p));
            if (report.status == fixlog::CheckReport::Status::fail) ++fail;
            else if (report.status == fixlog::CheckReport::Status::not_applicable) ++na;
            else ++pass;
        }
    } else {
        fixlog::GroundProgram g = load_ground(opt);
        fixlog::CheckReport report = run_check(g);
        render_check(opt, report, "file=" + opt.file);
        if (report.status == fixlog::CheckReport::Status::fail) ++fail;
        else if (report.status == fixlog::CheckReport::Status::not_applicable) ++na;
        else ++pass;
    }

    if (opt.json_output) {
        json out;
        out["record"] = "summary";
        out["check"] = which;
        out["pass"] = pass;
        out["fail"] = fail;
        out["not_applicable"] = na;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << which << " summary pass=" << pass << " fail=" << fail
                  << " not-applicable=" << na << "\n";
    }
    return fail == 0 ? 0 : kExitCheckFailure;
}

// --------------------------------------------------------------- diagnose

int diagnose_stratify(const Options& opt, const fixlog::GroundProgram& g) {
    auto result = fixlog::find_local_stratification(g);
    if (std::holds_alternative<fixlog::StratificationFailure>(result)) {
        const auto& failure = std::get<fixlog::StratificationFailure>(result);
        if (opt.json_output) {
            json out;
            out["record"] = "stratify";
            out["stratified"] = false;
            out["witness"] = to_string(failure, g.base());
            std::cout << out.dump() << "\n";
        } else {
            std::cout << "not locally stratified: " << to_string(failure, g.base()) << "\n";
        }
        return 0;
    }
    const auto& levels = std::get<fixlog::LevelMapping>(result);
    std::vector<fixlog::AtomIndex> order(g.base().size());
    for (fixlog::AtomIndex a = 0; a < g.base().size(); ++a) order[a] = a;
    std::stable_sort(order.begin(), order.end(), [&](fixlog::AtomIndex a, fixlog::AtomIndex b) {
        return levels.level(a) < levels.level(b);
    });
    if (opt.json_output) {
        json out;
        out["record"] = "stratify";
        out["stratified"] = true;
        json lv = json::object();
        for (fixlog::AtomIndex a : order) lv[g.base().name(a)] = levels.level(a);
        out["levels"] = lv;
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (k) std::cout << " ";
            std::cout << g.base().name(order[k]) << ":" << levels.level(order[k]);
        }
        std::cout << "\n";
    }
    return 0;
}

int diagnose_contract(const Options& opt, const fixlog::GroundProgram& g,
                      const std::string& metric, const std::string& pairs,
                      std::uint64_t samples, const std::string& level_source) {
    fixlog::ContractionOptions copts;
    copts.pairs = pairs == "sample" ? fixlog::ContractionOptions::Pairs::sample
                                    : fixlog::ContractionOptions::Pairs::exhaustive;
    copts.sample_count = samples;
    copts.seed = opt.seed;
    copts.pair_cap = opt.pair_cap;

    fixlog::LevelMapping levels;
    if (level_source == "index") {
        levels = fixlog::index_levels(g.base());
    } else if (level_source == "fitting") {
        levels = fixlog::level_from_fitting(fixlog::fixpoint_completion(g).fix).levels;
    } else {
        auto strat = fixlog::find_local_stratification(g);
        if (std::holds_alternative<fixlog::StratificationFailure>(strat))
            throw fixlog::precondition_error(
                "program is not locally stratified: " +
                to_string(std::get<fixlog::StratificationFailure>(strat), g.base()) +
                " (try --levels fitting or --levels index)");
        levels = std::get<fixlog::LevelMapping>(strat);
    }

    if (metric == "rho") {
        copts.metric = fixlog::ContractionOptions::Metric::rho;
        fixlog::ThreeValuedInterpretation wf = fixlog::well_founded_model(g);
        if (!wf.total())
            throw fixlog::precondition_error("rho metric requires a total well-founded model");
        copts.anchor = fixlog::positive_part(wf);
    }

    fixlog::ContractionReport report = fixlog::contraction_report(g, levels, copts);
    if (opt.json_output) {
        json out;
        out["record"] = "contract";
        out["metric"] = metric;
        out["pairs"] = report.pairs_checked;
        out["violations"] = report.violations;
        out["witnesses"] = report.witnesses;
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "pairs=" << report.pairs_checked << " violations=" << report.violations
                  << "\n";
        for (const std::string& w : report.witnesses) std::cout << "  witness: " << w << "\n";
    }
    return report.violations == 0 ? 0 : kExitCheckFailure;
}

int diagnose_continuity(const Options& opt, const fixlog::GroundProgram& g,
                        const std::string& interp, const std::string& atom,
                        std::size_t witness_bound) {
    auto idx = g.base().find(atom);
    if (!idx) throw fixlog::precondition_error("atom '" + atom + "' is not in the program base");
    fixlog::Interpretation i = parse_interp(interp, g.base());
    std::size_t bound = witness_bound == 0 ? g.base().size() : witness_bound;
    fixlog::ContinuityWitness w = fixlog::continuity_witness(g, i, *idx, bound);
    std::string kind = w.kind == fixlog::ContinuityWitness::Kind::no_clause ? "no-clause"
                       : w.kind == fixlog::ContinuityWitness::Kind::witness_set ? "witness-set"
                                                                                : "exhausted";
    if (opt.json_output) {
        json out;
        out["record"] = "continuity";
        out["kind"] = kind;
        json names = json::array();
        for (fixlog::AtomIndex a : w.witness) names.push_back(g.base().name(a));
        out["witness"] = names;
        out["bound"] = bound;
        std::cout << out.dump() << "\n";
    } else {
        if (w.kind == fixlog::ContinuityWitness::Kind::witness_set) {
            std::cout << "witness-set {";
            for (std::size_t k = 0; k < w.witness.size(); ++k) {
                if (k) std::cout << ",";
                std::cout << g.base().name(w.witness[k]);
            }
            std::cout << "}\n";
        } else {
            std::cout << kind << (kind == "exhausted" ? " bound=" + std::to_string(bound) : "")
                      << "\n";
        }
    }
    return 0;
}

int diagnose_iterate(const Options& opt, const fixlog::GroundProgram& g, const std::string& from,
                     int iter_cap) {
    fixlog::Interpretation i0 = parse_interp(from, g.base());
    fixlog::IterationTrace trace = fixlog::iterate_gl(g, i0, iter_cap);
    std::string outcome = trace.outcome == fixlog::IterationTrace::Outcome::fixed_point
                              ? "fixed point"
                          : trace.outcome == fixlog::IterationTrace::Outcome::cycle ? "cycle"
                                                                                    : "cap reached";
    if (opt.json_output) {
        json out;
        out["record"] = "iterate";
        out["outcome"] = outcome;
        out["length"] = trace.entries.size();
        if (trace.outcome == fixlog::IterationTrace::Outcome::cycle)
            out["cycle_length"] = trace.cycle_length;
        json entries = json::array();
        for (const fixlog::Interpretation& e : trace.entries)
            entries.push_back(model_names(e, g.base()));
        out["entries"] = entries;
        std::cout << out.dump() << "\n";
    } else {
        for (std::size_t k = 0; k < trace.entries.size(); ++k)
            std::cout << k << ": " << to_string(trace.entries[k], g.base()) << "\n";
        if (trace.outcome == fixlog::IterationTrace::Outcome::cycle)
            std::cout << "cycle length " << trace.cycle_length << "\n";
        else
            std::cout << outcome << "\n";
    }
    return 0;
}

int diagnose_embed(const Options& opt, const fixlog::GroundProgram& g, const std::string& interp,
                   const std::string& decode) {
    if (!decode.empty()) {
        fixlog::Rational x;
        auto slash = decode.find('/');
        using boost::multiprecision::cpp_int;
        try {
            if (slash == std::string::npos) {
                x = fixlog::Rational(cpp_int(decode));
            } else {
                x = fixlog::Rational(cpp_int(decode.substr(0, slash)),
                                     cpp_int(decode.substr(slash + 1)));
            }
        } catch (const std::exception&) {
            throw fixlog::precondition_error("cannot parse '" + decode +
                                             "' as an exact rational num/den");
        }
        fixlog::Interpretation i = fixlog::cantor_decode(x, g.base());
        if (opt.json_output) {
            json out;
            out["record"] = "embed";
            out["decoded"] = model_names(i, g.base());
            std::cout << out.dump() << "\n";
        } else {
            std::cout << to_string(i, g.base()) << "\n";
        }
        return 0;
    }
    fixlog::Interpretation i = parse_interp(interp, g.base());
    fixlog::Rational x = fixlog::cantor_embed(i, g.base());
    std::ostringstream value;
    value << boost::multiprecision::numerator(x) << "/" << boost::multiprecision::denominator(x);
    if (opt.json_output) {
        json out;
        out["record"] = "embed";
        out["value"] = value.str();
        std::cout << out.dump() << "\n";
    } else {
        std::cout << value.str() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fixpoint completion toolkit for normal logic programs"};
    app.require_subcommand(1);

    Options opt;
    std::string command_echo;
    for (int i = 0; i < argc; ++i) {
        if (i) command_echo += " ";
        command_echo += argv[i];
    }

    // fixcomp
    bool subsume = false;
    auto* sc_fixcomp = app.add_subcommand("fixcomp", "print the fixpoint completion fix(P)");
    sc_fixcomp->add_option("file", opt.file, "program file (.lp)")->required();
    sc_fixcomp->add_option("--bound", opt.bound, "grounding depth bound");
    sc_fixcomp->add_flag("--subsume", subsume, "drop subsumed clauses from the printout");
    sc_fixcomp->add_flag("--json", opt.json_output, "structured output");

    // models
    std::string kind = "stable", route = "brute";
    auto* sc_models = app.add_subcommand("models", "enumerate stable or supported models");
    sc_models->add_option("file", opt.file)->required();
    sc_models->add_option("--kind", kind)->check(CLI::IsMember({"stable", "supported"}));
    sc_models->add_option("--route", route)->check(CLI::IsMember({"brute", "fixcomp", "completion"}));
    sc_models->add_option("--bound", opt.bound);
    sc_models->add_option("--cap", opt.cap);
    sc_models->add_flag("--json", opt.json_output);

    // verify
    std::string which, corpus_spec;
    int corpus_count = 100;
    auto* sc_verify = app.add_subcommand("verify", "run a theorem-check harness");
    sc_verify->add_option("which", which)
        ->required()
        ->check(CLI::IsMember({"thm1", "prop1", "thm2", "prop2", "thm5", "thm6", "thm7", "cor1"}));
    sc_verify->add_option("file", opt.file, "program file (.lp)");
    auto* corpus_opt =
        sc_verify->add_option("--corpus", corpus_spec, "n_atoms,n_clauses,max_body,neg_prob[,stratified]");
    auto* seed_opt = sc_verify->add_option("--seed", opt.seed, "corpus / sampling seed");
    corpus_opt->needs(seed_opt);
    sc_verify->add_option("--count", corpus_count, "number of corpus programs");
    sc_verify->add_option("--bound", opt.bound);
    sc_verify->add_option("--cap", opt.cap);
    sc_verify->add_option("--pair-cap", opt.pair_cap);
    sc_verify->add_flag("--json", opt.json_output);

    // diagnose
    std::string what, metric = "dl", pairs = "exhaustive", level_source = "strat";
    std::string interp, atom, from = "empty", decode;
    std::uint64_t samples = 10'000;
    std::size_t witness_bound = 0;
    int iter_cap = 1000;
    auto* sc_diag = app.add_subcommand("diagnose", "metric and topological diagnostics");
    sc_diag->add_option("what", what)
        ->required()
        ->check(CLI::IsMember({"stratify", "contract", "continuity", "iterate", "embed"}));
    sc_diag->add_option("file", opt.file)->required();
    sc_diag->add_option("--bound", opt.bound);
    sc_diag->add_option("--cap", opt.cap);
    sc_diag->add_option("--pair-cap", opt.pair_cap);
    sc_diag->add_option("--metric", metric)->check(CLI::IsMember({"dl", "rho"}));
    sc_diag->add_option("--pairs", pairs)->check(CLI::IsMember({"exhaustive", "sample"}));
    sc_diag->add_option("--samples", samples);
    sc_diag->add_option("--seed", opt.seed);
    sc_diag->add_option("--levels", level_source)->check(CLI::IsMember({"strat", "fitting", "index"}));
    sc_diag->add_option("--interp", interp, "comma-separated atoms, or empty/full");
    sc_diag->add_option("--atom", atom);
    sc_diag->add_option("--witness-bound", witness_bound);
    sc_diag->add_option("--from", from, "comma-separated atoms, or empty/full");
    sc_diag->add_option("--iter-cap", iter_cap);
    sc_diag->add_option("--decode", decode, "exact rational num/den to decode");
    sc_diag->add_flag("--json", opt.json_output);

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (sc_fixcomp->parsed()) {
            emit_header(opt, command_echo, read_file(opt.file));
            rc = cmd_fixcomp(opt, subsume);
        } else if (sc_models->parsed()) {
            emit_header(opt, command_echo, read_file(opt.file));
            rc = cmd_models(opt, kind, route);
        } else if (sc_verify->parsed()) {
            bool corpus_given = corpus_opt->count() > 0;
            if (!corpus_given && opt.file.empty())
                throw fixlog::precondition_error("verify needs a file or --corpus");
            emit_header(opt, command_echo,
                        corpus_given ? corpus_spec + "#" + std::to_string(opt.seed) + "#" +
                                           std::to_string(corpus_count)
                                     : read_file(opt.file));
            rc = cmd_verify(opt, which, corpus_spec, corpus_count, corpus_given);
        } else if (sc_diag->parsed()) {
            emit_header(opt, command_echo, read_file(opt.file));
            fixlog::GroundProgram g = load_ground(opt);
            if (what == "stratify") rc = diagnose_stratify(opt, g);
            else if (what == "contract") rc = diagnose_contract(opt, g, metric, pairs, samples, level_source);
            else if (what == "continuity") rc = diagnose_continuity(opt, g, interp, atom, witness_bound);
            else if (what == "iterate") rc = diagnose_iterate(opt, g, from, iter_cap);
            else rc = diagnose_embed(opt, g, interp, decode);
        }
    } catch (const fixlog::parse_error& e) {
        std::cerr << "parse error at " << e.line() << ":" << e.column() << ": " << e.what()
                  << "\n";
        return kExitParseError;
    } catch (const fixlog::cap_exceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const fixlog::precondition_error& e) {
        std::cerr << "precondition violation: " << e.what() << "\n";
        return kExitPrecondition;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();
    std::cerr << "elapsed_ms=" << elapsed << "\n";
    return rc;
}
