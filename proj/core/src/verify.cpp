#include "fixlog/verify.hpp"

#include <random>
#include <sstream>

namespace fixlog {

CheckReport check_prop1(const GroundProgram& g) {
    CheckReport report;
    report.check = "prop1";
    for (const GroundClause& c : g.clauses()) {
        if (!c.definite()) {
            report.status = CheckReport::Status::not_applicable;
            report.note("reason", "program is not definite");
            return report;
        }
    }
    // run both ladders side by side; fact heads must agree at every rung
    Interpretation tp_rung(g.base().size());
    QuasiInterpretation tprime_rung(g.base_ptr());
    for (int n = 1;; ++n) {
        Interpretation tp_next = tp_step(g, tp_rung);
        QuasiInterpretation tprime_next = tprime_step(g, tprime_rung);
        Interpretation fact_heads(g.base().size());
        for (const QuasiClause& c : tprime_next.clauses()) {
            if (!c.neg.empty()) {
                report.status = CheckReport::Status::fail;
                report.witnesses.push_back("unfolding of a definite program produced a negative literal");
                return report;
            }
            fact_heads.add(c.head);
        }
        ++report.checked;
        if (fact_heads != tp_next) {
            report.status = CheckReport::Status::fail;
            std::ostringstream os;
            os << "iteration " << n << ": T ladder " << to_string(tp_next, g.base())
               << " vs fact heads " << to_string(fact_heads, g.base());
            report.witnesses.push_back(os.str());
            return report;
        }
        bool tp_stable = tp_next == tp_rung;
        bool tprime_stable = tprime_next == tprime_rung;
        if (tp_stable != tprime_stable) {
            report.status = CheckReport::Status::fail;
            report.witnesses.push_back("ladders stabilized at different iterations");
            return report;
        }
        if (tp_stable) break;
        tp_rung = std::move(tp_next);
        tprime_rung = std::move(tprime_next);
    }
    report.note("iterations", std::to_string(report.checked));
    return report;
}

CheckReport check_thm2_corollary(const GroundProgram& g) {
    CheckReport report;
    report.check = "thm2";
    ThreeValuedInterpretation wf = well_founded_model(g);
    ThreeValuedInterpretation fitting_of_fix =
        fitting_model(quasi_as_ground(fixpoint_completion(g).fix));
    ++report.checked;
    if (wf != fitting_of_fix) {
        report.status = CheckReport::Status::fail;
        report.witnesses.push_back("well-founded " + to_string(wf, g.base()) +
                                   " vs Fitting(fix) " + to_string(fitting_of_fix, g.base()));
    }
    return report;
}

CheckReport check_thm5(const GroundProgram& g, int starts, std::uint64_t seed, int iter_cap,
                       std::uint64_t interp_cap) {
    CheckReport report;
    report.check = "thm5";
    const std::size_t n = g.base().size();
    ModelSet stable = stable_models_bruteforce(g, interp_cap);

    std::vector<Interpretation> origins;
    origins.push_back(Interpretation(n));
    origins.push_back(Interpretation::full(n));
    std::mt19937_64 rng(seed);
    for (int s = 0; s < starts; ++s) {
        Interpretation i(n);
        for (AtomIndex a = 0; a < n; ++a)
            if (rng() & 1) i.add(a);
        origins.push_back(std::move(i));
    }

    int converged = 0;
    for (const Interpretation& i0 : origins) {
        IterationTrace trace = iterate_gl(g, i0, iter_cap);
        ++report.checked;
        if (trace.outcome != IterationTrace::Outcome::fixed_point) continue;
        ++converged;
        const Interpretation& limit = trace.entries.back();
        if (!std::binary_search(stable.models.begin(), stable.models.end(), limit)) {
            report.status = CheckReport::Status::fail;
            report.witnesses.push_back("converged limit " + to_string(limit, g.base()) +
                                       " is not a stable model");
        }
    }
    report.note("converged", std::to_string(converged));
    return report;
}

CheckReport check_thm6(const GroundProgram& g, std::uint64_t pair_cap,
                       std::uint64_t interp_cap) {
    CheckReport report;
    report.check = "thm6";
    StratificationResult strat = find_local_stratification(g);
    if (std::holds_alternative<StratificationFailure>(strat)) {
        report.status = CheckReport::Status::not_applicable;
        report.note("reason", "not locally stratified");
        report.note("witness", to_string(std::get<StratificationFailure>(strat), g.base()));
        return report;
    }
    const LevelMapping& levels = std::get<LevelMapping>(strat);

    FixpointCompletion fix = fixpoint_completion(g);
    ++report.checked;
    if (!check_locally_hierarchical(fix.fix, levels)) {
        report.status = CheckReport::Status::fail;
        report.witnesses.push_back("fixpoint completion is not locally hierarchical under the found levels");
        return report;
    }

    ContractionOptions opts;
    opts.metric = ContractionOptions::Metric::dl;
    opts.pairs = ContractionOptions::Pairs::exhaustive;
    opts.pair_cap = pair_cap;
    ContractionReport contraction = contraction_report(g, levels, opts);
    report.checked += contraction.pairs_checked;
    report.note("pairs", std::to_string(contraction.pairs_checked));
    if (contraction.violations != 0) {
        report.status = CheckReport::Status::fail;
        report.witnesses.insert(report.witnesses.end(), contraction.witnesses.begin(),
                                contraction.witnesses.end());
        return report;
    }

    ModelSet stable = stable_models_bruteforce(g, interp_cap);
    ++report.checked;
    if (stable.models.size() != 1) {
        report.status = CheckReport::Status::fail;
        report.witnesses.push_back("expected exactly one stable model, found " +
                                   std::to_string(stable.models.size()));
    }
    return report;
}

CheckReport check_thm7(const GroundProgram& g, std::uint64_t pair_cap) {
    CheckReport report;
    report.check = "thm7";
    ThreeValuedInterpretation wf = well_founded_model(g);
    if (!wf.total()) {
        report.status = CheckReport::Status::not_applicable;
        report.note("reason", "well-founded model is partial");
        return report;
    }
    FittingLevels fitting = level_from_fitting(fixpoint_completion(g).fix);
    ++report.checked;
    if (fitting.positive != positive_part(wf)) {
        report.status = CheckReport::Status::fail;
        report.witnesses.push_back("Fitting positive part differs from the well-founded model");
        return report;
    }
    ContractionOptions opts;
    opts.metric = ContractionOptions::Metric::rho;
    opts.anchor = fitting.positive;
    opts.pairs = ContractionOptions::Pairs::exhaustive;
    opts.pair_cap = pair_cap;
    ContractionReport contraction = contraction_report(g, fitting.levels, opts);
    report.checked += contraction.pairs_checked;
    report.note("pairs", std::to_string(contraction.pairs_checked));
    if (contraction.violations != 0) {
        report.status = CheckReport::Status::fail;
        report.witnesses.insert(report.witnesses.end(), contraction.witnesses.begin(),
                                contraction.witnesses.end());
    }
    return report;
}

CheckReport check_cor1(const GroundProgram& g, std::uint64_t interp_cap) {
    CheckReport report;
    report.check = "cor1";
    const std::size_t n = g.base().size();
    if (n >= 64 || (1ull << n) > interp_cap) {
        std::ostringstream os;
        os << "enumeration over " << n << " atoms exceeds cap " << interp_cap;
        throw cap_exceeded(os.str(), n < 64 ? (1ull << n) : ~0ull, interp_cap);
    }
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Interpretation i = Interpretation::from_mask(n, mask);
        Interpretation gl_image = gl_operator(g, i);
        for (AtomIndex a = 0; a < n; ++a) {
            if (gl_image.contains(a)) continue;
            ContinuityWitness w = continuity_witness(g, i, a, n);
            ++report.checked;
            if (w.kind == ContinuityWitness::Kind::exhausted) {
                report.status = CheckReport::Status::fail;
                report.witnesses.push_back("witness search exhausted at I=" +
                                           to_string(i, g.base()) + " A=" + g.base().name(a));
            } else if (w.kind == ContinuityWitness::Kind::witness_set &&
                       !validate_witness(g, i, a, w.witness)) {
                report.status = CheckReport::Status::fail;
                report.witnesses.push_back("witness failed validation at I=" +
                                           to_string(i, g.base()) + " A=" + g.base().name(a));
            }
        }
    }
    return report;
}

} // namespace fixlog
