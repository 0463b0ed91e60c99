#include "fixlog/semantics.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <sstream>

namespace fixlog {

std::string to_string(ModelRoute r) {
    switch (r) {
    case ModelRoute::brute_force: return "brute";
    case ModelRoute::fixcomp: return "fixcomp";
    case ModelRoute::completion: return "completion";
    }
    return "?";
}

std::string to_string(CheckReport::Status s) {
    switch (s) {
    case CheckReport::Status::pass: return "pass";
    case CheckReport::Status::fail: return "fail";
    case CheckReport::Status::not_applicable: return "not-applicable";
    }
    return "?";
}

namespace {

void require_enumerable(const GroundProgram& g, std::uint64_t interp_cap) {
    const std::size_t n = g.base().size();
    if (n >= 64 || (1ull << n) > interp_cap) {
        std::ostringstream os;
        os << "enumeration over " << n << " atoms exceeds cap " << interp_cap;
        throw cap_exceeded(os.str(), n < 64 ? (1ull << n) : ~0ull, interp_cap);
    }
}

template <typename FixedPointTest>
ModelSet enumerate_models(const GroundProgram& g, std::uint64_t interp_cap, ModelRoute route,
                          FixedPointTest&& is_fixed) {
    require_enumerable(g, interp_cap);
    const std::size_t n = g.base().size();
    ModelSet out;
    out.route = route;
    out.base = g.base_ptr();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Interpretation i = Interpretation::from_mask(n, mask);
        if (is_fixed(i)) out.models.push_back(std::move(i));
    }
    std::sort(out.models.begin(), out.models.end());
    return out;
}

} // namespace

ModelSet supported_models(const GroundProgram& g, std::uint64_t interp_cap) {
    return enumerate_models(g, interp_cap, ModelRoute::brute_force,
                            [&](const Interpretation& i) { return tp_step(g, i) == i; });
}

ModelSet stable_models_bruteforce(const GroundProgram& g, std::uint64_t interp_cap) {
    return enumerate_models(g, interp_cap, ModelRoute::brute_force,
                            [&](const Interpretation& i) { return gl_operator(g, i) == i; });
}

ModelSet stable_models_via_fixcomp(const GroundProgram& g, std::uint64_t interp_cap) {
    GroundProgram fix = quasi_as_ground(fixpoint_completion(g).fix);
    ModelSet out = supported_models(fix, interp_cap);
    out.route = ModelRoute::fixcomp;
    return out;
}

ThreeValuedInterpretation well_founded_model(const GroundProgram& g, AlternatingTrace* trace) {
    const std::size_t n = g.base().size();
    Interpretation lower(n);                        // K_0
    Interpretation upper = Interpretation::full(n); // U_0
    if (trace) {
        trace->lower.push_back(lower);
        trace->upper.push_back(upper);
    }
    while (true) {
        Interpretation next_lower = gl_operator(g, upper);
        Interpretation next_upper = gl_operator(g, lower);
        if (trace) {
            trace->lower.push_back(next_lower);
            trace->upper.push_back(next_upper);
        }
        if (next_lower == lower && next_upper == upper) break;
        lower = std::move(next_lower);
        upper = std::move(next_upper);
    }
    Interpretation false_set = Interpretation::full(n).set_minus(upper);
    return ThreeValuedInterpretation(std::move(lower), std::move(false_set));
}

CheckReport check_gl_vs_quasi(const GroundProgram& g, const QuasiInterpretation& q,
                              std::uint64_t interp_cap, std::uint64_t sample_count,
                              std::uint64_t seed) {
    CheckReport report;
    report.check = "gl-vs-quasi";
    GroundProgram as_ground = quasi_as_ground(q);
    const std::size_t n = g.base().size();

    auto probe = [&](const Interpretation& i) {
        Interpretation via_gl = gl_operator(g, i);
        Interpretation via_fix = tp_step(as_ground, i);
        ++report.checked;
        if (via_gl != via_fix) {
            report.status = CheckReport::Status::fail;
            if (report.witnesses.size() < 5) {
                std::ostringstream os;
                os << "I=" << to_string(i, g.base()) << " GL=" << to_string(via_gl, g.base())
                   << " Tfix=" << to_string(via_fix, g.base());
                report.witnesses.push_back(os.str());
            }
        }
    };

    if (n < 64 && (1ull << n) <= interp_cap) {
        report.note("mode", "exhaustive");
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask)
            probe(Interpretation::from_mask(n, mask));
    } else {
        report.note("mode", "sample");
        std::mt19937_64 rng(seed);
        for (std::uint64_t s = 0; s < sample_count; ++s) {
            Interpretation i(n);
            for (AtomIndex a = 0; a < n; ++a)
                if (rng() & 1) i.add(a);
            probe(i);
        }
    }
    return report;
}

CheckReport check_theorem1(const GroundProgram& g, std::uint64_t interp_cap,
                           std::uint64_t sample_count, std::uint64_t seed) {
    CheckReport report =
        check_gl_vs_quasi(g, fixpoint_completion(g).fix, interp_cap, sample_count, seed);
    report.check = "thm1";
    return report;
}

CheckReport check_prop2(const GroundProgram& g, int max_iter, std::uint64_t interp_cap) {
    CheckReport report;
    report.check = "prop2";
    ThreeValuedInterpretation wf = well_founded_model(g);
    if (!wf.total()) {
        report.status = CheckReport::Status::not_applicable;
        report.note("reason", "well-founded model is partial");
        return report;
    }
    Interpretation positive = positive_part(wf);
    IterationTrace trace = iterate_gl(g, Interpretation(g.base().size()), max_iter);
    report.note("trace_length", std::to_string(trace.entries.size()));
    if (trace.outcome != IterationTrace::Outcome::fixed_point) {
        report.status = CheckReport::Status::fail;
        report.witnesses.push_back("GL iteration from empty did not reach a fixed point");
        return report;
    }
    ++report.checked;
    if (trace.entries.back() != positive) {
        report.status = CheckReport::Status::fail;
        report.witnesses.push_back("GL limit " + to_string(trace.entries.back(), g.base()) +
                                   " differs from M+ " + to_string(positive, g.base()));
        return report;
    }
    ModelSet stable = stable_models_bruteforce(g, interp_cap);
    ++report.checked;
    if (stable.models.size() != 1 || stable.models.front() != positive) {
        report.status = CheckReport::Status::fail;
        std::ostringstream os;
        os << "expected unique stable model " << to_string(positive, g.base()) << ", found "
           << stable.models.size();
        report.witnesses.push_back(os.str());
    }
    return report;
}

namespace {

// mt19937 output is fully specified, so these keep corpora portable
std::uint32_t ranged(std::mt19937& rng, std::uint32_t n) {
    // rejection sampling to stay unbiased
    const std::uint32_t limit = std::numeric_limits<std::uint32_t>::max() / n * n;
    std::uint32_t r = rng();
    while (r >= limit) r = rng();
    return r % n;
}

bool bernoulli(std::mt19937& rng, double p) {
    return static_cast<double>(rng()) < p * 4294967296.0;
}

} // namespace

std::vector<GroundProgram> generate_corpus(const CorpusSpec& spec, int count) {
    if (spec.n_atoms <= 0 || spec.n_clauses < 0 || spec.max_body < 0 || spec.neg_prob < 0.0 ||
        spec.neg_prob > 1.0)
        throw precondition_error("invalid corpus spec");
    std::mt19937 rng(static_cast<std::uint32_t>(spec.seed));
    std::vector<GroundProgram> corpus;
    corpus.reserve(count);

    for (int p = 0; p < count; ++p) {
        auto base = std::make_shared<AtomEnumeration>();
        for (int a = 0; a < spec.n_atoms; ++a) base->intern("a" + std::to_string(a + 1));

        std::vector<std::uint32_t> strat_level(spec.n_atoms, 0);
        if (spec.stratified_only)
            for (int a = 0; a < spec.n_atoms; ++a)
                strat_level[a] = ranged(rng, static_cast<std::uint32_t>(spec.n_atoms));

        GroundProgram g(base);
        for (int c = 0; c < spec.n_clauses; ++c) {
            GroundClause clause;
            clause.head = ranged(rng, static_cast<std::uint32_t>(spec.n_atoms));
            int body = static_cast<int>(ranged(rng, static_cast<std::uint32_t>(spec.max_body + 1)));
            for (int b = 0; b < body; ++b) {
                bool negated = bernoulli(rng, spec.neg_prob);
                if (!spec.stratified_only) {
                    AtomIndex atom = ranged(rng, static_cast<std::uint32_t>(spec.n_atoms));
                    (negated ? clause.neg : clause.pos).push_back(atom);
                    continue;
                }
                // respect the random level assignment: strictly lower levels
                // for negated literals, lower-or-equal for positive ones
                std::vector<AtomIndex> pool;
                for (int a = 0; a < spec.n_atoms; ++a) {
                    if (negated ? strat_level[a] < strat_level[clause.head]
                                : strat_level[a] <= strat_level[clause.head])
                        pool.push_back(static_cast<AtomIndex>(a));
                }
                if (negated && pool.empty()) {
                    negated = false;
                    for (int a = 0; a < spec.n_atoms; ++a)
                        if (strat_level[a] <= strat_level[clause.head])
                            pool.push_back(static_cast<AtomIndex>(a));
                }
                AtomIndex atom = pool[ranged(rng, static_cast<std::uint32_t>(pool.size()))];
                (negated ? clause.neg : clause.pos).push_back(atom);
            }
            g.add_clause(std::move(clause));
        }
        corpus.push_back(std::move(g));
    }
    return corpus;
}

QuasiInterpretation drop_clause(const QuasiInterpretation& q, std::size_t position) {
    QuasiInterpretation out(q.base_ptr());
    out.grounding_bound = q.grounding_bound;
    out.exact = q.exact;
    for (std::size_t k = 0; k < q.clauses().size(); ++k)
        if (k != position) out.insert(q.clauses()[k]);
    return out;
}

} // namespace fixlog
