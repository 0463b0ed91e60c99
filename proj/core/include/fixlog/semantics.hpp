#pragma once

#include "fixlog/metrics.hpp"

namespace fixlog {

inline constexpr std::uint64_t kDefaultInterpCap = 1u << 20;

enum class ModelRoute { brute_force, fixcomp, completion };

std::string to_string(ModelRoute r);

// Duplicate-free, canonically ordered set of models over one base.
struct ModelSet {
    std::vector<Interpretation> models; // sorted by bit pattern
    ModelRoute route = ModelRoute::brute_force;
    std::shared_ptr<const AtomEnumeration> base;

    bool same_models(const ModelSet& o) const { return models == o.models; }
};

// Fixed points of tp_step, by enumeration of all 2^|base| interpretations.
ModelSet supported_models(const GroundProgram& g,
                          std::uint64_t interp_cap = kDefaultInterpCap);

// Fixed points of gl_operator, by enumeration.
ModelSet stable_models_bruteforce(const GroundProgram& g,
                                  std::uint64_t interp_cap = kDefaultInterpCap);

// Supported models of the fixpoint completion; agrees with the brute-force
// route on every input.
ModelSet stable_models_via_fixcomp(const GroundProgram& g,
                                   std::uint64_t interp_cap = kDefaultInterpCap);

struct AlternatingTrace {
    std::vector<Interpretation> lower; // K_0, K_1, ...
    std::vector<Interpretation> upper; // U_0, U_1, ...
};

// The alternating GL iteration: K_0 = empty, U_0 = base,
// K_{i+1} = GL(U_i), U_{i+1} = GL(K_i); the limit yields true = K, false =
// base minus U.  Coincides with the Fitting model of the fixpoint completion.
ThreeValuedInterpretation well_founded_model(const GroundProgram& g,
                                             AlternatingTrace* trace = nullptr);

struct CheckReport {
    enum class Status { pass, fail, not_applicable };

    std::string check;
    Status status = Status::pass;
    std::uint64_t checked = 0;
    std::vector<std::pair<std::string, std::string>> fields;
    std::vector<std::string> witnesses;

    bool failed() const { return status == Status::fail; }
    void note(std::string key, std::string value) {
        fields.emplace_back(std::move(key), std::move(value));
    }
};

std::string to_string(CheckReport::Status s);

// Verifies gl_operator(g, I) == tp_step(quasi_as_ground(q), I) for all
// interpretations when 2^|base| <= interp_cap, else for sample_count seeded
// samples.  Used both with the computed fixpoint completion and with
// deliberately mutated quasi-interpretations as a negative control.
CheckReport check_gl_vs_quasi(const GroundProgram& g, const QuasiInterpretation& q,
                              std::uint64_t interp_cap = kDefaultInterpCap,
                              std::uint64_t sample_count = 4096, std::uint64_t seed = 0);

CheckReport check_theorem1(const GroundProgram& g,
                           std::uint64_t interp_cap = kDefaultInterpCap,
                           std::uint64_t sample_count = 4096, std::uint64_t seed = 0);

// If the well-founded model is total: the GL iteration from empty must reach
// a fixed point equal to its positive part, which must be the unique stable
// model.  Reports not-applicable otherwise.
CheckReport check_prop2(const GroundProgram& g, int max_iter = 10'000,
                        std::uint64_t interp_cap = kDefaultInterpCap);

struct CorpusSpec {
    std::uint64_t seed = 0;
    int n_atoms = 0;
    int n_clauses = 0;
    int max_body = 0;
    double neg_prob = 0.0;
    bool stratified_only = false;
};

// Deterministic in (spec, count): propositional programs with n_clauses
// clauses over n_atoms atoms, body sizes <= max_body, each literal negated
// with probability neg_prob.  With stratified_only, clauses respect a random
// level assignment so every program is locally stratified by construction.
std::vector<GroundProgram> generate_corpus(const CorpusSpec& spec, int count);

// Drops the clause at the given position; helper for negative controls.
QuasiInterpretation drop_clause(const QuasiInterpretation& q, std::size_t position);

} // namespace fixlog
