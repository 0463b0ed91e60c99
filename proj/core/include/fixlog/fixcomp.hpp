#pragma once

#include <set>
#include <utility>

#include "fixlog/operators.hpp"

namespace fixlog {

// A ground clause with negative body literals only: A <- not B_1,...,not B_m.
struct QuasiClause {
    AtomIndex head = 0;
    std::vector<AtomIndex> neg; // sorted, duplicate-free

    bool operator==(const QuasiClause& o) const { return head == o.head && neg == o.neg; }
};

// A set of negative-body-only clauses over a shared enumeration, deduplicated
// by (head, body set).  Clause order records first derivation and is used
// only for printing; equality is set equality.
class QuasiInterpretation {
public:
    QuasiInterpretation() : base_(std::make_shared<AtomEnumeration>()) {}
    explicit QuasiInterpretation(std::shared_ptr<const AtomEnumeration> base)
        : base_(std::move(base)) {}

    // Returns false if the clause was already present.
    bool insert(QuasiClause c);
    bool contains(const QuasiClause& c) const;

    const std::vector<QuasiClause>& clauses() const { return clauses_; }
    std::size_t size() const { return clauses_.size(); }
    const AtomEnumeration& base() const { return *base_; }
    const std::shared_ptr<const AtomEnumeration>& base_ptr() const { return base_; }

    bool subset_of(const QuasiInterpretation& o) const;
    bool operator==(const QuasiInterpretation& o) const { return seen_ == o.seen_; }
    bool operator!=(const QuasiInterpretation& o) const { return !(*this == o); }

    int grounding_bound = 0;
    bool exact = true;

private:
    std::shared_ptr<const AtomEnumeration> base_;
    std::vector<QuasiClause> clauses_;
    std::set<std::pair<AtomIndex, std::vector<AtomIndex>>> seen_;
};

// One application of the unfolding operator: for every clause
// A <- A_1,...,A_n, not B_1,...,not B_m of g and every choice of clauses
// A_i <- body_i in q, emit A <- body_1,...,body_n, not B_1,...,not B_m.
// n = 0 and m = 0 are both allowed; bodies concatenate as sets.
// Throws cap_exceeded if the number of unfolding combinations for a single
// ground clause exceeds combo_cap.
QuasiInterpretation tprime_step(const GroundProgram& g, const QuasiInterpretation& q,
                                std::uint64_t combo_cap = 10'000'000);

struct FixpointCompletion {
    QuasiInterpretation fix;
    // least k >= 1 with iterate(k) == iterate(k-1)
    int stabilized_at = 0;
};

// Least fixed point of tprime_step, iterated from the empty
// quasi-interpretation; clause order is first-derivation order.
FixpointCompletion fixpoint_completion(const GroundProgram& g, int iteration_cap = 100'000,
                                       std::uint64_t combo_cap = 10'000'000);

// Reinterpret q as a ground program over the same base so that tp_step,
// fitting_step and model enumeration apply to it.
GroundProgram quasi_as_ground(const QuasiInterpretation& q);

// Positions of clauses not subsumed by another clause with the same head and
// a body subset.  The completion keeps subsumed clauses; this scan serves
// display normalization and mutation harnesses, which need load-bearing
// clauses.
std::vector<std::size_t> non_subsumed_positions(const QuasiInterpretation& q);

// Per atom A: a disjunction of conjunctions of negative literals, one
// disjunct per clause with head A.  No clause means A <-> false; an empty
// body means a true disjunct.
struct CompletionFormula {
    std::shared_ptr<const AtomEnumeration> base;
    std::vector<std::vector<std::vector<AtomIndex>>> disjuncts_per_atom;
};

CompletionFormula clark_completion(const QuasiInterpretation& q);

bool satisfies_completion(const CompletionFormula& c, const Interpretation& i);

// All interpretations over the base satisfying every biconditional, by
// exhaustive enumeration.  Throws cap_exceeded when 2^|base| > interp_cap.
std::vector<Interpretation> completion_models(const CompletionFormula& c,
                                              std::uint64_t interp_cap = 1u << 20);

std::string to_lp(const QuasiInterpretation& q);
std::string to_string(const CompletionFormula& c);

} // namespace fixlog
