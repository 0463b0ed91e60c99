#include "fixlog/fixcomp.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fixlog {

bool QuasiInterpretation::insert(QuasiClause c) {
    std::sort(c.neg.begin(), c.neg.end());
    c.neg.erase(std::unique(c.neg.begin(), c.neg.end()), c.neg.end());
    auto key = std::make_pair(c.head, c.neg);
    if (!seen_.insert(std::move(key)).second) return false;
    clauses_.push_back(std::move(c));
    return true;
}

bool QuasiInterpretation::contains(const QuasiClause& c) const {
    QuasiClause norm = c;
    std::sort(norm.neg.begin(), norm.neg.end());
    norm.neg.erase(std::unique(norm.neg.begin(), norm.neg.end()), norm.neg.end());
    return seen_.count(std::make_pair(norm.head, norm.neg)) > 0;
}

bool QuasiInterpretation::subset_of(const QuasiInterpretation& o) const {
    return std::includes(o.seen_.begin(), o.seen_.end(), seen_.begin(), seen_.end());
}

QuasiInterpretation tprime_step(const GroundProgram& g, const QuasiInterpretation& q,
                                std::uint64_t combo_cap) {
    // index q by head
    std::map<AtomIndex, std::vector<const QuasiClause*>> by_head;
    for (const QuasiClause& c : q.clauses()) by_head[c.head].push_back(&c);

    QuasiInterpretation out(g.base_ptr());
    out.grounding_bound = g.grounding_bound;
    out.exact = g.exact;

    for (const GroundClause& gc : g.clauses()) {
        // every positive premise needs at least one unfolding clause in q
        std::vector<const std::vector<const QuasiClause*>*> choices;
        bool feasible = true;
        std::uint64_t combos = 1;
        for (AtomIndex a : gc.pos) {
            auto it = by_head.find(a);
            if (it == by_head.end() || it->second.empty()) {
                feasible = false;
                break;
            }
            choices.push_back(&it->second);
            if (combos > combo_cap / it->second.size()) {
                std::ostringstream os;
                os << "unfolding combinations for one clause exceed cap " << combo_cap;
                throw cap_exceeded(os.str(), 0, combo_cap);
            }
            combos *= it->second.size();
        }
        if (!feasible) continue;

        std::vector<std::size_t> odo(choices.size(), 0);
        bool done = false;
        while (!done) {
            QuasiClause unfolded;
            unfolded.head = gc.head;
            unfolded.neg = gc.neg;
            for (std::size_t k = 0; k < choices.size(); ++k) {
                const QuasiClause* picked = (*choices[k])[odo[k]];
                unfolded.neg.insert(unfolded.neg.end(), picked->neg.begin(), picked->neg.end());
            }
            out.insert(std::move(unfolded));
            done = true;
            for (std::size_t k = choices.size(); k-- > 0;) {
                if (++odo[k] < choices[k]->size()) {
                    done = false;
                    break;
                }
                odo[k] = 0;
            }
        }
    }
    return out;
}

FixpointCompletion fixpoint_completion(const GroundProgram& g, int iteration_cap,
                                       std::uint64_t combo_cap) {
    // Semi-naive evaluation: the iterates are increasing, so each round only
    // enumerates unfolding combinations that pick at least one clause derived
    // in the previous round.  Every combination is visited once over the
    // whole run, and the accumulated clause list keeps first-derivation
    // order for printing.
    QuasiInterpretation accumulated(g.base_ptr());
    accumulated.grounding_bound = g.grounding_bound;
    accumulated.exact = g.exact;

    std::vector<int> added_round; // parallel to accumulated.clauses()

    auto insert_new = [&](QuasiClause c, int round, std::vector<std::size_t>& fresh) {
        if (accumulated.insert(std::move(c))) {
            added_round.push_back(round);
            fresh.push_back(accumulated.size() - 1);
        }
    };

    // round 1: clauses without positive premises
    std::vector<std::size_t> fresh;
    for (const GroundClause& gc : g.clauses()) {
        if (!gc.pos.empty()) continue;
        QuasiClause c;
        c.head = gc.head;
        c.neg = gc.neg;
        insert_new(std::move(c), 1, fresh);
    }
    if (fresh.empty()) return FixpointCompletion{std::move(accumulated), 1};

    std::map<AtomIndex, std::vector<std::size_t>> by_head;
    for (std::size_t idx = 0; idx < accumulated.size(); ++idx)
        by_head[accumulated.clauses()[idx].head].push_back(idx);

    for (int round = 2; round <= iteration_cap; ++round) {
        const int delta_round = round - 1;
        fresh.clear();
        for (const GroundClause& gc : g.clauses()) {
            if (gc.pos.empty()) continue;
            const std::size_t n = gc.pos.size();
            std::vector<const std::vector<std::size_t>*> pools(n);
            bool feasible = true;
            for (std::size_t k = 0; k < n && feasible; ++k) {
                auto it = by_head.find(gc.pos[k]);
                if (it == by_head.end()) feasible = false;
                else pools[k] = &it->second;
            }
            if (!feasible) continue;

            // position j holds the premise forced into the last round's
            // delta; earlier positions draw from strictly older clauses,
            // later ones from everything, so each tuple arises once
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t combos = 1;
                bool possible = true;
                auto pool_size = [&](std::size_t k) -> std::size_t {
                    std::size_t count = 0;
                    for (std::size_t idx : *pools[k]) {
                        int r = added_round[idx];
                        if (k < j ? r < delta_round : k == j ? r == delta_round : r <= delta_round)
                            ++count;
                    }
                    return count;
                };
                for (std::size_t k = 0; k < n && possible; ++k) {
                    std::size_t size = pool_size(k);
                    if (size == 0) possible = false;
                    else if (combos > combo_cap / size)
                        throw cap_exceeded("unfolding combinations for one clause exceed cap", 0,
                                           combo_cap);
                    else combos *= size;
                }
                if (!possible) continue;

                std::vector<std::vector<std::size_t>> choice(n);
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t idx : *pools[k]) {
                        int r = added_round[idx];
                        if (k < j ? r < delta_round : k == j ? r == delta_round : r <= delta_round)
                            choice[k].push_back(idx);
                    }
                std::vector<std::size_t> odo(n, 0);
                bool done = false;
                while (!done) {
                    QuasiClause unfolded;
                    unfolded.head = gc.head;
                    unfolded.neg = gc.neg;
                    for (std::size_t k = 0; k < n; ++k) {
                        const QuasiClause& picked = accumulated.clauses()[choice[k][odo[k]]];
                        unfolded.neg.insert(unfolded.neg.end(), picked.neg.begin(),
                                            picked.neg.end());
                    }
                    insert_new(std::move(unfolded), round, fresh);
                    done = true;
                    for (std::size_t k = n; k-- > 0;) {
                        if (++odo[k] < choice[k].size()) {
                            done = false;
                            break;
                        }
                        odo[k] = 0;
                    }
                }
            }
        }
        if (fresh.empty()) return FixpointCompletion{std::move(accumulated), round};
        for (std::size_t idx : fresh) by_head[accumulated.clauses()[idx].head].push_back(idx);
    }
    std::ostringstream os;
    os << "fixpoint completion did not stabilize within " << iteration_cap << " iterations";
    throw cap_exceeded(os.str(), 0, static_cast<std::uint64_t>(iteration_cap));
}

GroundProgram quasi_as_ground(const QuasiInterpretation& q) {
    GroundProgram g(q.base_ptr());
    g.grounding_bound = q.grounding_bound;
    g.exact = q.exact;
    for (const QuasiClause& c : q.clauses()) {
        GroundClause gc;
        gc.head = c.head;
        gc.neg = c.neg;
        g.add_clause(std::move(gc));
    }
    return g;
}

std::vector<std::size_t> non_subsumed_positions(const QuasiInterpretation& q) {
    const std::vector<QuasiClause>& cs = q.clauses();
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        bool subsumed = false;
        for (std::size_t j = 0; j < cs.size() && !subsumed; ++j) {
            if (i == j || cs[j].head != cs[i].head) continue;
            subsumed = std::includes(cs[i].neg.begin(), cs[i].neg.end(), cs[j].neg.begin(),
                                     cs[j].neg.end());
        }
        if (!subsumed) out.push_back(i);
    }
    return out;
}

CompletionFormula clark_completion(const QuasiInterpretation& q) {
    CompletionFormula c;
    c.base = q.base_ptr();
    c.disjuncts_per_atom.resize(q.base().size());
    for (const QuasiClause& qc : q.clauses()) c.disjuncts_per_atom[qc.head].push_back(qc.neg);
    return c;
}

bool satisfies_completion(const CompletionFormula& c, const Interpretation& i) {
    for (AtomIndex a = 0; a < c.disjuncts_per_atom.size(); ++a) {
        bool rhs = false;
        for (const std::vector<AtomIndex>& disjunct : c.disjuncts_per_atom[a]) {
            bool conj = true;
            for (AtomIndex b : disjunct)
                if (i.contains(b)) {
                    conj = false;
                    break;
                }
            if (conj) {
                rhs = true;
                break;
            }
        }
        if (rhs != i.contains(a)) return false;
    }
    return true;
}

std::vector<Interpretation> completion_models(const CompletionFormula& c,
                                              std::uint64_t interp_cap) {
    const std::size_t n = c.base->size();
    if (n >= 64 || (1ull << n) > interp_cap) {
        std::ostringstream os;
        os << "completion model search over " << n << " atoms exceeds cap " << interp_cap;
        throw cap_exceeded(os.str(), n < 64 ? (1ull << n) : ~0ull, interp_cap);
    }
    std::vector<Interpretation> models;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        Interpretation i = Interpretation::from_mask(n, mask);
        if (satisfies_completion(c, i)) models.push_back(std::move(i));
    }
    return models;
}

std::string to_lp(const QuasiInterpretation& q) {
    std::string s;
    for (const QuasiClause& c : q.clauses()) {
        s += q.base().name(c.head);
        if (!c.neg.empty()) {
            s += " :- ";
            for (std::size_t k = 0; k < c.neg.size(); ++k) {
                if (k) s += ", ";
                s += "not " + q.base().name(c.neg[k]);
            }
        }
        s += ".\n";
    }
    return s;
}

std::string to_string(const CompletionFormula& c) {
    std::string s;
    for (AtomIndex a = 0; a < c.disjuncts_per_atom.size(); ++a) {
        s += c.base->name(a) + " <-> ";
        const auto& disjuncts = c.disjuncts_per_atom[a];
        if (disjuncts.empty()) {
            s += "false";
        } else {
            for (std::size_t d = 0; d < disjuncts.size(); ++d) {
                if (d) s += " | ";
                if (disjuncts[d].empty()) {
                    s += "true";
                } else {
                    for (std::size_t k = 0; k < disjuncts[d].size(); ++k) {
                        if (k) s += " & ";
                        s += "~" + c.base->name(disjuncts[d][k]);
                    }
                }
            }
        }
        s += "\n";
    }
    return s;
}

} // namespace fixlog
