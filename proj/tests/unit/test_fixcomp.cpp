#include <doctest.h>

#include <random>

#include "fixlog/fixcomp.hpp"
#include "fixlog/semantics.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace fixlog;
using testutil::atom;
using testutil::interp;
using testutil::mk;

namespace {

QuasiClause qc(const GroundProgram& g, const char* head, std::initializer_list<const char*> neg) {
    QuasiClause c;
    c.head = atom(g, head);
    for (const char* n : neg) c.neg.push_back(atom(g, n));
    std::sort(c.neg.begin(), c.neg.end());
    return c;
}

} // namespace

TEST_CASE("tprime_step on hand examples") {
    GroundProgram p1 = mk(testutil::kP1);
    SUBCASE("only facts unfold against the empty quasi-interpretation") {
        QuasiInterpretation out = tprime_step(p1, QuasiInterpretation(p1.base_ptr()));
        REQUIRE(out.size() == 1);
        CHECK(out.contains(qc(p1, "q", {})));
    }
    SUBCASE("unfolding p through q") {
        QuasiInterpretation q(p1.base_ptr());
        q.insert(qc(p1, "q", {}));
        QuasiInterpretation out = tprime_step(p1, q);
        CHECK(out.size() == 2);
        CHECK(out.contains(qc(p1, "q", {})));
        CHECK(out.contains(qc(p1, "p", {"r"})));
    }
    SUBCASE("positive loop cannot unfold") {
        GroundProgram p4 = mk(testutil::kP4);
        CHECK(tprime_step(p4, QuasiInterpretation(p4.base_ptr())).size() == 0);
    }
}

TEST_CASE("fixpoint_completion on hand examples") {
    SUBCASE("P1 stabilizes at k = 3") {
        GroundProgram g = mk(testutil::kP1);
        FixpointCompletion fix = fixpoint_completion(g);
        CHECK(fix.stabilized_at == 3);
        REQUIRE(fix.fix.size() == 2);
        CHECK(fix.fix.contains(qc(g, "q", {})));
        CHECK(fix.fix.contains(qc(g, "p", {"r"})));
        // derivation order puts the fact first
        CHECK(fix.fix.clauses()[0].head == atom(g, "q"));
        CHECK(oracle::to_qset(fix.fix) == oracle::fixcomp(g));
    }
    SUBCASE("P4 is already fixed at the empty set") {
        GroundProgram g = mk(testutil::kP4);
        FixpointCompletion fix = fixpoint_completion(g);
        CHECK(fix.fix.size() == 0);
        CHECK(fix.stabilized_at == 1);
    }
    SUBCASE("P3 keeps its negative clause, k = 2") {
        GroundProgram g = mk(testutil::kP3);
        FixpointCompletion fix = fixpoint_completion(g);
        REQUIRE(fix.fix.size() == 1);
        CHECK(fix.fix.contains(qc(g, "p", {"p"})));
        CHECK(fix.stabilized_at == 2);
    }
    SUBCASE("P5 unfolds the move facts into the win rules") {
        GroundProgram g = mk(testutil::kP5);
        FixpointCompletion fix = fixpoint_completion(g);
        CHECK(fix.stabilized_at == 3);
        CHECK(fix.fix.size() == 6); // 3 move facts + 3 win clauses
        CHECK(fix.fix.contains(qc(g, "win(a)", {"win(b)"})));
        CHECK(fix.fix.contains(qc(g, "win(b)", {"win(a)"})));
        CHECK(fix.fix.contains(qc(g, "win(b)", {"win(c)"})));
        CHECK(oracle::to_qset(fix.fix) == oracle::fixcomp(g));
    }
}

TEST_CASE("quasi_as_ground re-tags clauses") {
    GroundProgram g = mk(testutil::kP1);
    FixpointCompletion fix = fixpoint_completion(g);
    GroundProgram as_ground = quasi_as_ground(fix.fix);
    CHECK(as_ground.clauses().size() == 2);
    CHECK(as_ground.base_ptr() == g.base_ptr());
    CHECK(quasi_as_ground(QuasiInterpretation(g.base_ptr())).clauses().empty());
}

TEST_CASE("fix(P) can be printed and re-parsed") {
    GroundProgram g = mk(testutil::kP5);
    FixpointCompletion fix = fixpoint_completion(g);
    GroundProgram reparsed = mk(to_lp(fix.fix));
    CHECK(reparsed.clauses().size() == fix.fix.size());
}

TEST_CASE("clark_completion on hand examples") {
    SUBCASE("fix(P2)") {
        GroundProgram g = mk(testutil::kP2);
        CompletionFormula c = clark_completion(fixpoint_completion(g).fix);
        REQUIRE(c.disjuncts_per_atom.size() == 2);
        AtomIndex p = atom(g, "p"), q = atom(g, "q");
        REQUIRE(c.disjuncts_per_atom[p].size() == 1);
        CHECK(c.disjuncts_per_atom[p][0] == std::vector<AtomIndex>{q});
        REQUIRE(c.disjuncts_per_atom[q].size() == 1);
        CHECK(c.disjuncts_per_atom[q][0] == std::vector<AtomIndex>{p});
    }
    SUBCASE("atom with no clause maps to false") {
        GroundProgram g = mk(testutil::kP1);
        QuasiInterpretation empty(g.base_ptr());
        CompletionFormula c = clark_completion(empty);
        for (const auto& disjuncts : c.disjuncts_per_atom) CHECK(disjuncts.empty());
        CHECK(completion_models(c).size() == 1); // only the empty interpretation
    }
    SUBCASE("fix(P1): q true, p iff not r, r false") {
        GroundProgram g = mk(testutil::kP1);
        CompletionFormula c = clark_completion(fixpoint_completion(g).fix);
        CHECK(c.disjuncts_per_atom[atom(g, "q")] ==
              std::vector<std::vector<AtomIndex>>{{}});
        CHECK(c.disjuncts_per_atom[atom(g, "p")] ==
              std::vector<std::vector<AtomIndex>>{{atom(g, "r")}});
        CHECK(c.disjuncts_per_atom[atom(g, "r")].empty());
    }
}

TEST_CASE("completion_models on hand examples") {
    SUBCASE("fix(P2) has exactly the two stable models") {
        GroundProgram g = mk(testutil::kP2);
        auto models = completion_models(clark_completion(fixpoint_completion(g).fix));
        REQUIRE(models.size() == 2);
        CHECK(std::count(models.begin(), models.end(), interp(g, {"p"})) == 1);
        CHECK(std::count(models.begin(), models.end(), interp(g, {"q"})) == 1);
    }
    SUBCASE("p <-> not p is unsatisfiable") {
        GroundProgram g = mk(testutil::kP3);
        CHECK(completion_models(clark_completion(fixpoint_completion(g).fix)).empty());
    }
    SUBCASE("fix(P1) has the single model {q,p}") {
        GroundProgram g = mk(testutil::kP1);
        auto models = completion_models(clark_completion(fixpoint_completion(g).fix));
        REQUIRE(models.size() == 1);
        CHECK(models[0] == interp(g, {"q", "p"}));
    }
    SUBCASE("cap is enforced") {
        GroundProgram g = mk(testutil::kP1);
        CHECK_THROWS_AS(completion_models(clark_completion(fixpoint_completion(g).fix), 4),
                        cap_exceeded);
    }
}

TEST_CASE("theorem 1: GL equals tp over the fixpoint completion") {
    CorpusSpec spec{21, 10, 15, 3, 0.5, false};
    for (const GroundProgram& g : generate_corpus(spec, 40)) {
        GroundProgram fix = quasi_as_ground(fixpoint_completion(g).fix);
        for (std::uint64_t mask = 0; mask < (1ull << g.base().size()); ++mask) {
            Interpretation i = Interpretation::from_mask(g.base().size(), mask);
            REQUIRE(gl_operator(g, i) == tp_step(fix, i));
        }
    }
}

TEST_CASE("theorem 1 negative control: a dropped load-bearing clause is detected") {
    CorpusSpec spec{22, 8, 12, 3, 0.5, false};
    std::mt19937_64 rng(22);
    int detected = 0, mutated = 0;
    for (const GroundProgram& g : generate_corpus(spec, 30)) {
        QuasiInterpretation fix = fixpoint_completion(g).fix;
        if (fix.size() == 0) continue;
        ++mutated;
        std::vector<std::size_t> candidates = non_subsumed_positions(fix);
        REQUIRE_FALSE(candidates.empty());
        std::size_t victim = candidates[rng() % candidates.size()];
        CheckReport report = check_gl_vs_quasi(g, drop_clause(fix, victim));
        if (report.status == CheckReport::Status::fail) ++detected;
    }
    REQUIRE(mutated > 10);
    CHECK(detected == mutated);
}

TEST_CASE("proposition 1: ladders agree rung by rung") {
    CorpusSpec spec{23, 10, 15, 3, 0.0, false};
    for (const GroundProgram& g : generate_corpus(spec, 30)) {
        Interpretation tp_rung(g.base().size());
        QuasiInterpretation tprime_rung(g.base_ptr());
        for (int n = 1; n < 64; ++n) {
            Interpretation tp_next = tp_step(g, tp_rung);
            QuasiInterpretation tprime_next = tprime_step(g, tprime_rung);
            Interpretation heads(g.base().size());
            for (const QuasiClause& c : tprime_next.clauses()) {
                REQUIRE(c.neg.empty());
                heads.add(c.head);
            }
            REQUIRE(heads == tp_next);
            if (tp_next == tp_rung) break;
            tp_rung = std::move(tp_next);
            tprime_rung = std::move(tprime_next);
        }
    }
}

TEST_CASE("tprime_step is monotone on quasi-interpretations") {
    // exhaustive at tiny scale: all quasi-interpretations over 2 atoms with
    // single-atom bodies, 2 heads x 4 bodies = 8 candidate clauses
    GroundProgram g = mk("p :- q, not p.\nq :- not p.\np.\n");
    std::vector<QuasiClause> pool;
    for (AtomIndex h = 0; h < 2; ++h)
        for (std::uint64_t body = 0; body < 4; ++body) {
            QuasiClause c;
            c.head = h;
            for (AtomIndex b = 0; b < 2; ++b)
                if (body & (1ull << b)) c.neg.push_back(b);
            pool.push_back(c);
        }
    auto build = [&](std::uint64_t mask) {
        QuasiInterpretation q(g.base_ptr());
        for (std::size_t k = 0; k < pool.size(); ++k)
            if (mask & (1ull << k)) q.insert(pool[k]);
        return q;
    };
    for (std::uint64_t sub = 0; sub < 256; ++sub)
        for (std::uint64_t super = sub;; super = (super + 1) | sub) {
            if (super >= 256) break;
            QuasiInterpretation small = build(sub);
            QuasiInterpretation large = build(super);
            CHECK(tprime_step(g, small).subset_of(tprime_step(g, large)));
            if (super == 255) break;
        }
}

TEST_CASE("tprime_step is monotone on sampled corpus quasi-interpretations") {
    CorpusSpec spec{26, 8, 12, 3, 0.5, false};
    std::mt19937_64 rng(26);
    for (const GroundProgram& g : generate_corpus(spec, 15)) {
        QuasiInterpretation fix = fixpoint_completion(g).fix;
        if (fix.size() == 0) continue;
        // random subset pair small <= large of the completion's clauses
        QuasiInterpretation small(g.base_ptr()), large(g.base_ptr());
        for (const QuasiClause& c : fix.clauses()) {
            bool in_large = rng() & 1;
            if (in_large) large.insert(c);
            if (in_large && (rng() & 1)) small.insert(c);
        }
        CHECK(tprime_step(g, small).subset_of(tprime_step(g, large)));
    }
}

TEST_CASE("non_subsumed_positions keeps exactly the minimal clauses") {
    GroundProgram g = testutil::mk("a :- not b.\nc.\n");
    QuasiInterpretation q(g.base_ptr());
    AtomIndex a = testutil::atom(g, "a"), b = testutil::atom(g, "b"),
              c = testutil::atom(g, "c");
    q.insert(QuasiClause{a, {b}});
    q.insert(QuasiClause{a, {b, c}}); // subsumed by the previous clause
    q.insert(QuasiClause{c, {}});
    CHECK(non_subsumed_positions(q) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("supported models are the completion models") {
    CorpusSpec spec{24, 9, 13, 3, 0.6, false};
    for (const GroundProgram& g : generate_corpus(spec, 25)) {
        QuasiInterpretation fix = fixpoint_completion(g).fix;
        GroundProgram as_ground = quasi_as_ground(fix);
        CompletionFormula completion = clark_completion(fix);
        for (std::uint64_t mask = 0; mask < (1ull << g.base().size()); ++mask) {
            Interpretation i = Interpretation::from_mask(g.base().size(), mask);
            REQUIRE(satisfies_completion(completion, i) == (tp_step(as_ground, i) == i));
        }
    }
}

TEST_CASE("every quasi-clause has a positive-derivation witness") {
    CorpusSpec spec{25, 8, 12, 3, 0.5, false};
    for (const GroundProgram& g : generate_corpus(spec, 25)) {
        FixpointCompletion fix = fixpoint_completion(g);
        for (const QuasiClause& c : fix.fix.clauses()) {
            // with the clause body's atoms false, the head must be derivable
            Interpretation i = Interpretation::full(g.base().size());
            for (AtomIndex b : c.neg) i.erase(b);
            CHECK(gl_operator(g, i).contains(c.head));
        }
    }
}
