#include <doctest.h>

#include "fixlog/operators.hpp"
#include "fixlog/semantics.hpp"

#include "helpers.hpp"
#include "oracles.hpp"

using namespace fixlog;
using testutil::interp;
using testutil::mk;

namespace {

// enumerate all pairs I subset-of J over n atoms and apply f
template <typename F>
void for_all_inclusion_pairs(std::size_t n, F&& f) {
    for (std::uint64_t j = 0; j < (1ull << n); ++j)
        for (std::uint64_t i = j;; i = (i - 1) & j) { // submask walk
            f(Interpretation::from_mask(n, i), Interpretation::from_mask(n, j));
            if (i == 0) break;
        }
}

} // namespace

TEST_CASE("tp_step on hand examples") {
    SUBCASE("fix(P1) under {r}") {
        GroundProgram g = mk("q.\np :- not r.\n");
        Interpretation i = interp(g, {"r"});
        Interpretation expected = interp(g, {"q"});
        CHECK(tp_step(g, i) == expected);
        CHECK(oracle::to_set(tp_step(g, i)) == oracle::tp(g, oracle::to_set(i)));
    }
    SUBCASE("empty program") {
        GroundProgram g;
        CHECK(tp_step(g, Interpretation(0)).empty());
    }
    SUBCASE("P2 under the empty interpretation") {
        GroundProgram g = mk(testutil::kP2);
        CHECK(tp_step(g, Interpretation(g.base().size())) == interp(g, {"p", "q"}));
    }
}

TEST_CASE("least_model on hand examples") {
    SUBCASE("chain") {
        GroundProgram g = mk("a.\nb :- a.\nc :- b.\n");
        Interpretation lm = least_model(DefiniteProgram(g));
        CHECK(lm == interp(g, {"a", "b", "c"}));
        CHECK(oracle::to_set(lm) == oracle::gl(g, {}));
    }
    SUBCASE("empty program") {
        CHECK(least_model(DefiniteProgram(GroundProgram())).empty());
    }
    SUBCASE("positive loop derives nothing") {
        GroundProgram g = mk(testutil::kP4);
        CHECK(least_model(DefiniteProgram(g)).empty());
    }
}

TEST_CASE("gl_transform on hand examples") {
    SUBCASE("P2 under {p}") {
        GroundProgram g = mk(testutil::kP2);
        DefiniteProgram d = gl_transform(g, interp(g, {"p"}));
        REQUIRE(d.program().clauses().size() == 1);
        CHECK(d.program().clauses()[0].head == testutil::atom(g, "p"));
        CHECK(d.program().clauses()[0].pos.empty());
    }
    SUBCASE("definite programs pass through unchanged") {
        GroundProgram g = mk("a.\nb :- a.\n");
        DefiniteProgram d = gl_transform(g, interp(g, {"a", "b"}));
        CHECK(d.program().clauses().size() == g.clauses().size());
    }
    SUBCASE("P3 under {p} drops everything") {
        GroundProgram g = mk(testutil::kP3);
        CHECK(gl_transform(g, interp(g, {"p"})).program().clauses().empty());
    }
}

TEST_CASE("gl_operator on hand examples") {
    SUBCASE("P2: {p} is stable") {
        GroundProgram g = mk(testutil::kP2);
        CHECK(gl_operator(g, interp(g, {"p"})) == interp(g, {"p"}));
    }
    SUBCASE("P3 has no fixed point") {
        GroundProgram g = mk(testutil::kP3);
        CHECK(gl_operator(g, Interpretation(1)) == interp(g, {"p"}));
        CHECK(gl_operator(g, interp(g, {"p"})).empty());
    }
    SUBCASE("P4 maps everything to empty") {
        GroundProgram g = mk(testutil::kP4);
        CHECK(gl_operator(g, Interpretation(1)).empty());
        CHECK(gl_operator(g, interp(g, {"p"})).empty());
    }
}

TEST_CASE("gl_operator equals least_model of gl_transform") {
    CorpusSpec spec{7, 6, 9, 3, 0.5, false};
    for (const GroundProgram& g : generate_corpus(spec, 25)) {
        for (std::uint64_t mask = 0; mask < (1ull << g.base().size()); mask += 7) {
            Interpretation i = Interpretation::from_mask(g.base().size(), mask);
            CHECK(gl_operator(g, i) == least_model(gl_transform(g, i)));
        }
    }
}

TEST_CASE("fitting_step on hand examples") {
    SUBCASE("P1 from all-undefined") {
        GroundProgram g = mk(testutil::kP1);
        ThreeValuedInterpretation out = fitting_step(g, ThreeValuedInterpretation(3));
        CHECK(out.true_set() == interp(g, {"q"}));
        CHECK(out.false_set() == interp(g, {"r"})); // r heads no clause
    }
    SUBCASE("P3 is stuck at all-undefined") {
        GroundProgram g = mk(testutil::kP3);
        ThreeValuedInterpretation out = fitting_step(g, ThreeValuedInterpretation(1));
        CHECK(out.true_set().empty());
        CHECK(out.false_set().empty());
    }
    SUBCASE("empty program makes the whole base false") {
        GroundProgram g = mk(testutil::kP1);
        GroundProgram empty(g.base_ptr());
        ThreeValuedInterpretation out = fitting_step(empty, ThreeValuedInterpretation(3));
        CHECK(out.true_set().empty());
        CHECK(out.false_set() == Interpretation::full(3));
    }
}

TEST_CASE("fitting_model on hand examples") {
    SUBCASE("fix(P1)") {
        GroundProgram g = mk("q.\np :- not r.\n");
        ThreeValuedInterpretation m = fitting_model(g);
        CHECK(m.true_set() == interp(g, {"q", "p"}));
        CHECK(m.false_set() == interp(g, {"r"}));
        oracle::Pair3 ref = oracle::fitting(g);
        CHECK(oracle::to_set(m.true_set()) == ref.t);
        CHECK(oracle::to_set(m.false_set()) == ref.f);
    }
    SUBCASE("fix(P3) leaves p undefined") {
        GroundProgram g = mk(testutil::kP3);
        ThreeValuedInterpretation m = fitting_model(g);
        CHECK(m.true_set().empty());
        CHECK(m.false_set().empty());
        CHECK_FALSE(m.total());
    }
    SUBCASE("definite program: true part is the least model") {
        GroundProgram g = mk("a.\nb :- a.\n");
        ThreeValuedInterpretation m = fitting_model(g);
        CHECK(m.true_set() == least_model(DefiniteProgram(g)));
        CHECK(m.total());
    }
}

TEST_CASE("positive_part projects the true set") {
    GroundProgram g = mk(testutil::kP1);
    ThreeValuedInterpretation m = fitting_model(mk("q.\np :- not r.\n"));
    CHECK(positive_part(m) == interp(g, {"q", "p"}));
    CHECK(positive_part(ThreeValuedInterpretation(4)).empty());
}

TEST_CASE("tp_step is monotone on definite programs") {
    CorpusSpec spec{11, 8, 12, 3, 0.0, false};
    for (const GroundProgram& g : generate_corpus(spec, 12)) {
        for_all_inclusion_pairs(g.base().size(), [&](const Interpretation& i,
                                                     const Interpretation& j) {
            CHECK(tp_step(g, i).subset_of(tp_step(g, j)));
        });
    }
}

TEST_CASE("least_model is the least fixed point") {
    CorpusSpec spec{12, 8, 12, 3, 0.0, false};
    for (const GroundProgram& g : generate_corpus(spec, 12)) {
        Interpretation lm = least_model(DefiniteProgram(g));
        CHECK(tp_step(g, lm) == lm);
        for (std::uint64_t mask = 0; mask < (1ull << g.base().size()); ++mask) {
            Interpretation i = Interpretation::from_mask(g.base().size(), mask);
            if (tp_step(g, i) == i) CHECK(lm.subset_of(i));
        }
    }
}

TEST_CASE("gl_operator is anti-monotone") {
    CorpusSpec spec{13, 8, 12, 3, 0.6, false};
    for (const GroundProgram& g : generate_corpus(spec, 12)) {
        for_all_inclusion_pairs(g.base().size(), [&](const Interpretation& i,
                                                     const Interpretation& j) {
            CHECK(gl_operator(g, j).subset_of(gl_operator(g, i)));
        });
    }
}

TEST_CASE("fitting_step is monotone in the knowledge order") {
    CorpusSpec spec{14, 4, 7, 3, 0.5, false};
    for (const GroundProgram& g : generate_corpus(spec, 8)) {
        const std::size_t n = g.base().size();
        std::vector<ThreeValuedInterpretation> all;
        for (std::uint64_t t = 0; t < (1ull << n); ++t)
            for (std::uint64_t f = 0; f < (1ull << n); ++f) {
                if (t & f) continue;
                all.emplace_back(Interpretation::from_mask(n, t), Interpretation::from_mask(n, f));
            }
        for (const auto& a : all)
            for (const auto& b : all) {
                if (!a.leq_knowledge(b)) continue;
                CHECK(fitting_step(g, a).leq_knowledge(fitting_step(g, b)));
            }
    }
}

TEST_CASE("fitting true part equals least_model on definite programs") {
    CorpusSpec spec{15, 9, 14, 3, 0.0, false};
    for (const GroundProgram& g : generate_corpus(spec, 20))
        CHECK(fitting_model(g).true_set() == least_model(DefiniteProgram(g)));
}

TEST_CASE("models are exactly the post-fixed points of tp_step") {
    CorpusSpec spec{16, 7, 11, 3, 0.5, false};
    for (const GroundProgram& g : generate_corpus(spec, 12)) {
        for (std::uint64_t mask = 0; mask < (1ull << g.base().size()); ++mask) {
            Interpretation i = Interpretation::from_mask(g.base().size(), mask);
            CHECK(is_model(g, i) == tp_step(g, i).subset_of(i));
        }
    }
}

TEST_CASE("definite program construction rejects negative bodies") {
    CHECK_THROWS_AS(DefiniteProgram(mk(testutil::kP3)), std::invalid_argument);
}
