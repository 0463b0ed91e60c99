#include "fixlog/operators.hpp"

#include <stdexcept>

namespace fixlog {

DefiniteProgram::DefiniteProgram(GroundProgram g) : program_(std::move(g)) {
    for (const GroundClause& c : program_.clauses())
        if (!c.definite())
            throw std::invalid_argument("definite program must not contain negative body literals");
}

Interpretation tp_step(const GroundProgram& g, const Interpretation& i) {
    Interpretation out(g.base().size());
    for (const GroundClause& c : g.clauses()) {
        bool body_true = true;
        for (AtomIndex a : c.pos)
            if (!i.contains(a)) {
                body_true = false;
                break;
            }
        if (body_true)
            for (AtomIndex a : c.neg)
                if (i.contains(a)) {
                    body_true = false;
                    break;
                }
        if (body_true) out.add(c.head);
    }
    return out;
}

namespace {

// Worklist propagation: count unsatisfied positive premises per clause, fire
// heads as counts reach zero.  Clauses are given as (head, pos) pairs.
Interpretation propagate_least_model(std::size_t universe,
                                     const std::vector<const GroundClause*>& clauses) {
    Interpretation model(universe);
    std::vector<std::size_t> missing(clauses.size());
    std::vector<std::vector<std::size_t>> watchers(universe);
    std::vector<AtomIndex> queue;

    for (std::size_t ci = 0; ci < clauses.size(); ++ci) {
        missing[ci] = clauses[ci]->pos.size();
        for (AtomIndex a : clauses[ci]->pos) watchers[a].push_back(ci);
        if (missing[ci] == 0 && !model.contains(clauses[ci]->head)) {
            model.add(clauses[ci]->head);
            queue.push_back(clauses[ci]->head);
        }
    }
    while (!queue.empty()) {
        AtomIndex a = queue.back();
        queue.pop_back();
        for (std::size_t ci : watchers[a]) {
            if (missing[ci] == 0) continue;
            if (--missing[ci] == 0) {
                AtomIndex h = clauses[ci]->head;
                if (!model.contains(h)) {
                    model.add(h);
                    queue.push_back(h);
                }
            }
        }
    }
    return model;
}

} // namespace

Interpretation least_model(const DefiniteProgram& d) {
    const GroundProgram& g = d.program();
    std::vector<const GroundClause*> clauses;
    clauses.reserve(g.clauses().size());
    for (const GroundClause& c : g.clauses()) clauses.push_back(&c);
    return propagate_least_model(g.base().size(), clauses);
}

DefiniteProgram gl_transform(const GroundProgram& g, const Interpretation& i) {
    GroundProgram reduced(g.base_ptr());
    reduced.grounding_bound = g.grounding_bound;
    reduced.exact = g.exact;
    for (const GroundClause& c : g.clauses()) {
        bool dropped = false;
        for (AtomIndex b : c.neg)
            if (i.contains(b)) {
                dropped = true;
                break;
            }
        if (dropped) continue;
        GroundClause kept;
        kept.head = c.head;
        kept.pos = c.pos;
        reduced.add_clause(std::move(kept));
    }
    return DefiniteProgram(std::move(reduced));
}

Interpretation gl_operator(const GroundProgram& g, const Interpretation& i) {
    // fused transform + propagation; equals least_model(gl_transform(g, i))
    std::vector<const GroundClause*> kept;
    kept.reserve(g.clauses().size());
    for (const GroundClause& c : g.clauses()) {
        bool dropped = false;
        for (AtomIndex b : c.neg)
            if (i.contains(b)) {
                dropped = true;
                break;
            }
        if (!dropped) kept.push_back(&c);
    }
    return propagate_least_model(g.base().size(), kept);
}

ThreeValuedInterpretation fitting_step(const GroundProgram& g,
                                       const ThreeValuedInterpretation& i3) {
    const std::size_t n = g.base().size();
    Interpretation t(n);
    Interpretation f = Interpretation::full(n); // atoms heading no clause stay false
    for (const GroundClause& c : g.clauses()) {
        bool all_true = true;
        bool some_false = false;
        for (AtomIndex a : c.pos) {
            auto v = i3.value(a);
            if (v != ThreeValuedInterpretation::Value::is_true) all_true = false;
            if (v == ThreeValuedInterpretation::Value::is_false) some_false = true;
        }
        for (AtomIndex a : c.neg) {
            auto v = i3.value(a);
            if (v != ThreeValuedInterpretation::Value::is_false) all_true = false;
            if (v == ThreeValuedInterpretation::Value::is_true) some_false = true;
        }
        if (all_true) t.add(c.head);
        if (!some_false) f.erase(c.head);
    }
    return ThreeValuedInterpretation(std::move(t), std::move(f));
}

ThreeValuedInterpretation fitting_model(const GroundProgram& g) {
    ThreeValuedInterpretation current(g.base().size());
    while (true) {
        ThreeValuedInterpretation next = fitting_step(g, current);
        if (next == current) return current;
        current = std::move(next);
    }
}

Interpretation positive_part(const ThreeValuedInterpretation& i3) { return i3.true_set(); }

bool is_model(const GroundProgram& g, const Interpretation& i) {
    for (const GroundClause& c : g.clauses()) {
        bool body_true = true;
        for (AtomIndex a : c.pos)
            if (!i.contains(a)) {
                body_true = false;
                break;
            }
        if (body_true)
            for (AtomIndex a : c.neg)
                if (i.contains(a)) {
                    body_true = false;
                    break;
                }
        if (body_true && !i.contains(c.head)) return false;
    }
    return true;
}

} // namespace fixlog
