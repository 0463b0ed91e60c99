#pragma once

#include "fixlog/interpretation.hpp"

namespace fixlog {

// A ground program with no negative body literals.  Construction checks the
// invariant; the enumeration is shared with the parent program.
class DefiniteProgram {
public:
    explicit DefiniteProgram(GroundProgram g);

    const GroundProgram& program() const { return program_; }

private:
    GroundProgram program_;
};

// Single-step consequence operator: heads of clauses whose body is true in i.
Interpretation tp_step(const GroundProgram& g, const Interpretation& i);

// Least fixed point of tp_step, computed by worklist propagation from the
// empty interpretation.
Interpretation least_model(const DefiniteProgram& d);

// Gelfond-Lifschitz transform g/i: drop clauses with a negated atom true in
// i, strip the remaining negative literals.
DefiniteProgram gl_transform(const GroundProgram& g, const Interpretation& i);

// i |-> least model of g/i.  Fixed points are the stable models.
Interpretation gl_operator(const GroundProgram& g, const Interpretation& i);

// One application of the three-valued consequence operator: an atom becomes
// true when some clause body is entirely true, false when every clause for
// it has a false body literal (vacuously false when it heads no clause).
ThreeValuedInterpretation fitting_step(const GroundProgram& g,
                                       const ThreeValuedInterpretation& i3);

// Least fixed point of fitting_step from the all-undefined interpretation.
ThreeValuedInterpretation fitting_model(const GroundProgram& g);

Interpretation positive_part(const ThreeValuedInterpretation& i3);

// True iff every clause is satisfied: body true implies head true.
bool is_model(const GroundProgram& g, const Interpretation& i);

} // namespace fixlog
