#pragma once

#include <initializer_list>
#include <string>

#include "fixlog/ground.hpp"
#include "fixlog/interpretation.hpp"

namespace testutil {

inline fixlog::GroundProgram mk(const std::string& text, int bound = 0) {
    return fixlog::ground_program(fixlog::parse_program(text), bound);
}

inline fixlog::Interpretation interp(const fixlog::GroundProgram& g,
                                     std::initializer_list<const char*> atoms) {
    fixlog::Interpretation i(g.base().size());
    for (const char* name : atoms) {
        auto idx = g.base().find(name);
        REQUIRE(idx.has_value());
        i.add(*idx);
    }
    return i;
}

inline fixlog::AtomIndex atom(const fixlog::GroundProgram& g, const char* name) {
    auto idx = g.base().find(name);
    REQUIRE(idx.has_value());
    return *idx;
}

// the six hand programs
inline const char* kP1 = "p :- q, not r.\nq.\n";
inline const char* kP2 = "p :- not q.\nq :- not p.\n";
inline const char* kP3 = "p :- not p.\n";
inline const char* kP4 = "p :- p.\n";
inline const char* kP5 = "win(X) :- move(X,Y), not win(Y).\nmove(a,b).\nmove(b,a).\nmove(b,c).\n";
inline const char* kP6 = "p :- not q.\nq :- not r.\nr.\n";

} // namespace testutil
