#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fixlog/errors.hpp"

namespace fixlog {

// First-order terms. Constants are lowercase-initial identifiers or numerals,
// variables are uppercase- or underscore-initial, compounds have arity >= 1.
struct Term {
    enum class Kind { variable, constant, compound };

    Kind kind = Kind::constant;
    std::string name;
    std::vector<Term> args; // empty unless compound

    static Term var(std::string n) { return Term{Kind::variable, std::move(n), {}}; }
    static Term constant(std::string n) { return Term{Kind::constant, std::move(n), {}}; }
    static Term compound(std::string n, std::vector<Term> a) {
        return Term{Kind::compound, std::move(n), std::move(a)};
    }

    // constants/variables have depth 0, compounds 1 + max child depth
    int depth() const;
    bool is_ground() const;

    bool operator==(const Term& other) const;
    bool operator!=(const Term& other) const { return !(*this == other); }
};

struct Atom {
    std::string predicate;
    std::vector<Term> args;

    std::size_t arity() const { return args.size(); }
    bool is_ground() const;

    bool operator==(const Atom& other) const;
    bool operator!=(const Atom& other) const { return !(*this == other); }
};

// A ::- A_1,...,A_n, not B_1,...,not B_m.  Order within each list follows the
// source text; n = m = 0 is a fact.
struct Clause {
    Atom head;
    std::vector<Atom> pos_body;
    std::vector<Atom> neg_body;

    bool definite() const { return neg_body.empty(); }
    bool is_fact() const { return pos_body.empty() && neg_body.empty(); }
};

// A parsed normal logic program together with its symbol table.  Constants
// and functors are recorded in first-occurrence order; predicates must be
// used with a consistent arity.
struct Program {
    std::vector<Clause> clauses;
    std::vector<std::string> constants;
    std::vector<std::pair<std::string, std::size_t>> functors;
    std::map<std::string, std::size_t> predicate_arity;

    bool has_function_symbols() const { return !functors.empty(); }
};

// Parses the `.lp` surface syntax:
//   rule:     head :- lit1, ..., litk.
//   fact:     head.
//   literal:  atom | not atom | \+ atom
//   atom:     name | name(t1,...,tn)
//   term:     constant | Variable | functor(t1,...,tn)
//   comment:  % to end of line
// Throws parse_error with 1-based line/column on malformed input and on
// arity conflicts.
Program parse_program(std::string_view text);

std::string to_string(const Term& t);
std::string to_string(const Atom& a);
std::string to_string(const Clause& c);
std::string to_lp(const Program& p);

struct LocalVariableScan {
    bool found = false;
    std::vector<std::size_t> clause_indices; // offending clauses
};

// True iff some clause body contains a variable absent from its head.
LocalVariableScan has_local_variables(const Program& p);

} // namespace fixlog
