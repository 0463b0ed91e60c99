#include "fixlog/ground.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fixlog {

AtomIndex AtomEnumeration::intern(const std::string& name) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    AtomIndex idx = static_cast<AtomIndex>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
}

std::optional<AtomIndex> AtomEnumeration::find(std::string_view name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool GroundProgram::add_clause(GroundClause c) {
    std::sort(c.pos.begin(), c.pos.end());
    c.pos.erase(std::unique(c.pos.begin(), c.pos.end()), c.pos.end());
    std::sort(c.neg.begin(), c.neg.end());
    c.neg.erase(std::unique(c.neg.begin(), c.neg.end()), c.neg.end());
    auto key = std::make_tuple(c.head, c.pos, c.neg);
    if (!seen_.insert(std::move(key)).second) return false;
    clauses_.push_back(std::move(c));
    return true;
}

namespace {

// Ground terms of depth <= bound over the program's constants and functors,
// in deterministic generation order.
std::vector<Term> term_universe(const Program& p, int bound,
                                const std::vector<std::string>& constants) {
    std::vector<Term> universe;
    for (const std::string& c : constants) universe.push_back(Term::constant(c));
    for (int d = 1; d <= bound; ++d) {
        if (universe.empty()) break;
        const std::vector<Term> prev = universe; // terms of depth <= d-1
        std::vector<Term> fresh;
        for (const auto& [fname, arity] : p.functors) {
            std::vector<std::size_t> odo(arity, 0);
            bool done = false;
            while (!done) {
                std::vector<Term> args;
                args.reserve(arity);
                for (std::size_t k = 0; k < arity; ++k) args.push_back(prev[odo[k]]);
                Term t = Term::compound(fname, std::move(args));
                if (t.depth() == d) fresh.push_back(std::move(t));
                done = true;
                for (std::size_t k = arity; k-- > 0;) {
                    if (++odo[k] < prev.size()) {
                        done = false;
                        break;
                    }
                    odo[k] = 0;
                }
            }
        }
        if (fresh.empty()) break;
        universe.insert(universe.end(), fresh.begin(), fresh.end());
    }
    return universe;
}

void clause_variables(const Clause& c, std::vector<std::string>& out) {
    auto visit_term = [&](const Term& t, auto&& self) -> void {
        if (t.kind == Term::Kind::variable) {
            if (std::find(out.begin(), out.end(), t.name) == out.end()) out.push_back(t.name);
        } else {
            for (const Term& a : t.args) self(a, self);
        }
    };
    auto visit_atom = [&](const Atom& a) {
        for (const Term& t : a.args) visit_term(t, visit_term);
    };
    visit_atom(c.head);
    for (const Atom& a : c.pos_body) visit_atom(a);
    for (const Atom& a : c.neg_body) visit_atom(a);
}

Term substitute(const Term& t, const std::map<std::string, const Term*>& sub) {
    switch (t.kind) {
    case Term::Kind::variable: return *sub.at(t.name);
    case Term::Kind::constant: return t;
    case Term::Kind::compound: {
        std::vector<Term> args;
        args.reserve(t.args.size());
        for (const Term& a : t.args) args.push_back(substitute(a, sub));
        return Term::compound(t.name, std::move(args));
    }
    }
    return t;
}

Atom substitute(const Atom& a, const std::map<std::string, const Term*>& sub) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args) out.args.push_back(substitute(t, sub));
    return out;
}

int atom_term_depth(const Atom& a) {
    int d = 0;
    for (const Term& t : a.args) d = std::max(d, t.depth());
    return d;
}

} // namespace

GroundProgram ground_program(const Program& p, int depth_bound, std::uint64_t instance_cap) {
    std::vector<std::string> constants = p.constants;
    std::vector<std::string> warnings;

    bool any_vars = false;
    for (const Clause& c : p.clauses) {
        std::vector<std::string> vars;
        clause_variables(c, vars);
        if (!vars.empty()) any_vars = true;
    }
    if (any_vars && constants.empty()) {
        std::string fresh = "c0";
        int suffix = 0;
        while (std::find(constants.begin(), constants.end(), fresh) != constants.end())
            fresh = "c" + std::to_string(++suffix);
        constants.push_back(fresh);
        warnings.push_back("no constants declared; injected fresh constant '" + fresh + "'");
    }

    std::vector<Term> universe = term_universe(p, depth_bound, constants);

    // explosion guard: estimate before enumerating
    {
        long double estimate = 0;
        for (const Clause& c : p.clauses) {
            std::vector<std::string> vars;
            clause_variables(c, vars);
            long double n = 1;
            for (std::size_t k = 0; k < vars.size(); ++k) n *= static_cast<long double>(universe.size());
            estimate += n;
        }
        if (estimate > static_cast<long double>(instance_cap)) {
            std::uint64_t est = estimate > 1e18L ? ~0ull : static_cast<std::uint64_t>(estimate);
            std::ostringstream os;
            os << "grounding would produce about " << est << " instances (cap " << instance_cap
               << ")";
            throw cap_exceeded(os.str(), est, instance_cap);
        }
    }

    auto base = std::make_shared<AtomEnumeration>();
    GroundProgram g(base);
    g.grounding_bound = depth_bound;
    g.exact = p.functors.empty() || !any_vars;
    g.warnings = std::move(warnings);

    auto intern_atom = [&](const Atom& a) { return base->intern(to_string(a)); };

    auto emit_instance = [&](const Clause& instance) {
        int depth = atom_term_depth(instance.head);
        for (const Atom& a : instance.pos_body) depth = std::max(depth, atom_term_depth(a));
        for (const Atom& a : instance.neg_body) depth = std::max(depth, atom_term_depth(a));
        if (depth > depth_bound) return;
        GroundClause gc;
        gc.head = intern_atom(instance.head);
        for (const Atom& a : instance.pos_body) gc.pos.push_back(intern_atom(a));
        for (const Atom& a : instance.neg_body) gc.neg.push_back(intern_atom(a));
        g.add_clause(std::move(gc));
    };

    for (const Clause& c : p.clauses) {
        std::vector<std::string> vars;
        clause_variables(c, vars);
        if (vars.empty()) {
            emit_instance(c);
            continue;
        }
        std::vector<std::size_t> odo(vars.size(), 0);
        while (true) {
            std::map<std::string, const Term*> sub;
            for (std::size_t k = 0; k < vars.size(); ++k) sub[vars[k]] = &universe[odo[k]];
            Clause instance;
            instance.head = substitute(c.head, sub);
            for (const Atom& a : c.pos_body) instance.pos_body.push_back(substitute(a, sub));
            for (const Atom& a : c.neg_body) instance.neg_body.push_back(substitute(a, sub));
            emit_instance(instance);
            std::size_t k = vars.size();
            bool done = true;
            while (k > 0) {
                --k;
                if (++odo[k] < universe.size()) {
                    done = false;
                    break;
                }
                odo[k] = 0;
            }
            if (done) break;
        }
    }
    return g;
}

std::string to_string(const GroundProgram& g, const GroundClause& c) {
    std::string s = g.base().name(c.head);
    if (!c.pos.empty() || !c.neg.empty()) {
        s += " :- ";
        bool first = true;
        for (AtomIndex a : c.pos) {
            if (!first) s += ", ";
            first = false;
            s += g.base().name(a);
        }
        for (AtomIndex a : c.neg) {
            if (!first) s += ", ";
            first = false;
            s += "not " + g.base().name(a);
        }
    }
    return s + ".";
}

std::string to_lp(const GroundProgram& g) {
    std::string s;
    for (const GroundClause& c : g.clauses()) {
        s += to_string(g, c);
        s += "\n";
    }
    return s;
}

} // namespace fixlog
