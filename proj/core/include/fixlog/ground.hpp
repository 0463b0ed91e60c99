#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "fixlog/syntax.hpp"

namespace fixlog {

using AtomIndex = std::uint32_t;

// Stable bijection between the ground atoms in play and indices 0..size()-1.
// Registration order is first occurrence in the ground program text; that
// order doubles as the default level mapping and as the digit order of the
// Cantor embedding (digit k = index k-1).
class AtomEnumeration {
public:
    AtomIndex intern(const std::string& name);
    std::optional<AtomIndex> find(std::string_view name) const;
    const std::string& name(AtomIndex i) const { return names_.at(i); }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, AtomIndex, std::less<>> index_;
};

// Ground clause over an AtomEnumeration.  Bodies are kept as sorted,
// duplicate-free index sets; source order is not meaningful after grounding.
struct GroundClause {
    AtomIndex head = 0;
    std::vector<AtomIndex> pos;
    std::vector<AtomIndex> neg;

    bool definite() const { return neg.empty(); }
    bool operator==(const GroundClause& o) const {
        return head == o.head && pos == o.pos && neg == o.neg;
    }
};

class GroundProgram {
public:
    GroundProgram() : base_(std::make_shared<AtomEnumeration>()) {}
    explicit GroundProgram(std::shared_ptr<const AtomEnumeration> base)
        : base_(std::move(base)) {}

    // Deduplicates on (head, pos set, neg set); keeps first-occurrence order.
    // Returns false if the clause was already present.
    bool add_clause(GroundClause c);

    const std::vector<GroundClause>& clauses() const { return clauses_; }
    const AtomEnumeration& base() const { return *base_; }
    const std::shared_ptr<const AtomEnumeration>& base_ptr() const { return base_; }

    int grounding_bound = 0;
    bool exact = true;
    std::vector<std::string> warnings;

private:
    std::shared_ptr<const AtomEnumeration> base_;
    std::vector<GroundClause> clauses_;
    std::set<std::tuple<AtomIndex, std::vector<AtomIndex>, std::vector<AtomIndex>>> seen_;
};

// Instantiates every clause over all ground terms of depth <= depth_bound,
// keeping instances whose every term stays within the bound.  The base
// enumerates atoms in first occurrence order of the emitted clause list.
// If the program has variables but no constants, a fresh constant is
// injected and a warning recorded.  Throws cap_exceeded with an instance
// count estimate when the substitution space exceeds instance_cap.
GroundProgram ground_program(const Program& p, int depth_bound,
                             std::uint64_t instance_cap = 1'000'000);

std::string to_lp(const GroundProgram& g);
std::string to_string(const GroundProgram& g, const GroundClause& c);

} // namespace fixlog
