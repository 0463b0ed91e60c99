#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fixlog/fixcomp.hpp"

namespace fixlog {

// Total map atom index -> natural level.  Levels need not be contiguous.
struct LevelMapping {
    std::vector<std::uint32_t> levels;

    std::uint32_t level(AtomIndex a) const { return levels.at(a); }
    std::size_t size() const { return levels.size(); }
};

// l(A_k) = k with k the 1-based enumeration index; aligns levels with the
// digit order of the Cantor embedding.
LevelMapping index_levels(const AtomEnumeration& e);

// Either zero or the symbol 2^-n; ordered by 2^-b < 2^-g iff g < b, with
// zero as minimum.
class LevelDistance {
public:
    static LevelDistance zero() { return LevelDistance{}; }
    static LevelDistance exp2_neg(std::uint32_t n) {
        LevelDistance d;
        d.exponent_ = n;
        return d;
    }

    bool is_zero() const { return !exponent_.has_value(); }
    std::uint32_t exponent() const { return exponent_.value(); }

    bool operator==(const LevelDistance& o) const { return exponent_ == o.exponent_; }
    bool operator!=(const LevelDistance& o) const { return !(*this == o); }
    bool operator<(const LevelDistance& o) const;
    bool operator<=(const LevelDistance& o) const { return *this < o || *this == o; }

    std::string to_string() const;

private:
    std::optional<std::uint32_t> exponent_;
};

LevelDistance max(const LevelDistance& a, const LevelDistance& b);

// d_l(i, j): zero if i = j, else 2^-b with b the least level of an atom in
// the symmetric difference.
LevelDistance dl_distance(const Interpretation& i, const Interpretation& j,
                          const LevelMapping& l);

// Dislocated variant anchored at i_wf: max{d_l(j, i_wf), d_l(i_wf, k)}.
LevelDistance rho_distance(const Interpretation& j, const Interpretation& k,
                           const Interpretation& i_wf, const LevelMapping& l);

struct StratificationFailure {
    // closed walk a_0 -> a_1 -> ... -> a_0 through at least one negative edge
    std::vector<AtomIndex> cycle;
    std::vector<bool> negative_edge; // negative_edge[i]: edge cycle[i] -> cycle[i+1]
};

using StratificationResult = std::variant<LevelMapping, StratificationFailure>;

// Succeeds iff no strongly connected component of the atom dependency graph
// contains a negative edge; on success assigns levels by condensation order
// (l(head) >= positive body levels, > negative body levels), on failure
// returns a cycle through negation.
StratificationResult find_local_stratification(const GroundProgram& g);

std::string to_string(const StratificationFailure& f, const AtomEnumeration& e);

// True iff every clause has head level strictly above every body atom level.
bool check_locally_hierarchical(const GroundProgram& g, const LevelMapping& l);
bool check_locally_hierarchical(const QuasiInterpretation& q, const LevelMapping& l);

struct FittingLevels {
    LevelMapping levels;    // l(A) = least a with Fitting iterate a+1 deciding A
    Interpretation positive; // positive part of the total Fitting model
};

// Requires fitting_model(quasi_as_ground(q)) to be total; throws
// precondition_error naming an undefined atom otherwise.
FittingLevels level_from_fitting(const QuasiInterpretation& q);

struct ContractionOptions {
    enum class Metric { dl, rho };
    enum class Pairs { exhaustive, sample };

    Metric metric = Metric::dl;
    std::optional<Interpretation> anchor; // required for rho
    Pairs pairs = Pairs::exhaustive;
    std::uint64_t sample_count = 10'000;
    std::uint64_t seed = 0;
    std::uint64_t pair_cap = 1u << 24;
};

struct ContractionReport {
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> witnesses; // first few violating pairs
};

// dl mode checks d(GL(i), GL(j)) < d(i, j) over pairs i != j; rho mode checks
// all pairs (including i = j) with rho(i, j) > 0.  Exhaustive mode enumerates
// every pair and throws cap_exceeded beyond pair_cap.
ContractionReport contraction_report(const GroundProgram& g, const LevelMapping& l,
                                     const ContractionOptions& opts);

struct IterationTrace {
    enum class Outcome { fixed_point, cycle, cap_reached };

    std::vector<Interpretation> entries; // starts at i0; repeats are not appended
    Outcome outcome = Outcome::cap_reached;
    int cycle_length = 0; // set when outcome == cycle
};

// Iterates gl_operator from i0, stopping at a fixed point, at the first
// repeated interpretation, or after cap entries.
IterationTrace iterate_gl(const GroundProgram& g, const Interpretation& i0, int cap);

struct ContinuityWitness {
    enum class Kind { no_clause, witness_set, exhausted };

    Kind kind = Kind::no_clause;
    std::vector<AtomIndex> witness; // set S, present when kind == witness_set
    std::size_t bound = 0;          // echoed when kind == exhausted
};

// Searches for a finite S of atoms true in i such that every clause with
// head a either carries some not-A with A in S or a positive body atom false
// under gl_operator(g, i).  Requires gl_operator(g, i) to assign a false;
// throws precondition_error otherwise.  Candidate sets are enumerated in
// increasing size up to the given bound.
ContinuityWitness continuity_witness(const GroundProgram& g, const Interpretation& i,
                                     AtomIndex a, std::size_t bound,
                                     std::uint64_t combo_cap = 10'000'000);

// Independent clause scan used to re-validate a witness set.
bool validate_witness(const GroundProgram& g, const Interpretation& i, AtomIndex a,
                      const std::vector<AtomIndex>& witness);

using Rational = boost::multiprecision::cpp_rational;

// iota(I) = sum over atom indices k in I (1-based) of 2 * 3^-k, an exact
// rational in [0, 1].
Rational cantor_embed(const Interpretation& i, const AtomEnumeration& e);

// Exact inverse; requires a finite ternary expansion with digits in {0, 2}
// of length <= |e| and throws precondition_error on any other digit.
Interpretation cantor_decode(const Rational& x, const AtomEnumeration& e);

} // namespace fixlog
