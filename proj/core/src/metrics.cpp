#include "fixlog/metrics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>

namespace fixlog {

LevelMapping index_levels(const AtomEnumeration& e) {
    LevelMapping l;
    l.levels.resize(e.size());
    for (std::size_t k = 0; k < e.size(); ++k) l.levels[k] = static_cast<std::uint32_t>(k + 1);
    return l;
}

bool LevelDistance::operator<(const LevelDistance& o) const {
    if (is_zero()) return !o.is_zero();
    if (o.is_zero()) return false;
    return exponent() > o.exponent(); // 2^-b < 2^-g iff g < b
}

std::string LevelDistance::to_string() const {
    if (is_zero()) return "0";
    return "2^-" + std::to_string(exponent());
}

LevelDistance max(const LevelDistance& a, const LevelDistance& b) { return a < b ? b : a; }

LevelDistance dl_distance(const Interpretation& i, const Interpretation& j,
                          const LevelMapping& l) {
    Interpretation diff = i.symmetric_difference(j);
    if (diff.empty()) return LevelDistance::zero();
    bool found = false;
    std::uint32_t least = 0;
    for (AtomIndex a : diff.members()) {
        std::uint32_t lev = l.level(a);
        if (!found || lev < least) {
            found = true;
            least = lev;
        }
    }
    return LevelDistance::exp2_neg(least);
}

LevelDistance rho_distance(const Interpretation& j, const Interpretation& k,
                           const Interpretation& i_wf, const LevelMapping& l) {
    return max(dl_distance(j, i_wf, l), dl_distance(i_wf, k, l));
}

namespace {

struct DependencyGraph {
    // edge head -> body atom, flagged negative for negated literals
    std::vector<std::vector<std::pair<AtomIndex, bool>>> out;
};

DependencyGraph dependency_graph(const GroundProgram& g) {
    DependencyGraph dg;
    dg.out.resize(g.base().size());
    for (const GroundClause& c : g.clauses()) {
        for (AtomIndex a : c.pos) dg.out[c.head].emplace_back(a, false);
        for (AtomIndex a : c.neg) dg.out[c.head].emplace_back(a, true);
    }
    return dg;
}

// Iterative Tarjan; components are numbered in completion order, so every
// edge leaving a component points to a lower-numbered one.
std::vector<int> strongly_connected_components(const DependencyGraph& dg, int& comp_count) {
    const std::size_t n = dg.out.size();
    std::vector<int> comp(n, -1), low(n, 0), disc(n, -1);
    std::vector<bool> on_stack(n, false);
    std::vector<AtomIndex> stack;
    int timer = 0;
    comp_count = 0;

    struct Frame {
        AtomIndex v;
        std::size_t edge;
    };
    for (AtomIndex root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        disc[root] = low[root] = timer++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.edge < dg.out[f.v].size()) {
                AtomIndex w = dg.out[f.v][f.edge].first;
                ++f.edge;
                if (disc[w] == -1) {
                    disc[w] = low[w] = timer++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                AtomIndex v = f.v;
                frames.pop_back();
                if (!frames.empty()) low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                if (low[v] == disc[v]) {
                    while (true) {
                        AtomIndex w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        comp[w] = comp_count;
                        if (w == v) break;
                    }
                    ++comp_count;
                }
            }
        }
    }
    return comp;
}

// Shortest intra-component path from -> to, returning the atom sequence and
// per-step edge signs.
bool intra_component_path(const DependencyGraph& dg, const std::vector<int>& comp,
                          AtomIndex from, AtomIndex to, std::vector<AtomIndex>& atoms,
                          std::vector<bool>& signs) {
    if (from == to) {
        atoms = {from};
        signs = {};
        return true;
    }
    std::map<AtomIndex, std::pair<AtomIndex, bool>> parent;
    std::deque<AtomIndex> queue{from};
    std::set<AtomIndex> seen{from};
    while (!queue.empty() && !parent.count(to)) {
        AtomIndex v = queue.front();
        queue.pop_front();
        for (auto [w, negative] : dg.out[v]) {
            if (comp[w] != comp[from] || seen.count(w)) continue;
            seen.insert(w);
            parent[w] = {v, negative};
            queue.push_back(w);
        }
    }
    if (!parent.count(to)) return false;
    std::vector<AtomIndex> rev{to};
    std::vector<bool> rev_signs;
    AtomIndex cur = to;
    while (cur != from) {
        auto [p, negative] = parent.at(cur);
        rev_signs.push_back(negative);
        rev.push_back(p);
        cur = p;
    }
    atoms.assign(rev.rbegin(), rev.rend());
    signs.assign(rev_signs.rbegin(), rev_signs.rend());
    return true;
}

} // namespace

StratificationResult find_local_stratification(const GroundProgram& g) {
    DependencyGraph dg = dependency_graph(g);
    int comp_count = 0;
    std::vector<int> comp = strongly_connected_components(dg, comp_count);

    // any negative edge inside a component defeats stratification
    for (AtomIndex u = 0; u < dg.out.size(); ++u) {
        for (auto [v, negative] : dg.out[u]) {
            if (!negative || comp[u] != comp[v]) continue;
            StratificationFailure fail;
            std::vector<AtomIndex> atoms;
            std::vector<bool> signs;
            intra_component_path(dg, comp, v, u, atoms, signs);
            fail.cycle.push_back(u);
            fail.negative_edge.push_back(true);
            fail.cycle.insert(fail.cycle.end(), atoms.begin(), atoms.end());
            fail.negative_edge.insert(fail.negative_edge.end(), signs.begin(), signs.end());
            return fail;
        }
    }

    // components complete in dependency-first order, so one pass suffices
    std::vector<std::vector<AtomIndex>> members(comp_count);
    for (AtomIndex a = 0; a < g.base().size(); ++a) members[comp[a]].push_back(a);
    std::vector<std::uint32_t> comp_level(comp_count, 0);
    for (int c = 0; c < comp_count; ++c) {
        for (AtomIndex u : members[c]) {
            for (auto [v, negative] : dg.out[u]) {
                if (comp[v] == c) continue;
                std::uint32_t need = comp_level[comp[v]] + (negative ? 1u : 0u);
                comp_level[c] = std::max(comp_level[c], need);
            }
        }
    }
    LevelMapping l;
    l.levels.resize(g.base().size());
    for (AtomIndex a = 0; a < g.base().size(); ++a) l.levels[a] = comp_level[comp[a]];
    return l;
}

std::string to_string(const StratificationFailure& f, const AtomEnumeration& e) {
    std::string s = e.name(f.cycle.front());
    for (std::size_t k = 0; k + 1 < f.cycle.size(); ++k) {
        s += f.negative_edge[k] ? " -not-> " : " -> ";
        s += e.name(f.cycle[k + 1]);
    }
    return s;
}

bool check_locally_hierarchical(const GroundProgram& g, const LevelMapping& l) {
    for (const GroundClause& c : g.clauses()) {
        for (AtomIndex a : c.pos)
            if (!(l.level(c.head) > l.level(a))) return false;
        for (AtomIndex a : c.neg)
            if (!(l.level(c.head) > l.level(a))) return false;
    }
    return true;
}

bool check_locally_hierarchical(const QuasiInterpretation& q, const LevelMapping& l) {
    for (const QuasiClause& c : q.clauses())
        for (AtomIndex a : c.neg)
            if (!(l.level(c.head) > l.level(a))) return false;
    return true;
}

FittingLevels level_from_fitting(const QuasiInterpretation& q) {
    GroundProgram g = quasi_as_ground(q);
    std::vector<ThreeValuedInterpretation> ladder;
    ladder.emplace_back(g.base().size());
    while (true) {
        ThreeValuedInterpretation next = fitting_step(g, ladder.back());
        if (next == ladder.back()) break;
        ladder.push_back(std::move(next));
    }
    const ThreeValuedInterpretation& final = ladder.back();
    if (!final.total()) {
        for (AtomIndex a = 0; a < g.base().size(); ++a)
            if (final.value(a) == ThreeValuedInterpretation::Value::undefined)
                throw precondition_error("Fitting model is not total: atom '" + g.base().name(a) +
                                         "' is undefined");
    }
    FittingLevels out{LevelMapping{}, final.true_set()};
    out.levels.levels.resize(g.base().size());
    for (AtomIndex a = 0; a < g.base().size(); ++a) {
        auto target = final.value(a);
        for (std::size_t stage = 1; stage < ladder.size(); ++stage) {
            if (ladder[stage].value(a) == target) {
                out.levels.levels[a] = static_cast<std::uint32_t>(stage - 1);
                break;
            }
        }
    }
    return out;
}

namespace {

// First-disagreement level with early exit, using atoms pre-sorted by level.
LevelDistance dl_by_order(const Interpretation& i, const Interpretation& j,
                          const std::vector<AtomIndex>& by_level, const LevelMapping& l) {
    for (AtomIndex a : by_level)
        if (i.contains(a) != j.contains(a)) return LevelDistance::exp2_neg(l.level(a));
    return LevelDistance::zero();
}

} // namespace

ContractionReport contraction_report(const GroundProgram& g, const LevelMapping& l,
                                     const ContractionOptions& opts) {
    if (opts.metric == ContractionOptions::Metric::rho && !opts.anchor.has_value())
        throw precondition_error("rho-mode contraction requires an anchor interpretation");
    const std::size_t n = g.base().size();

    std::vector<AtomIndex> by_level(n);
    for (AtomIndex a = 0; a < n; ++a) by_level[a] = a;
    std::stable_sort(by_level.begin(), by_level.end(),
                     [&](AtomIndex a, AtomIndex b) { return l.level(a) < l.level(b); });

    const bool rho_mode = opts.metric == ContractionOptions::Metric::rho;

    auto distance = [&](const Interpretation& a, const Interpretation& b) {
        if (!rho_mode) return dl_by_order(a, b, by_level, l);
        return max(dl_by_order(a, *opts.anchor, by_level, l),
                   dl_by_order(*opts.anchor, b, by_level, l));
    };

    ContractionReport report;
    auto check_pair = [&](const Interpretation& a, const Interpretation& b,
                          const Interpretation& ga, const Interpretation& gb) {
        LevelDistance before = distance(a, b);
        if (before.is_zero()) return;
        ++report.pairs_checked;
        LevelDistance after = distance(ga, gb);
        if (!(after < before)) {
            ++report.violations;
            if (report.witnesses.size() < 5) {
                std::ostringstream os;
                os << "d(GL(I),GL(J))=" << after.to_string() << " !< d(I,J)=" << before.to_string()
                   << " at I=" << to_string(a, g.base()) << " J=" << to_string(b, g.base());
                report.witnesses.push_back(os.str());
            }
        }
    };

    if (opts.pairs == ContractionOptions::Pairs::exhaustive) {
        if (n > 63) throw cap_exceeded("exhaustive contraction check needs <= 63 atoms", 0, 63);
        const std::uint64_t count = 1ull << n;
        const long double pair_estimate =
            static_cast<long double>(count) * static_cast<long double>(count - 1) / 2 +
            (rho_mode ? static_cast<long double>(count) : 0.0L);
        if (pair_estimate > static_cast<long double>(opts.pair_cap))
            throw cap_exceeded("exhaustive contraction pair count exceeds cap",
                               static_cast<std::uint64_t>(pair_estimate), opts.pair_cap);
        std::vector<Interpretation> interps;
        std::vector<Interpretation> images;
        interps.reserve(count);
        images.reserve(count);
        for (std::uint64_t mask = 0; mask < count; ++mask) {
            interps.push_back(Interpretation::from_mask(n, mask));
            images.push_back(gl_operator(g, interps.back()));
        }
        for (std::uint64_t a = 0; a < count; ++a)
            for (std::uint64_t b = rho_mode ? a : a + 1; b < count; ++b)
                check_pair(interps[a], interps[b], images[a], images[b]);
    } else {
        std::mt19937_64 rng(opts.seed);
        auto random_interp = [&]() {
            Interpretation i(n);
            for (AtomIndex a = 0; a < n; ++a)
                if (rng() & 1) i.add(a);
            return i;
        };
        for (std::uint64_t s = 0; s < opts.sample_count; ++s) {
            Interpretation a = random_interp();
            Interpretation b = random_interp();
            check_pair(a, b, gl_operator(g, a), gl_operator(g, b));
        }
    }
    return report;
}

IterationTrace iterate_gl(const GroundProgram& g, const Interpretation& i0, int cap) {
    IterationTrace trace;
    std::map<Interpretation, int> seen;
    Interpretation current = i0;
    while (static_cast<int>(trace.entries.size()) < cap) {
        seen.emplace(current, static_cast<int>(trace.entries.size()));
        trace.entries.push_back(current);
        Interpretation next = gl_operator(g, current);
        if (next == current) {
            trace.outcome = IterationTrace::Outcome::fixed_point;
            return trace;
        }
        auto it = seen.find(next);
        if (it != seen.end()) {
            trace.outcome = IterationTrace::Outcome::cycle;
            trace.cycle_length = static_cast<int>(trace.entries.size()) - it->second;
            return trace;
        }
        current = std::move(next);
    }
    trace.outcome = IterationTrace::Outcome::cap_reached;
    return trace;
}

bool validate_witness(const GroundProgram& g, const Interpretation& i, AtomIndex a,
                      const std::vector<AtomIndex>& witness) {
    for (AtomIndex w : witness)
        if (!i.contains(w)) return false;
    Interpretation gl_image = gl_operator(g, i);
    for (const GroundClause& c : g.clauses()) {
        if (c.head != a) continue;
        bool blocked = false;
        for (AtomIndex b : c.neg)
            if (std::find(witness.begin(), witness.end(), b) != witness.end()) {
                blocked = true;
                break;
            }
        if (!blocked)
            for (AtomIndex b : c.pos)
                if (!gl_image.contains(b)) {
                    blocked = true;
                    break;
                }
        if (!blocked) return false;
    }
    return true;
}

ContinuityWitness continuity_witness(const GroundProgram& g, const Interpretation& i,
                                     AtomIndex a, std::size_t bound, std::uint64_t combo_cap) {
    Interpretation gl_image = gl_operator(g, i);
    if (gl_image.contains(a))
        throw precondition_error("continuity witness query requires GL(I)(" + g.base().name(a) +
                                 ") = f, but the atom is true");

    std::vector<const GroundClause*> with_head;
    for (const GroundClause& c : g.clauses())
        if (c.head == a) with_head.push_back(&c);
    if (with_head.empty()) return ContinuityWitness{ContinuityWitness::Kind::no_clause, {}, bound};

    // clauses not already blocked by a positive atom false under GL(I) must
    // be covered through some negated atom that is true in I
    std::vector<std::vector<AtomIndex>> must_cover;
    std::vector<AtomIndex> candidates;
    for (const GroundClause* c : with_head) {
        bool blocked = false;
        for (AtomIndex b : c->pos)
            if (!gl_image.contains(b)) {
                blocked = true;
                break;
            }
        if (blocked) continue;
        std::vector<AtomIndex> cover;
        for (AtomIndex b : c->neg)
            if (i.contains(b)) cover.push_back(b);
        if (cover.empty()) return ContinuityWitness{ContinuityWitness::Kind::exhausted, {}, bound};
        must_cover.push_back(cover);
        for (AtomIndex b : cover)
            if (std::find(candidates.begin(), candidates.end(), b) == candidates.end())
                candidates.push_back(b);
    }
    if (must_cover.empty()) {
        // every clause already blocked through a false positive atom
        if (!validate_witness(g, i, a, {}))
            throw std::logic_error("continuity witness failed independent re-validation");
        return ContinuityWitness{ContinuityWitness::Kind::witness_set, {}, bound};
    }

    std::sort(candidates.begin(), candidates.end());
    const std::size_t limit = std::min(bound, candidates.size());

    // smallest witness first: enumerate candidate subsets by increasing size
    std::uint64_t tried = 0;
    for (std::size_t size = 1; size <= limit; ++size) {
        std::vector<std::size_t> pick(size);
        for (std::size_t k = 0; k < size; ++k) pick[k] = k;
        while (true) {
            if (++tried > combo_cap)
                return ContinuityWitness{ContinuityWitness::Kind::exhausted, {}, bound};
            std::vector<AtomIndex> s;
            s.reserve(size);
            for (std::size_t k : pick) s.push_back(candidates[k]);
            bool covers = true;
            for (const auto& cover : must_cover) {
                bool hit = false;
                for (AtomIndex b : cover)
                    if (std::binary_search(s.begin(), s.end(), b)) {
                        hit = true;
                        break;
                    }
                if (!hit) {
                    covers = false;
                    break;
                }
            }
            if (covers) {
                if (!validate_witness(g, i, a, s))
                    throw std::logic_error("continuity witness failed independent re-validation");
                return ContinuityWitness{ContinuityWitness::Kind::witness_set, std::move(s), bound};
            }
            // next combination
            std::size_t k = size;
            while (k-- > 0) {
                if (++pick[k] <= candidates.size() - (size - k)) {
                    for (std::size_t m = k + 1; m < size; ++m) pick[m] = pick[m - 1] + 1;
                    break;
                }
                if (k == 0) goto size_done;
            }
        }
    size_done:;
    }
    return ContinuityWitness{ContinuityWitness::Kind::exhausted, {}, bound};
}

Rational cantor_embed(const Interpretation& i, const AtomEnumeration& e) {
    using boost::multiprecision::cpp_int;
    if (i.universe_size() != e.size())
        throw precondition_error("cantor embed: interpretation is over a different enumeration");
    // atom index k-1 contributes ternary digit 2 at place k
    cpp_int power = 1;
    std::size_t place = 0;
    Rational sum = 0;
    for (AtomIndex a : i.members()) {
        for (; place < a + 1u; ++place) power *= 3;
        sum += Rational(cpp_int(2), power);
    }
    return sum;
}

Interpretation cantor_decode(const Rational& x, const AtomEnumeration& e) {
    using boost::multiprecision::cpp_int;
    if (x < 0 || x > 1) throw precondition_error("cantor decode: value outside [0, 1]");
    Interpretation out(e.size());
    Rational rest = x;
    for (std::size_t k = 0; k < e.size(); ++k) {
        rest *= 3;
        cpp_int digit = boost::multiprecision::numerator(rest) /
                        boost::multiprecision::denominator(rest);
        if (digit == 1 || digit > 2)
            throw precondition_error("cantor decode: ternary digit " + digit.str() +
                                     " at place " + std::to_string(k + 1) +
                                     " is outside {0, 2}");
        if (digit == 2) out.add(static_cast<AtomIndex>(k));
        rest -= Rational(digit);
    }
    if (rest != 0)
        throw precondition_error("cantor decode: expansion longer than the enumeration (" +
                                 std::to_string(e.size()) + " places)");
    return out;
}

} // namespace fixlog
