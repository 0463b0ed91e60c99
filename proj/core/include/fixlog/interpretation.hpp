#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "fixlog/ground.hpp"

namespace fixlog {

// A two-valued Herbrand interpretation: the set of true atoms over a fixed
// enumeration; everything else is false.
class Interpretation {
public:
    Interpretation() = default;
    explicit Interpretation(std::size_t universe) : bits_(universe) {}

    static Interpretation full(std::size_t universe) {
        Interpretation i(universe);
        i.bits_.set();
        return i;
    }
    // Lowest mask bit = atom 0; universe must be <= 64.
    static Interpretation from_mask(std::size_t universe, std::uint64_t mask);

    std::size_t universe_size() const { return bits_.size(); }
    std::size_t count() const { return bits_.count(); }
    bool empty() const { return bits_.none(); }

    bool contains(AtomIndex a) const { return bits_.test(a); }
    void add(AtomIndex a) { bits_.set(a); }
    void erase(AtomIndex a) { bits_.reset(a); }

    bool subset_of(const Interpretation& other) const { return bits_.is_subset_of(other.bits_); }
    Interpretation symmetric_difference(const Interpretation& other) const;
    Interpretation set_minus(const Interpretation& other) const;

    std::vector<AtomIndex> members() const;

    bool operator==(const Interpretation& o) const { return bits_ == o.bits_; }
    bool operator!=(const Interpretation& o) const { return bits_ != o.bits_; }
    bool operator<(const Interpretation& o) const { return bits_ < o.bits_; }

    const boost::dynamic_bitset<>& bits() const { return bits_; }

private:
    boost::dynamic_bitset<> bits_;
};

// "{a,c}" with members sorted by atom name.
std::string to_string(const Interpretation& i, const AtomEnumeration& e);

// Disjoint true/false sets; atoms in neither are undefined.
class ThreeValuedInterpretation {
public:
    enum class Value { is_true, is_false, undefined };

    ThreeValuedInterpretation() = default;
    explicit ThreeValuedInterpretation(std::size_t universe)
        : true_(universe), false_(universe) {}
    // Asserts disjointness.
    ThreeValuedInterpretation(Interpretation t, Interpretation f);

    Value value(AtomIndex a) const {
        if (true_.contains(a)) return Value::is_true;
        if (false_.contains(a)) return Value::is_false;
        return Value::undefined;
    }

    const Interpretation& true_set() const { return true_; }
    const Interpretation& false_set() const { return false_; }
    std::size_t universe_size() const { return true_.universe_size(); }

    bool total() const { return true_.count() + false_.count() == universe_size(); }

    // Knowledge order: pairwise inclusion of the true and false sets.
    bool leq_knowledge(const ThreeValuedInterpretation& o) const {
        return true_.subset_of(o.true_) && false_.subset_of(o.false_);
    }

    bool operator==(const ThreeValuedInterpretation& o) const {
        return true_ == o.true_ && false_ == o.false_;
    }
    bool operator!=(const ThreeValuedInterpretation& o) const { return !(*this == o); }

private:
    Interpretation true_;
    Interpretation false_;
};

std::string to_string(const ThreeValuedInterpretation& i, const AtomEnumeration& e);

} // namespace fixlog
