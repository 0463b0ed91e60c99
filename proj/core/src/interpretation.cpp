#include "fixlog/interpretation.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fixlog {

Interpretation Interpretation::from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe larger than 64 atoms");
    Interpretation i(universe);
    for (std::size_t k = 0; k < universe; ++k)
        if (mask & (1ull << k)) i.bits_.set(k);
    return i;
}

Interpretation Interpretation::symmetric_difference(const Interpretation& other) const {
    Interpretation out(*this);
    out.bits_ ^= other.bits_;
    return out;
}

Interpretation Interpretation::set_minus(const Interpretation& other) const {
    Interpretation out(*this);
    out.bits_ -= other.bits_;
    return out;
}

std::vector<AtomIndex> Interpretation::members() const {
    std::vector<AtomIndex> out;
    for (auto p = bits_.find_first(); p != boost::dynamic_bitset<>::npos; p = bits_.find_next(p))
        out.push_back(static_cast<AtomIndex>(p));
    return out;
}

std::string to_string(const Interpretation& i, const AtomEnumeration& e) {
    std::vector<std::string> names;
    for (AtomIndex a : i.members()) names.push_back(e.name(a));
    std::sort(names.begin(), names.end());
    std::string s = "{";
    for (std::size_t k = 0; k < names.size(); ++k) {
        if (k) s += ",";
        s += names[k];
    }
    return s + "}";
}

ThreeValuedInterpretation::ThreeValuedInterpretation(Interpretation t, Interpretation f)
    : true_(std::move(t)), false_(std::move(f)) {
    assert(true_.universe_size() == false_.universe_size());
    if ((true_.bits() & false_.bits()).any())
        throw std::invalid_argument("three-valued interpretation: true and false sets overlap");
}

std::string to_string(const ThreeValuedInterpretation& i, const AtomEnumeration& e) {
    std::string s = "true=" + to_string(i.true_set(), e) + " false=" + to_string(i.false_set(), e);
    Interpretation undef(i.universe_size());
    for (AtomIndex a = 0; a < i.universe_size(); ++a)
        if (i.value(a) == ThreeValuedInterpretation::Value::undefined) undef.add(a);
    s += " undef=" + to_string(undef, e);
    return s;
}

} // namespace fixlog
