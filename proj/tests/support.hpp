#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "weakunits/model.hpp"

namespace wu_test {

using namespace weakunits;

inline TwoCellId cell_named(const TwoCategoryModel& m, const std::string& name) {
    for (std::uint32_t i = 0; i < m.two_cell_count(); ++i)
        if (m.label(TwoCellId(i)) == name) return TwoCellId(i);
    throw std::runtime_error("no 2-cell named " + name);
}

inline OneCellId arrow_named(const TwoCategoryModel& m, const std::string& name) {
    for (std::uint32_t i = 0; i < m.one_cell_count(); ++i)
        if (m.label(OneCellId(i)) == name) return OneCellId(i);
    throw std::runtime_error("no 1-cell named " + name);
}

inline ObjId object_named(const TwoCategoryModel& m, const std::string& name) {
    for (std::uint32_t i = 0; i < m.object_count(); ++i)
        if (m.label(ObjId(i)) == name) return ObjId(i);
    throw std::runtime_error("no object named " + name);
}

// Independent reading of the ZG cell names "a=>b:k".
struct ZgCell {
    int from, to, label;
};

inline ZgCell decode_zg(const TwoCategoryModel& m, TwoCellId c) {
    auto s = m.label(c);
    auto bit = [](char ch) { return ch == 'u' ? 1 : 0; };
    return {bit(s[0]), bit(s[3]), s[5] - '0'};
}

// Deterministic generator for hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}
    std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin() { return below(2) == 1; }

private:
    std::mt19937_64 rng_;
};

}  // namespace wu_test
