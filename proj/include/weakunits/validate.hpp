#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weakunits/expr.hpp"

namespace weakunits {

inline constexpr const char* kAxiomFamilies[] = {
    "boundary",          "comp1-unit",          "comp1-associativity", "hom-unit",
    "hom-associativity", "hcomp-unit",          "hcomp-associativity", "interchange",
    "tensor-functoriality", "tensor-associativity",
};

struct Violation {
    std::string family;
    std::string message;
    std::optional<Equation> equation;  // absent for boundary violations
};

struct FamilyReport {
    std::string family;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;
};

struct ValidationReport {
    std::vector<std::string> structural;
    std::vector<FamilyReport> families;
    std::vector<Violation> violations;  // at most `cap` per family

    bool structurally_sound() const { return structural.empty(); }
    bool valid() const;
    std::uint64_t violation_count(const std::string& family) const;
};

ValidationReport validate_model(const TwoCategoryModel& m, std::size_t cap = 8);
// Same, but reports structural problems instead of throwing.
ValidationReport validate_tables(const ModelTables& t, std::size_t cap = 8);

}  // namespace weakunits
