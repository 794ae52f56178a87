#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "weakunits/certificate.hpp"

namespace weakunits {

// Exit codes shared by every front end.
inline constexpr int kExitPass = 0;
inline constexpr int kExitMathFailure = 1;
inline constexpr int kExitStructural = 2;

struct DriverOptions {
    std::uint64_t seed = 0;
    bool all_choices = false;           // every constraint pack instead of the seeded one
    std::size_t budget = 1u << 16;      // enumeration and arrow-model caps
    std::optional<std::size_t> unit;    // restrict synth to one unit (index into find_unit_objects)
    bool allow_invalid = false;         // skip the validation gate
};

using ModelPtr = std::shared_ptr<const TwoCategoryModel>;

// Validation never throws on axiom violations, only on structural ones.
// The other drivers first validate the model; violations become named
// counterexamples and the theorem is not attempted, unless allow_invalid.
Certificate run_validate(const ModelTables& tables);
Certificate run_find_units(const ModelPtr& m, const DriverOptions& opt = {});
Certificate run_synth(const ModelPtr& m, const DriverOptions& opt);

// theorem: A, B, C, E, dim1 or actions.  StructuralError for an unknown name.
Certificate run_verify(const ModelPtr& m, const std::string& theorem, const DriverOptions& opt);
Certificate run_verify_A(const ModelPtr& m, const DriverOptions& opt);
Certificate run_verify_B(const ModelPtr& m, const DriverOptions& opt);
Certificate run_verify_C(const ModelPtr& m, const DriverOptions& opt);
Certificate run_verify_E(const ModelPtr& m, const DriverOptions& opt);
Certificate run_verify_dim1(const ModelPtr& m, const DriverOptions& opt);
Certificate run_verify_actions(const ModelPtr& m, const DriverOptions& opt);

inline int exit_code(const Certificate& c) { return c.passed() ? kExitPass : kExitMathFailure; }

}  // namespace weakunits
