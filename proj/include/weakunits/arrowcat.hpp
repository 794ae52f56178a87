#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "weakunits/certificate.hpp"
#include "weakunits/units.hpp"

namespace weakunits {

// A square in the base: x : X0 -> X1 and y : Y0 -> Y1 are objects of the
// arrow model, (f0, f1) the sides, F : x # f1 => f0 # y its filler.
struct ArrowSquare {
    OneCellId x, y, f0, f1;
    TwoCellId F;
    auto operator<=>(const ArrowSquare&) const = default;
};

// A 2-cell between squares s and t: m0 : s.f0 => t.f0, m1 : s.f1 => t.f1.
struct ArrowCylinder {
    OneCellId s, t;  // ids of squares in the arrow model
    TwoCellId m0, m1;
    auto operator<=>(const ArrowCylinder&) const = default;
};

inline constexpr std::size_t kDefaultArrowBudget = 1u << 16;

class ArrowModel {
public:
    const TwoCategoryModel& base() const { return *base_; }
    const TwoCategoryModel& model() const { return *model_; }
    std::shared_ptr<const TwoCategoryModel> shared_model() const { return model_; }

    // Objects of the arrow model are the base 1-cells, with the same ids.
    ObjId object(OneCellId base_arrow) const { return ObjId(base_arrow.value); }
    OneCellId base_arrow(ObjId x) const { return OneCellId(x.value); }

    const ArrowSquare& square(OneCellId f) const { return squares_[f.index()]; }
    const ArrowCylinder& cylinder(TwoCellId c) const { return cylinders_[c.index()]; }
    std::optional<OneCellId> find(const ArrowSquare& s) const;
    std::optional<TwoCellId> find(const ArrowCylinder& c) const;

    friend ArrowModel build_arrow_model(std::shared_ptr<const TwoCategoryModel> base, std::size_t budget);

private:
    std::shared_ptr<const TwoCategoryModel> base_, model_;
    std::vector<ArrowSquare> squares_;
    std::vector<ArrowCylinder> cylinders_;
    std::map<ArrowSquare, OneCellId> square_ids_;
    std::map<ArrowCylinder, TwoCellId> cylinder_ids_;
};

// Ids are assigned in lexicographic order of the base data.  Throws
// CertificationError when the 1- or 2-cell count would exceed the budget.
ArrowModel build_arrow_model(std::shared_ptr<const TwoCategoryModel> base, std::size_t budget = kDefaultArrowBudget);

// The unit (u, (a0, a1, U^-1)) of the arrow model induced by a unit morphism.
UnitObject lift_unit_morphism(const ArrowModel& am, const UnitObject& source, const UnitObject& target,
                              const UnitMorphism& mor);

struct TheoremBReport {
    bool direct = false;          // cube equation evaluated in the base
    bool lifted_unit = false;     // lift certified as a unit of the arrow model
    bool projection = false;      // synthesized associator projects onto (A0, A1)
    bool arrow = false;           // arrow-model route as a whole
    bool routes_agree = false;
    std::string failure;
};

// Both routes for one unit morphism; packs are the chosen constraint data.
TheoremBReport verify_theorem_B(const ArrowModel& am, const UnitObject& source, const ConstraintPack& source_pack,
                                const UnitObject& target, const ConstraintPack& target_pack, const UnitMorphism& mor,
                                Recorder& base_rec, Recorder* arrow_rec);

}  // namespace weakunits
