#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weakunits/certificate.hpp"

namespace weakunits {

// Units of a model whose 2-cells are all identities, treated as a
// semi-monoidal 1-category.  alpha : II -> I is an isomorphism and
//   I lambda_X = alpha X,   rho_X I = X alpha.
struct Unit1 {
    ObjId unit;
    OneCellId alpha;
    std::vector<OneCellId> lambda, rho;
};

// Throws CertificationError unless every 2-cell is an identity.
void require_locally_discrete(const TwoCategoryModel& m);

std::optional<OneCellId> inverse_1(const TwoCategoryModel& m, OneCellId f);
// Tensoring with x on both sides is bijective on every hom-set.
bool is_cancellable_1(const TwoCategoryModel& m, ObjId x);

std::vector<std::pair<ObjId, OneCellId>> find_units_1(const TwoCategoryModel& m);
Unit1 construct_lr_1(const TwoCategoryModel& m, ObjId i, OneCellId alpha);

struct Dim1Report {
    bool unit_axiom = false;     // lambda_I = rho_I
    bool lambda_tensor = false;  // lambda_{XY} = lambda_X Y
    bool rho_tensor = false;     // rho_{XY} = X rho_Y
    bool kelly = false;          // X lambda_Y = rho_X Y
    bool naturality = false;     // lambda_{IX} = I lambda_X, rho_{XI} = rho_X I
    bool isomorphisms = false;
    std::vector<std::string> failures;
    bool holds() const { return unit_axiom && lambda_tensor && rho_tensor && kelly && naturality && isomorphisms; }
};

Dim1Report verify_kelly_1(Recorder& rec, const Unit1& u);
bool verify_assoc_1(Recorder& rec, const Unit1& u);
// rho_I^-1 # lambda_J, with rho taken from the target unit and lambda from the source.
OneCellId canonical_unit_iso_1(const TwoCategoryModel& m, const Unit1& source, const Unit1& target);

}  // namespace weakunits
