#pragma once

#include <optional>
#include <string>

#include "weakunits/expr.hpp"

namespace weakunits {

// f : X -> Y, g : Y -> X, eta : 1_X => f # g, eps : g # f => 1_Y.
struct AdjointEquivalence {
    OneCellId f, g;
    TwoCellId eta, eps;
};

bool triangle_identities_hold(const TwoCategoryModel& m, const AdjointEquivalence& w);

// First adjoint equivalence in id order, if f is an equi-arrow.
std::optional<AdjointEquivalence> find_pseudo_inverse(const TwoCategoryModel& m, OneCellId f);
bool is_equi_arrow(const TwoCategoryModel& m, OneCellId f);

// Tensoring with X on the given side, as a functor hom(A, B) -> hom(XA, XB)
// (or hom(AX, BX)), is an equivalence of categories.
bool is_hom_equivalence(const TwoCategoryModel& m, ObjId x, Side side, ObjId a, ObjId b);
// Tensoring with an arrow u : I -> J, as hom(A, B) -> hom(IA, JB) (or hom(AI, BJ)).
bool is_hom_equivalence(const TwoCategoryModel& m, OneCellId u, Side side, ObjId a, ObjId b);
bool is_cancellable(const TwoCategoryModel& m, ObjId x, Side side);
bool is_cancellable(const TwoCategoryModel& m, ObjId x);

// The unique d in cells(src, dst) with by (x) d == c (Left) or d (x) by == c (Right).
TwoCellId divide_tensor(const TwoCategoryModel& m, OneCellId by, Side side, TwoCellId c, OneCellId src,
                        OneCellId dst, const std::string& step);
TwoCellId divide_tensor(const TwoCategoryModel& m, ObjId by, Side side, TwoCellId c, OneCellId src, OneCellId dst,
                        const std::string& step);
// The unique d in cells(src, dst) with e # d == c (Left) or d # e == c (Right).
TwoCellId divide_whisker(const TwoCategoryModel& m, OneCellId e, Side side, TwoCellId c, OneCellId src,
                         OneCellId dst, const std::string& step);

// Given F : a_X # f => (f x f) # a_Y and an adjoint equivalence for f, the
// 2-cell G : a_Y # g => (g x g) # a_X making (g, G) a semi-monoid map.
Expr2 mate(const Paster& p, const AdjointEquivalence& w, TwoCellId F, OneCellId a_x, OneCellId a_y);

// Another 2-cell parallel to c, smallest id first; nullopt if c is alone.
std::optional<TwoCellId> parallel_twin(const TwoCategoryModel& m, TwoCellId c);

}  // namespace weakunits
