#include "weakunits/units.hpp"

#include <algorithm>
#include <random>

namespace weakunits {

namespace {

ObjId obj(std::size_t i) { return ObjId(static_cast<std::uint32_t>(i)); }
OneCellId arrow(std::size_t i) { return OneCellId(static_cast<std::uint32_t>(i)); }

}  // namespace

std::optional<UnitObject> make_unit_object(const TwoCategoryModel& m, ObjId i, OneCellId alpha) {
    if (m.src(alpha) != m.tensor(i, i) || m.dst(alpha) != i) return std::nullopt;
    auto w = find_pseudo_inverse(m, alpha);
    if (!w) return std::nullopt;
    if (!is_cancellable(m, i)) return std::nullopt;
    return UnitObject{i, alpha, *w};
}

std::vector<UnitObject> find_unit_objects(const TwoCategoryModel& m) {
    std::vector<UnitObject> out;
    for (std::size_t x = 0; x < m.object_count(); ++x) {
        ObjId i = obj(x);
        if (m.hom(m.tensor(i, i), i).empty() || !is_cancellable(m, i)) continue;
        for (OneCellId a : m.hom(m.tensor(i, i), i))
            if (auto w = find_pseudo_inverse(m, a)) out.push_back({i, a, *w});
    }
    return out;
}

std::vector<ConstraintCandidate> left_constraint_candidates(const TwoCategoryModel& m, const UnitObject& u, ObjId x) {
    std::vector<ConstraintCandidate> out;
    const ObjId I = u.unit;
    const OneCellId ax = m.tensor(u.alpha, m.id1(x));
    for (OneCellId l : m.hom(m.tensor(I, x), x))
        for (TwoCellId c : m.cells(m.tensor(m.id1(I), l), ax))
            if (m.invertible(c)) out.push_back({l, c});
    return out;
}

std::vector<ConstraintCandidate> right_constraint_candidates(const TwoCategoryModel& m, const UnitObject& u, ObjId x) {
    std::vector<ConstraintCandidate> out;
    const ObjId I = u.unit;
    const OneCellId xa = m.tensor(m.id1(x), u.alpha);
    for (OneCellId r : m.hom(m.tensor(x, I), x))
        for (TwoCellId c : m.cells(xa, m.tensor(r, m.id1(I))))
            if (m.invertible(c)) out.push_back({r, c});
    return out;
}

ConstraintChoice choice_from_seed(const TwoCategoryModel& m, const UnitObject& u, std::uint64_t seed) {
    ConstraintChoice ch;
    const auto n = m.object_count();
    ch.left.assign(n, 0);
    ch.right.assign(n, 0);
    if (seed == 0) return ch;
    std::mt19937_64 rng(seed);
    auto draw = [&](std::size_t k) {
        return k == 0 ? 0u : static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, k - 1)(rng));
    };
    for (std::size_t x = 0; x < n; ++x) ch.left[x] = draw(left_constraint_candidates(m, u, obj(x)).size());
    for (std::size_t x = 0; x < n; ++x) ch.right[x] = draw(right_constraint_candidates(m, u, obj(x)).size());
    return ch;
}

ConstraintPack complete_constraints(const TwoCategoryModel& m, const UnitObject& u, std::vector<OneCellId> lambda,
                                    std::vector<TwoCellId> L, std::vector<OneCellId> rho, std::vector<TwoCellId> R) {
    Paster P(m);
    const ObjId I = u.unit;
    const auto iI = P.id(I);
    ConstraintPack p;
    p.unit = I;
    p.alpha = u.alpha;
    p.lambda = std::move(lambda);
    p.L = std::move(L);
    p.rho = std::move(rho);
    p.R = std::move(R);

    const auto n1 = m.one_cell_count();
    p.lambda_nat.resize(n1);
    p.rho_nat.resize(n1);
    for (std::size_t i = 0; i < n1; ++i) {
        OneCellId f = arrow(i);
        const auto x = m.src(f).index(), y = m.dst(f).index();
        auto If = P.tensor(P.obj(I), P.arr(f));
        auto IIf = P.tensor(P.obj(I), If);
        auto fI = P.tensor(P.arr(f), P.obj(I));
        auto fII = P.tensor(fI, P.obj(I));

        auto cl = P.v(P.h(P.id(IIf), P.cell(p.L[y])), P.h(P.inv(p.L[x]), P.id(If)));
        p.lambda_nat[i] = divide_tensor(m, I, Side::Left, P.value(cl), m.comp1(P.value(If), p.lambda[y]),
                                        m.comp1(p.lambda[x], f), "naturality of lambda at " + m.label(f));

        auto cr = P.v(P.h(P.id(fII), P.inv(p.R[y])), P.h(P.cell(p.R[x]), P.id(fI)));
        p.rho_nat[i] = divide_tensor(m, I, Side::Right, P.value(cr), m.comp1(P.value(fI), p.rho[y]),
                                     m.comp1(p.rho[x], f), "naturality of rho at " + m.label(f));
    }

    const auto i = I.index();
    auto IaI = P.tensor({P.obj(I), P.arr(u.alpha), P.obj(I)});
    auto lhs = P.v(P.h(P.t(iI, P.inv(p.L[i])), P.cell(p.R[i])), P.h(P.t(P.inv(p.R[i]), iI), P.cell(p.L[i])));
    auto Ia = m.tensor(m.id1(I), u.alpha), aI = m.tensor(u.alpha, m.id1(I));
    p.A = divide_whisker(m, P.value(IaI), Side::Left, P.value(lhs), Ia, aI, "associator");
    p.D = divide_tensor(m, I, Side::Left, P.value(P.v(P.cell(p.A), P.inv(p.L[i]))), u.alpha, p.lambda[i],
                        "comparison alpha => lambda_I");
    p.E = divide_tensor(m, I, Side::Right, P.value(P.v(P.inv(p.R[i]), P.cell(p.A))), p.rho[i], u.alpha,
                        "comparison rho_I => alpha");
    return p;
}

ConstraintPack synth_constraints(const TwoCategoryModel& m, const UnitObject& u, const ConstraintChoice& choice) {
    const auto n = m.object_count();
    std::vector<OneCellId> lambda(n), rho(n);
    std::vector<TwoCellId> L(n), R(n);
    for (std::size_t x = 0; x < n; ++x) {
        auto lc = left_constraint_candidates(m, u, obj(x));
        auto rc = right_constraint_candidates(m, u, obj(x));
        if (lc.empty())
            throw UniquenessError(UniquenessError::Kind::NoPreimage, "left constraint at " + m.label(obj(x)));
        if (rc.empty())
            throw UniquenessError(UniquenessError::Kind::NoPreimage, "right constraint at " + m.label(obj(x)));
        const auto& l = lc.at(choice.left.at(x) % lc.size());
        const auto& r = rc.at(choice.right.at(x) % rc.size());
        lambda[x] = l.arrow;
        L[x] = l.cell;
        rho[x] = r.arrow;
        R[x] = r.cell;
    }
    auto p = complete_constraints(m, u, std::move(lambda), std::move(L), std::move(rho), std::move(R));
    p.left_choice = choice.left;
    p.right_choice = choice.right;
    return p;
}

ConstraintPack synth_constraints(const TwoCategoryModel& m, const UnitObject& u, std::uint64_t seed) {
    return synth_constraints(m, u, choice_from_seed(m, u, seed));
}

PackEnumeration enumerate_constraint_packs(const TwoCategoryModel& m, const UnitObject& u, std::size_t budget) {
    const auto n = m.object_count();
    std::vector<std::size_t> radix;
    for (std::size_t x = 0; x < n; ++x) radix.push_back(left_constraint_candidates(m, u, obj(x)).size());
    for (std::size_t x = 0; x < n; ++x) radix.push_back(right_constraint_candidates(m, u, obj(x)).size());
    PackEnumeration out;
    if (std::find(radix.begin(), radix.end(), 0u) != radix.end()) return out;
    std::vector<std::size_t> digit(radix.size(), 0);
    while (true) {
        if (out.packs.size() >= budget) {
            out.truncated = true;
            return out;
        }
        ConstraintChoice ch;
        for (std::size_t x = 0; x < n; ++x) {
            ch.left.push_back(static_cast<std::uint32_t>(digit[x]));
            ch.right.push_back(static_cast<std::uint32_t>(digit[n + x]));
        }
        out.packs.push_back(synth_constraints(m, u, ch));
        // least significant digit last, so packs come out in lexicographic order
        std::size_t k = radix.size();
        while (k > 0) {
            --k;
            if (++digit[k] < radix[k]) break;
            digit[k] = 0;
            if (k == 0) return out;
        }
        if (radix.empty()) return out;
    }
}

bool record_constraint_definitions(Recorder& rec, const UnitObject& u, const ConstraintPack& p) {
    const auto& m = rec.model();
    const auto& P = rec.p();
    const ObjId I = u.unit;
    const auto iI = P.id(I);
    bool ok = true;
    for (std::size_t k = 0; k < m.one_cell_count(); ++k) {
        OneCellId f = arrow(k);
        const auto x = m.src(f).index(), y = m.dst(f).index();
        auto If = P.tensor(P.obj(I), P.arr(f));
        auto IIf = P.tensor(P.obj(I), If);
        auto fI = P.tensor(P.arr(f), P.obj(I));
        auto fII = P.tensor(fI, P.obj(I));
        ok &= rec.check("L is a modification at " + m.label(f),
                        P.v(P.t(iI, P.cell(p.lambda_nat[k])), P.h(P.cell(p.L[x]), P.id(If))),
                        P.h(P.id(IIf), P.cell(p.L[y])));
        ok &= rec.check("R is a modification at " + m.label(f),
                        P.v(P.h(P.id(fII), P.cell(p.R[y])), P.t(P.cell(p.rho_nat[k]), iI)),
                        P.h(P.cell(p.R[x]), P.id(fI)));
    }
    const auto i = I.index();
    auto IaI = P.tensor({P.obj(I), P.arr(u.alpha), P.obj(I)});
    rec.witness("A", p.A);
    rec.witness("D", p.D);
    rec.witness("E", p.E);
    ok &= rec.check("associator",
                    P.v(P.h(P.t(iI, P.inv(p.L[i])), P.cell(p.R[i])), P.h(P.t(P.inv(p.R[i]), iI), P.cell(p.L[i]))),
                    P.h(P.id(IaI), P.cell(p.A)));
    ok &= rec.check("comparison D", P.v(P.t(iI, P.cell(p.D)), P.cell(p.L[i])), P.cell(p.A));
    ok &= rec.check("comparison E", P.v(P.cell(p.R[i]), P.t(P.cell(p.E), iI)), P.cell(p.A));
    return ok;
}

bool pentagon_holds(Recorder& rec, const UnitObject& u, TwoCellId a, const std::string& tag, bool expect) {
    const auto& P = rec.p();
    const auto iI = P.id(u.unit);
    auto I = P.obj(u.unit);
    auto al = P.arr(u.alpha);
    auto aI = P.tensor(al, I);
    auto aII = P.tensor(aI, I);
    auto IIa = P.tensor({I, I, al});
    auto IaI = P.tensor({I, al, I});
    auto A = P.cell(a);
    bool s = rec.check(tag + "short pentagon",
                       P.v(P.h(P.t(iI, A), P.id(aI)), P.h(P.t(A, iI), P.id(aI))), P.h(P.id(aII), A), expect);
    auto ring = P.h(A, P.id(al));
    bool f = rec.check(tag + "pentagon",
                       P.v({P.h(P.t(iI, ring), P.id(al)), P.h(P.id(IaI), ring), P.h(P.t(ring, iI), P.id(al))}),
                       P.v(P.h(P.id(IIa), ring), P.h(P.id(aII), ring)), expect);
    return s && f;
}

TheoremAReport verify_theorem_A(Recorder& rec, const UnitObject& u, const ConstraintPack& p) {
    TheoremAReport r;
    r.definitions = record_constraint_definitions(rec, u, p);
    const auto& P = rec.p();
    const auto iI = P.id(u.unit);
    auto I = P.obj(u.unit);
    auto al = P.arr(u.alpha);
    auto aI = P.tensor(al, I);
    auto aII = P.tensor(aI, I);
    auto IIa = P.tensor({I, I, al});
    auto IaI = P.tensor({I, al, I});
    auto A = P.cell(p.A);
    r.short_pentagon = rec.check("short pentagon", P.v(P.h(P.t(iI, A), P.id(aI)), P.h(P.t(A, iI), P.id(aI))),
                                 P.h(P.id(aII), A));
    auto ring = P.h(A, P.id(al));
    r.full_pentagon =
        rec.check("pentagon", P.v({P.h(P.t(iI, ring), P.id(al)), P.h(P.id(IaI), ring), P.h(P.t(ring, iI), P.id(al))}),
                  P.v(P.h(P.id(IIa), ring), P.h(P.id(aII), ring)));
    return r;
}

ActionReport verify_actions(Recorder& rec, const UnitObject& u, const ConstraintPack& p) {
    const auto& m = rec.model();
    const auto& P = rec.p();
    auto I = P.obj(u.unit);
    auto al = P.arr(u.alpha);
    const auto iI = P.id(u.unit);
    auto ring = P.h(P.cell(p.A), P.id(al));
    auto ring_rev = P.h(P.inv(p.A), P.id(al));
    ActionReport r{true, true};
    for (std::size_t k = 0; k < m.object_count(); ++k) {
        ObjId xo = obj(k);
        auto X = P.obj(xo);
        auto iX = P.id(xo);
        auto lam = P.arr(p.lambda[k]);
        auto L = P.cell(p.L[k]);
        auto Il = P.tensor(I, lam), IIl = P.tensor({I, I, lam});
        auto IaX = P.tensor({I, al, X}), aIX = P.tensor({al, I, X});
        r.left &= rec.check("left action pentagon at " + m.label(xo),
                            P.v({P.h({P.t(iI, L), P.id(Il), P.id(lam)}), P.h({P.id(IaX), L, P.id(lam)}),
                                 P.h(P.t(ring, iX), P.id(lam))}),
                            P.v(P.h({P.id(IIl), L, P.id(lam)}), P.h({P.id(aIX), L, P.id(lam)})));

        auto rh = P.arr(p.rho[k]);
        auto Ri = P.inv(p.R[k]);
        auto rI = P.tensor(rh, I), rII = P.tensor({rh, I, I});
        auto XaI = P.tensor({X, al, I}), XIa = P.tensor({X, I, al});
        r.right &= rec.check("right action pentagon at " + m.label(xo),
                             P.v({P.h({P.t(Ri, iI), P.id(rI), P.id(rh)}), P.h({P.id(XaI), Ri, P.id(rh)}),
                                  P.h(P.t(iX, ring_rev), P.id(rh))}),
                             P.v(P.h({P.id(rII), Ri, P.id(rh)}), P.h({P.id(XIa), Ri, P.id(rh)})));
    }
    return r;
}

TwoCellId kelly_lambda(const TwoCategoryModel& m, const ConstraintPack& p, ObjId x, ObjId y) {
    Paster P(m);
    const ObjId xy = m.tensor(x, y);
    auto c = P.v(P.cell(p.L[xy.index()]), P.t(P.inv(p.L[x.index()]), P.id(y)));
    return divide_tensor(m, p.unit, Side::Left, P.value(c), p.lambda[xy.index()],
                         m.tensor(p.lambda[x.index()], m.id1(y)), "K^lambda at " + m.label(x) + "," + m.label(y));
}

TwoCellId kelly_rho(const TwoCategoryModel& m, const ConstraintPack& p, ObjId x, ObjId y) {
    Paster P(m);
    const ObjId xy = m.tensor(x, y);
    auto c = P.v(P.t(P.id(x), P.inv(p.R[y.index()])), P.cell(p.R[xy.index()]));
    return divide_tensor(m, p.unit, Side::Right, P.value(c), m.tensor(m.id1(x), p.rho[y.index()]),
                         p.rho[xy.index()], "K^rho at " + m.label(x) + "," + m.label(y));
}

// ---- morphisms -----------------------------------------------------------

bool is_unit_morphism(const TwoCategoryModel& m, const UnitObject& s, const UnitObject& t, const UnitMorphism& f) {
    if (m.src(f.u) != s.unit || m.dst(f.u) != t.unit) return false;
    if (m.src(f.U) != m.comp1(s.alpha, f.u) || m.dst(f.U) != m.comp1(m.tensor(f.u, f.u), t.alpha)) return false;
    return m.invertible(f.U) && is_equi_arrow(m, f.u);
}

std::vector<UnitMorphism> enumerate_unit_morphisms(const TwoCategoryModel& m, const UnitObject& s,
                                                   const UnitObject& t, std::size_t budget) {
    std::vector<UnitMorphism> out;
    for (OneCellId u : m.hom(s.unit, t.unit)) {
        if (!is_equi_arrow(m, u)) continue;
        for (TwoCellId U : m.cells(m.comp1(s.alpha, u), m.comp1(m.tensor(u, u), t.alpha))) {
            if (!m.invertible(U)) continue;
            if (out.size() >= budget) throw CertificationError("unit morphism enumeration exceeded its budget");
            out.push_back({u, U});
        }
    }
    return out;
}

namespace {

TwoCellId left_cell(const TwoCategoryModel& m, const ConstraintPack& sp, const ConstraintPack& tp,
                    const UnitMorphism& f, ObjId xo) {
    Paster P(m);
    const auto x = xo.index();
    auto uX = P.tensor(P.arr(f.u), P.obj(xo));
    auto uuX = P.tensor({P.arr(f.u), P.arr(f.u), P.obj(xo)});
    auto c = P.v({P.h(P.cell(sp.L[x]), P.id(uX)), P.t(P.cell(f.U), P.id(xo)), P.h(P.id(uuX), P.inv(tp.L[x]))});
    return divide_tensor(m, f.u, Side::Left, P.value(c), sp.lambda[x], m.comp1(P.value(uX), tp.lambda[x]),
                         "left comparison cell at " + m.label(xo));
}

TwoCellId right_cell(const TwoCategoryModel& m, const ConstraintPack& sp, const ConstraintPack& tp,
                     const UnitMorphism& f, ObjId xo) {
    Paster P(m);
    const auto x = xo.index();
    auto Xu = P.tensor(P.obj(xo), P.arr(f.u));
    auto Xuu = P.tensor({P.obj(xo), P.arr(f.u), P.arr(f.u)});
    auto c = P.v({P.h(P.inv(sp.R[x]), P.id(Xu)), P.t(P.id(xo), P.cell(f.U)), P.h(P.id(Xuu), P.cell(tp.R[x]))});
    return divide_tensor(m, f.u, Side::Right, P.value(c), sp.rho[x], m.comp1(P.value(Xu), tp.rho[x]),
                         "right comparison cell at " + m.label(xo));
}

}  // namespace

UnitMapCells unitmap_cells(const TwoCategoryModel& m, const ConstraintPack& sp, const ConstraintPack& tp,
                           const UnitMorphism& f) {
    UnitMapCells c;
    for (std::size_t x = 0; x < m.object_count(); ++x) {
        c.left.push_back(left_cell(m, sp, tp, f, obj(x)));
        c.right.push_back(right_cell(m, sp, tp, f, obj(x)));
    }
    return c;
}

bool record_unitmap_cells(Recorder& rec, const ConstraintPack& sp, const ConstraintPack& tp, const UnitMorphism& f,
                          const UnitMapCells& c, const std::string& tag) {
    const auto& m = rec.model();
    const auto& P = rec.p();
    bool ok = true;
    for (std::size_t x = 0; x < m.object_count(); ++x) {
        ObjId xo = obj(x);
        auto u = P.arr(f.u);
        auto uX = P.tensor(u, P.obj(xo));
        auto uuX = P.tensor({u, u, P.obj(xo)});
        auto Xu = P.tensor(P.obj(xo), u);
        auto Xuu = P.tensor({P.obj(xo), u, u});
        rec.witness(tag + "U^left at " + m.label(xo), c.left[x]);
        rec.witness(tag + "U^right at " + m.label(xo), c.right[x]);
        ok &= rec.check(tag + "(P) at " + m.label(xo),
                        P.v(P.h(P.cell(sp.L[x]), P.id(uX)), P.t(P.cell(f.U), P.id(xo))),
                        P.v(P.t(P.id(u), P.cell(c.left[x])), P.h(P.id(uuX), P.cell(tp.L[x]))));
        ok &= rec.check(tag + "(Q) at " + m.label(xo),
                        P.v(P.h(P.cell(sp.R[x]), P.id(Xu)), P.t(P.cell(c.right[x]), P.id(u))),
                        P.v(P.t(P.id(xo), P.cell(f.U)), P.h(P.id(Xuu), P.cell(tp.R[x]))));
    }
    return ok;
}

bool is_arrow_cancellable(const TwoCategoryModel& m, OneCellId u, Side side) {
    for (std::size_t a = 0; a < m.object_count(); ++a)
        for (std::size_t b = 0; b < m.object_count(); ++b)
            if (!is_hom_equivalence(m, u, side, obj(a), obj(b))) return false;
    return true;
}

UnitMapReport verify_unitmap_equivalences(const TwoCategoryModel& m, const ConstraintPack& sp,
                                          const ConstraintPack& tp, const UnitMorphism& f) {
    UnitMapReport r;
    r.equi = is_equi_arrow(m, f.u);
    r.left_cancellable = is_arrow_cancellable(m, f.u, Side::Left);
    r.right_cancellable = is_arrow_cancellable(m, f.u, Side::Right);
    auto family = [&](bool left) {
        try {
            for (std::size_t x = 0; x < m.object_count(); ++x) {
                auto c = left ? left_cell(m, sp, tp, f, obj(x)) : right_cell(m, sp, tp, f, obj(x));
                if (!m.invertible(c)) return false;
            }
            return true;
        } catch (const UniquenessError&) {
            return false;
        }
    };
    r.left_cells = family(true);
    r.right_cells = family(false);
    return r;
}

bool semimonoid_map_holds(Recorder& rec, const UnitMorphism& f, TwoCellId a0, TwoCellId a1, const std::string& tag) {
    const auto& P = rec.p();
    auto u = P.arr(f.u);
    auto uu = P.tensor(u, u);
    auto uuu = P.tensor(uu, u);
    return rec.check(tag + "semi-monoid map", P.v(P.h(P.cell(a0), P.id(uu)), P.t(P.cell(f.U), P.id(u))),
                     P.v(P.t(P.id(u), P.cell(f.U)), P.h(P.id(uuu), P.cell(a1))));
}

bool cylinder_holds(const TwoCategoryModel& m, const UnitObject& s, const UnitObject& t, const UnitMorphism& x,
                    const UnitMorphism& y, TwoCellId T) {
    if (m.src(T) != x.u || m.dst(T) != y.u) return false;
    auto lhs = m.vcomp(x.U, m.hcomp(m.tensor(T, T), m.id2(t.alpha)));
    auto rhs = m.vcomp(m.hcomp(m.id2(s.alpha), T), y.U);
    return lhs == rhs;
}

std::vector<TwoCellId> enumerate_unit_2morphisms(const TwoCategoryModel& m, const UnitObject& s,
                                                 const UnitObject& t, const UnitMorphism& x, const UnitMorphism& y) {
    std::vector<TwoCellId> out;
    for (TwoCellId T : m.cells(x.u, y.u))
        if (cylinder_holds(m, s, t, x, y, T)) out.push_back(T);
    return out;
}

TwoCellId unique_unit_2morphism(Recorder& rec, const UnitObject& s, const ConstraintPack& sp, const UnitObject& t,
                                const ConstraintPack& tp, const UnitMorphism& x, const UnitMorphism& y,
                                const std::string& tag) {
    const auto& m = rec.model();
    const auto& P = rec.p();
    auto cx = unitmap_cells(m, sp, tp, x);
    auto cy = unitmap_cells(m, sp, tp, y);
    const auto i = s.unit.index();
    auto c = P.v(P.inv(cx.left[i]), P.cell(cy.left[i]));
    auto TI = divide_whisker(m, tp.lambda[i], Side::Right, P.value(c), m.tensor(x.u, m.id1(s.unit)),
                             m.tensor(y.u, m.id1(s.unit)), tag + "T x I");
    auto T = divide_tensor(m, s.unit, Side::Right, TI, x.u, y.u, tag + "T");
    rec.witness(tag + "T", T);
    for (std::size_t k = 0; k < m.object_count(); ++k) {
        ObjId xo = obj(k);
        rec.check(tag + "TXP at " + m.label(xo),
                  P.v(P.cell(cx.left[k]), P.h(P.t(P.cell(T), P.id(xo)), P.id(tp.lambda[k]))), P.cell(cy.left[k]));
        rec.check(tag + "TXQ at " + m.label(xo),
                  P.v(P.cell(cx.right[k]), P.h(P.t(P.id(xo), P.cell(T)), P.id(tp.rho[k]))), P.cell(cy.right[k]));
    }
    rec.check(tag + "cylinder", P.v(P.cell(x.U), P.h(P.t(P.cell(T), P.cell(T)), P.id(t.alpha))),
              P.v(P.h(P.id(s.alpha), P.cell(T)), P.cell(y.U)));
    if (!m.invertible(T)) throw CertificationError(tag + "T is not invertible");
    return T;
}

UnitObject compose_units(const TwoCategoryModel& m, const UnitObject& s, const ConstraintPack& sp,
                         const UnitObject& t, const ConstraintPack& tp) {
    const ObjId ij = m.tensor(s.unit, t.unit);
    const OneCellId gamma = m.tensor(tp.rho[s.unit.index()], sp.lambda[t.unit.index()]);
    auto u = make_unit_object(m, ij, gamma);
    if (!u) throw CertificationError("the product of two units is not a unit");
    return *u;
}

UnitMorphism unit_morphism_between(Recorder& rec, const UnitObject& s, const ConstraintPack& sp, const UnitObject& t,
                                   const ConstraintPack& tp, const std::string& tag) {
    const auto& m = rec.model();
    const auto& P = rec.p();
    const ObjId I = s.unit, J = t.unit;
    const auto i = I.index(), j = J.index();
    UnitObject g = compose_units(m, s, sp, t, tp);

    const OneCellId lJ = sp.lambda[j], rI = tp.rho[i];
    auto IJl = P.tensor({P.obj(I), P.obj(J), P.arr(lJ)});
    auto Z = P.v({P.h({P.id(IJl), P.inv(tp.R[i]), P.id(lJ)}), P.h(P.id(IJl), P.cell(sp.lambda_nat[t.alpha.index()])),
                  P.h({P.id(IJl), P.cell(kelly_lambda(m, sp, J, J)), P.id(t.alpha)})});
    auto rIJ = P.tensor({P.arr(rI), P.obj(I), P.obj(J)});
    auto Zr = P.v({P.h({P.id(rIJ), P.cell(sp.L[j]), P.id(rI)}), P.h(P.id(rIJ), P.cell(tp.rho_nat[s.alpha.index()])),
                   P.h({P.id(rIJ), P.inv(kelly_rho(m, tp, I, I)), P.id(s.alpha)})});
    UnitMorphism to_t{lJ, P.value(Z)}, to_s{rI, P.value(Zr)};
    rec.witness(tag + "Z", to_t.U);
    rec.witness(tag + "Z'", to_s.U);
    rec.check(tag + "Z", P.cell(to_t.U), Z);
    rec.check(tag + "Z'", P.cell(to_s.U), Zr);
    if (!is_unit_morphism(m, g, t, to_t) || !is_unit_morphism(m, g, s, to_s))
        throw CertificationError(tag + "projections from the product unit are not unit morphisms");

    auto w = find_pseudo_inverse(m, rI);
    if (!w) throw CertificationError(tag + "r_I has no pseudo-inverse");
    auto G = mate(P, *w, to_s.U, g.alpha, s.alpha);
    auto gg = P.tensor(P.arr(w->g), P.arr(w->g));
    auto U = P.v(P.h(G, P.id(lJ)), P.h(P.id(gg), P.cell(to_t.U)));
    UnitMorphism out{m.comp1(w->g, lJ), P.value(U)};
    rec.witness(tag + "u", out.u);
    rec.witness(tag + "U", out.U);
    rec.check(tag + "U", P.cell(out.U), U);
    if (!is_unit_morphism(m, s, t, out)) throw CertificationError(tag + "constructed arrow is not a unit morphism");
    return out;
}

TheoremCReport verify_theorem_C(Recorder& rec, std::uint64_t seed, std::size_t budget) {
    const auto& m = rec.model();
    TheoremCReport r;
    auto units = find_unit_objects(m);
    r.units = units.size();
    std::vector<ConstraintPack> packs;
    for (const auto& u : units) packs.push_back(synth_constraints(m, u, seed));
    r.inhabited = r.unique_2cells = r.constructive_agrees = true;
    auto fail = [&](bool& flag, const std::string& why) {
        flag = false;
        if (r.failure.empty()) r.failure = why;
    };
    for (std::size_t a = 0; a < units.size(); ++a)
        for (std::size_t b = 0; b < units.size(); ++b) {
            ++r.pairs;
            const std::string tag = "[" + std::to_string(a) + "->" + std::to_string(b) + "] ";
            auto morphs = enumerate_unit_morphisms(m, units[a], units[b], budget);
            r.morphisms += morphs.size();
            if (morphs.empty()) fail(r.inhabited, tag + "no unit morphism");
            auto built = unit_morphism_between(rec, units[a], packs[a], units[b], packs[b], tag);
            if (std::find(morphs.begin(), morphs.end(), built) == morphs.end())
                fail(r.constructive_agrees, tag + "constructed morphism not found by enumeration");
            for (std::size_t x = 0; x < morphs.size(); ++x)
                for (std::size_t y = 0; y < morphs.size(); ++y) {
                    if (r.parallel_pairs >= budget) {
                        r.truncated = true;
                        return r;
                    }
                    ++r.parallel_pairs;
                    auto ts = enumerate_unit_2morphisms(m, units[a], units[b], morphs[x], morphs[y]);
                    const std::string t2 = tag + "(" + std::to_string(x) + "=>" + std::to_string(y) + ") ";
                    if (ts.size() != 1) {
                        fail(r.unique_2cells, t2 + std::to_string(ts.size()) + " unit 2-morphisms");
                        continue;
                    }
                    auto T = unique_unit_2morphism(rec, units[a], packs[a], units[b], packs[b], morphs[x], morphs[y],
                                                   t2);
                    if (T != ts.front()) fail(r.constructive_agrees, t2 + "constructed 2-cell differs");
                }
        }
    if (rec.failures()) fail(r.constructive_agrees, "recorded equation failed: " + rec.failed_names().front());
    return r;
}

}  // namespace weakunits
