#include "weakunits/arrowcat.hpp"

namespace weakunits {

std::optional<OneCellId> ArrowModel::find(const ArrowSquare& s) const {
    auto it = square_ids_.find(s);
    if (it == square_ids_.end()) return std::nullopt;
    return it->second;
}

std::optional<TwoCellId> ArrowModel::find(const ArrowCylinder& c) const {
    auto it = cylinder_ids_.find(c);
    if (it == cylinder_ids_.end()) return std::nullopt;
    return it->second;
}

ArrowModel build_arrow_model(std::shared_ptr<const TwoCategoryModel> base, std::size_t budget) {
    const auto& B = *base;
    ArrowModel am;
    am.base_ = base;
    ModelBuilder b(B.name() + "-arrows");
    const auto n1 = B.one_cell_count();

    for (std::uint32_t i = 0; i < n1; ++i) b.add_object("[" + B.label(OneCellId(i)) + "]");

    for (std::uint32_t xi = 0; xi < n1; ++xi)
        for (std::uint32_t yi = 0; yi < n1; ++yi) {
            OneCellId x(xi), y(yi);
            for (OneCellId f0 : B.hom(B.src(x), B.src(y)))
                for (OneCellId f1 : B.hom(B.dst(x), B.dst(y)))
                    for (TwoCellId F : B.cells(B.comp1(x, f1), B.comp1(f0, y))) {
                        if (am.squares_.size() >= budget)
                            throw CertificationError("arrow model exceeds the 1-cell budget of " +
                                                     std::to_string(budget));
                        ArrowSquare s{x, y, f0, f1, F};
                        auto id = b.add_one_cell(ObjId(xi), ObjId(yi),
                                                 "(" + B.label(f0) + "," + B.label(f1) + ";" + B.label(F) + ")");
                        am.square_ids_.emplace(s, id);
                        am.squares_.push_back(s);
                    }
        }

    auto square_of = [&](const ArrowSquare& s) {
        auto it = am.square_ids_.find(s);
        if (it == am.square_ids_.end()) throw CertificationError("arrow model: composite square missing");
        return it->second;
    };

    const auto ns = am.squares_.size();
    for (std::uint32_t si = 0; si < ns; ++si)
        for (std::uint32_t ti = 0; ti < ns; ++ti) {
            const auto& s = am.squares_[si];
            const auto& t = am.squares_[ti];
            if (s.x != t.x || s.y != t.y) continue;
            for (TwoCellId m0 : B.cells(s.f0, t.f0))
                for (TwoCellId m1 : B.cells(s.f1, t.f1)) {
                    auto lhs = B.vcomp(s.F, B.hcomp(m0, B.id2(s.y)));
                    auto rhs = B.vcomp(B.hcomp(B.id2(s.x), m1), t.F);
                    if (lhs != rhs) continue;
                    if (am.cylinders_.size() >= budget)
                        throw CertificationError("arrow model exceeds the 2-cell budget of " + std::to_string(budget));
                    ArrowCylinder c{OneCellId(si), OneCellId(ti), m0, m1};
                    auto id = b.add_two_cell(OneCellId(si), OneCellId(ti), "(" + B.label(m0) + "," + B.label(m1) + ")");
                    am.cylinder_ids_.emplace(c, id);
                    am.cylinders_.push_back(c);
                }
        }

    auto cylinder_of = [&](const ArrowCylinder& c) {
        auto it = am.cylinder_ids_.find(c);
        if (it == am.cylinder_ids_.end()) throw CertificationError("arrow model: composite cylinder missing");
        return it->second;
    };

    for (std::uint32_t xi = 0; xi < n1; ++xi) {
        OneCellId x(xi);
        b.set_id1(ObjId(xi), square_of({x, x, B.id1(B.src(x)), B.id1(B.dst(x)), B.id2(x)}));
    }
    for (std::uint32_t si = 0; si < ns; ++si) {
        const auto& s = am.squares_[si];
        b.set_id2(OneCellId(si), cylinder_of({OneCellId(si), OneCellId(si), B.id2(s.f0), B.id2(s.f1)}));
    }

    auto compose = [&](const ArrowSquare& s, const ArrowSquare& t) {
        auto F = B.vcomp(B.hcomp(s.F, B.id2(t.f1)), B.hcomp(B.id2(s.f0), t.F));
        return ArrowSquare{s.x, t.y, B.comp1(s.f0, t.f0), B.comp1(s.f1, t.f1), F};
    };
    auto tensor = [&](const ArrowSquare& s, const ArrowSquare& t) {
        return ArrowSquare{B.tensor(s.x, t.x), B.tensor(s.y, t.y), B.tensor(s.f0, t.f0), B.tensor(s.f1, t.f1),
                           B.tensor(s.F, t.F)};
    };

    b.fill_tensor_obj([&](ObjId x, ObjId y) { return ObjId(B.tensor(OneCellId(x.value), OneCellId(y.value)).value); });
    b.fill_comp1([&](OneCellId f, OneCellId g) { return square_of(compose(am.squares_[f.index()], am.squares_[g.index()])); });
    b.fill_tensor1([&](OneCellId f, OneCellId g) { return square_of(tensor(am.squares_[f.index()], am.squares_[g.index()])); });
    b.fill_vcomp([&](TwoCellId a, TwoCellId c) {
        const auto& p = am.cylinders_[a.index()];
        const auto& q = am.cylinders_[c.index()];
        return cylinder_of({p.s, q.t, B.vcomp(p.m0, q.m0), B.vcomp(p.m1, q.m1)});
    });
    // composite and tensor squares are looked up through the tables filled above
    const auto& tabs = b.tables();
    b.fill_hcomp([&](TwoCellId a, TwoCellId c) {
        const auto& p = am.cylinders_[a.index()];
        const auto& q = am.cylinders_[c.index()];
        auto s = tabs.comp1[p.s.index() * ns + q.s.index()];
        auto t = tabs.comp1[p.t.index() * ns + q.t.index()];
        return cylinder_of({s, t, B.hcomp(p.m0, q.m0), B.hcomp(p.m1, q.m1)});
    });
    b.fill_tensor2([&](TwoCellId a, TwoCellId c) {
        const auto& p = am.cylinders_[a.index()];
        const auto& q = am.cylinders_[c.index()];
        auto s = tabs.tensor1[p.s.index() * ns + q.s.index()];
        auto t = tabs.tensor1[p.t.index() * ns + q.t.index()];
        return cylinder_of({s, t, B.tensor(p.m0, q.m0), B.tensor(p.m1, q.m1)});
    });

    am.model_ = std::make_shared<const TwoCategoryModel>(b.take());
    return am;
}

UnitObject lift_unit_morphism(const ArrowModel& am, const UnitObject& source, const UnitObject& target,
                              const UnitMorphism& mor) {
    const auto& B = am.base();
    auto inv = B.inverse(mor.U);
    if (!inv) throw CertificationError("unit morphism cell is not invertible");
    auto sq = am.find({B.tensor(mor.u, mor.u), mor.u, source.alpha, target.alpha, *inv});
    if (!sq) throw CertificationError("structure square of the lifted unit is missing from the arrow model");
    auto u = make_unit_object(am.model(), am.object(mor.u), *sq);
    if (!u) throw CertificationError("lifted unit is not a unit of the arrow model");
    return *u;
}

TheoremBReport verify_theorem_B(const ArrowModel& am, const UnitObject& source, const ConstraintPack& source_pack,
                                const UnitObject& target, const ConstraintPack& target_pack, const UnitMorphism& mor,
                                Recorder& base_rec, Recorder* arrow_rec) {
    TheoremBReport r;
    const auto& B = am.base();
    const auto& P = base_rec.p();
    const std::string tag = "[" + B.label(mor.u) + "," + B.label(mor.U) + "] ";
    r.direct = semimonoid_map_holds(base_rec, mor, source_pack.A, target_pack.A, tag);

    try {
        auto lifted = lift_unit_morphism(am, source, target, mor);
        r.lifted_unit = true;
        auto pack = synth_constraints(am.model(), lifted, std::uint64_t{0});
        bool arrow_a = true;
        if (arrow_rec) arrow_a = verify_theorem_A(*arrow_rec, lifted, pack).holds();
        const auto& cyl = am.cylinder(pack.A);
        auto u = P.arr(mor.u);
        auto uu = P.tensor(u, u);
        auto uuu = P.tensor(uu, u);
        bool cylinder = base_rec.check(tag + "associator of the lift",
                                       P.v(P.t(P.id(u), P.inv(mor.U)), P.h(P.cell(cyl.m0), P.id(uu))),
                                       P.v(P.h(P.id(uuu), P.cell(cyl.m1)), P.t(P.inv(mor.U), P.id(u))));
        bool e0 = base_rec.check(tag + "source end of the lifted associator", P.cell(cyl.m0), P.cell(source_pack.A));
        bool e1 = base_rec.check(tag + "target end of the lifted associator", P.cell(cyl.m1), P.cell(target_pack.A));
        r.projection = e0 && e1;
        r.arrow = arrow_a && cylinder && r.projection;
        if (!r.arrow) r.failure = tag + "arrow route failed";
    } catch (const std::exception& e) {
        r.failure = tag + e.what();
    }
    r.routes_agree = r.direct == r.arrow;
    if (!r.direct && r.failure.empty()) r.failure = tag + "semi-monoid map equation fails";
    return r;
}

}  // namespace weakunits
