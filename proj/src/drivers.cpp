#include "weakunits/drivers.hpp"

#include "weakunits/arrowcat.hpp"
#include "weakunits/dim1.hpp"
#include "weakunits/gps.hpp"
#include "weakunits/validate.hpp"

namespace weakunits {

namespace {

const char* statement_for(const std::string& tag) {
    if (tag == "validation") return "The tables satisfy every axiom of a strict semi-monoidal 2-category.";
    if (tag == "unit-objects")
        return "The listed objects are cancellable idempotents, each with an equi-arrow II -> I and a chosen "
               "adjoint pseudo-inverse.";
    if (tag == "constraints")
        return "Constraint cells built from the recorded choices satisfy their defining equations, and the induced "
               "associator I alpha => alpha I is the same for every choice.";
    if (tag == "theorem-A")
        return "For a unit with left and right constraints the associator I alpha => alpha I satisfies the "
               "pentagon in its short and full forms.";
    if (tag == "theorem-B")
        return "A unit morphism satisfies the semi-monoid map condition exactly when its lift is a unit of the "
               "arrow model whose associator projects onto the given ones.";
    if (tag == "theorem-C")
        return "Every hom of the 2-category of units is inhabited and any two parallel unit morphisms are joined "
               "by exactly one unit 2-morphism.";
    if (tag == "theorem-E")
        return "Units with constraints, units with unit-map cells and classical unit data with Kelly cells form "
               "2-categories related by functors that are surjective on objects and bijective on homs.";
    if (tag == "dimension-1")
        return "In a locally discrete model every unit has unique left and right constraints, and they satisfy "
               "the unit, tensor and Kelly axioms.";
    if (tag == "actions")
        return "The left and right actions of a unit satisfy their pentagons; recorded as an observation.";
    return "";
}

Certificate make_cert(const std::string& tag, const ModelPtr& m, const DriverOptions& opt) {
    Certificate c(tag, statement_for(tag));
    c.add_model("base", m);
    c.set_seed(opt.seed);
    return c;
}

json cell_json(const TwoCategoryModel& m, TwoCellId c) { return {{"2-cell", c.value}, {"label", m.label(c)}}; }
json arrow_json(const TwoCategoryModel& m, OneCellId f) { return {{"1-cell", f.value}, {"label", m.label(f)}}; }
json obj_json(const TwoCategoryModel& m, ObjId x) { return {{"object", x.value}, {"label", m.label(x)}}; }

json unit_json(const TwoCategoryModel& m, const UnitObject& u) {
    return {{"unit", obj_json(m, u.unit)},
            {"alpha", arrow_json(m, u.alpha)},
            {"pseudo_inverse", arrow_json(m, u.alpha_inverse.g)},
            {"eta", cell_json(m, u.alpha_inverse.eta)},
            {"eps", cell_json(m, u.alpha_inverse.eps)}};
}

json family_summary(const ValidationReport& r) {
    json fams = json::object();
    for (const auto& f : r.families) fams[f.family] = {{"checked", f.checked}, {"violations", f.violations}};
    return fams;
}

// Returns false (and fills the certificate) when the model fails validation.
bool validation_gate(Certificate& c, const TwoCategoryModel& m, const DriverOptions& opt) {
    if (opt.allow_invalid) return true;
    auto r = validate_model(m);
    if (r.valid()) return true;
    for (const auto& v : r.violations) c.counterexample({{"axiom", v.family}, {"message", v.message}});
    c.summary()["validation"] = family_summary(r);
    c.set_verdict(false);
    return false;
}

std::vector<ConstraintPack> packs_for(Certificate& c, const TwoCategoryModel& m, const UnitObject& u,
                                      const DriverOptions& opt) {
    if (!opt.all_choices) return {synth_constraints(m, u, opt.seed)};
    auto e = enumerate_constraint_packs(m, u, opt.budget);
    if (e.truncated) {
        c.counterexample({{"unit", obj_json(m, u.unit)}, {"message", "constraint enumeration exceeded the budget"}});
        c.set_verdict(false);
    }
    return e.packs;
}

void pack_witnesses(Recorder& rec, const ConstraintPack& p, const std::string& tag) {
    const auto& m = rec.model();
    for (std::size_t x = 0; x < m.object_count(); ++x) {
        const auto at = " at " + m.label(ObjId(static_cast<std::uint32_t>(x)));
        rec.witness(tag + "lambda" + at, p.lambda[x]);
        rec.witness(tag + "rho" + at, p.rho[x]);
        rec.witness(tag + "L" + at, p.L[x]);
        rec.witness(tag + "R" + at, p.R[x]);
    }
    rec.witness(tag + "A", p.A);
    rec.witness(tag + "D", p.D);
    rec.witness(tag + "E", p.E);
}

void fail_with(Certificate& c, const std::string& message) {
    c.counterexample({{"message", message}});
    c.set_verdict(false);
}

}  // namespace

Certificate run_validate(const ModelTables& tables) {
    auto r = validate_tables(tables);
    if (!r.structurally_sound()) throw StructuralError("model is structurally malformed", r.structural);
    auto m = std::make_shared<const TwoCategoryModel>(tables);
    Certificate c("validation", statement_for("validation"));
    c.add_model("base", m);
    for (const auto& v : r.violations) {
        json ce = {{"axiom", v.family}, {"message", v.message}};
        if (v.equation) try {
                c.record(v.family + ": " + v.message, "base", *v.equation);
                ce["equation"] = v.equation->name;
            } catch (const BoundaryError& e) {
                ce["boundary"] = e.what();
            }
        c.counterexample(ce);
    }
    c.summary()["families"] = family_summary(r);
    c.summary()["valid"] = r.valid();
    return c;
}

Certificate run_find_units(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("unit-objects", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    Recorder rec(m, &c);
    const auto& P = rec.p();
    json cancel = json::array();
    for (std::uint32_t x = 0; x < m.object_count(); ++x)
        cancel.push_back({{"object", x},
                          {"left", is_cancellable(m, ObjId(x), Side::Left)},
                          {"right", is_cancellable(m, ObjId(x), Side::Right)}});
    json units = json::array();
    for (const auto& u : find_unit_objects(m)) {
        const auto& w = u.alpha_inverse;
        const auto tag = "[" + m.label(u.unit) + "," + m.label(u.alpha) + "] ";
        rec.check(tag + "triangle identity at alpha", P.v(P.h(P.cell(w.eta), P.id(w.f)), P.h(P.id(w.f), P.cell(w.eps))),
                  P.id(w.f));
        rec.check(tag + "triangle identity at the pseudo-inverse",
                  P.v(P.h(P.id(w.g), P.cell(w.eta)), P.h(P.cell(w.eps), P.id(w.g))), P.id(w.g));
        units.push_back(unit_json(m, u));
    }
    c.summary()["cancellable"] = cancel;
    c.summary()["units"] = units;
    return c;
}

Certificate run_synth(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("constraints", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    Recorder rec(m, &c);
    const auto& P = rec.p();
    auto units = find_unit_objects(m);
    if (opt.unit && *opt.unit >= units.size())
        throw StructuralError("unit index " + std::to_string(*opt.unit) + " out of range (" +
                              std::to_string(units.size()) + " units)");
    json out = json::array();
    for (std::size_t k = 0; k < units.size(); ++k) {
        if (opt.unit && *opt.unit != k) continue;
        const auto& u = units[k];
        const auto tag = "[unit " + std::to_string(k) + "] ";
        try {
            auto packs = packs_for(c, m, u, opt);
            json choices = json::array();
            for (std::size_t i = 0; i < packs.size(); ++i) {
                const auto& p = packs[i];
                const auto ptag = packs.size() == 1 ? tag : tag + "[pack " + std::to_string(i) + "] ";
                record_constraint_definitions(rec, u, p);
                pack_witnesses(rec, p, ptag);
                if (i > 0)
                    rec.check(ptag + "associator agrees with pack 0", P.cell(p.A), P.cell(packs.front().A));
                choices.push_back({{"left", p.left_choice}, {"right", p.right_choice}});
            }
            out.push_back({{"unit", unit_json(m, u)}, {"packs", packs.size()}, {"choices", choices}});
        } catch (const std::exception& e) {
            fail_with(c, tag + e.what());
        }
    }
    c.summary()["units"] = out;
    return c;
}

Certificate run_verify_A(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("theorem-A", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    Recorder rec(m, &c);
    json out = json::array();
    auto units = find_unit_objects(m);
    for (std::size_t k = 0; k < units.size(); ++k) {
        const auto& u = units[k];
        const auto tag = "[unit " + std::to_string(k) + "] ";
        try {
            std::size_t held = 0;
            auto packs = packs_for(c, m, u, opt);
            for (std::size_t i = 0; i < packs.size(); ++i) {
                auto r = verify_theorem_A(rec, u, packs[i]);
                rec.witness(tag + "A" + (packs.size() > 1 ? " of pack " + std::to_string(i) : ""), packs[i].A);
                held += r.holds();
                if (!r.holds())
                    c.counterexample({{"unit", obj_json(m, u.unit)},
                                      {"pack", i},
                                      {"short_pentagon", r.short_pentagon},
                                      {"full_pentagon", r.full_pentagon},
                                      {"definitions", r.definitions}});
            }
            out.push_back({{"unit", unit_json(m, u)}, {"packs", packs.size()}, {"holding", held}});
        } catch (const std::exception& e) {
            fail_with(c, tag + e.what());
        }
    }
    c.summary()["units"] = out;
    return c;
}

Certificate run_verify_B(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("theorem-B", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    ArrowModel am;
    try {
        am = build_arrow_model(mp, opt.budget);
    } catch (const CertificationError& e) {
        fail_with(c, e.what());
        return c;
    }
    c.add_model("arrows", am.shared_model(), {{"construction", "arrow"}, {"from", "base"}, {"budget", opt.budget}});
    auto av = validate_model(am.model());
    c.summary()["arrow_model"] = {{"objects", am.model().object_count()},
                                  {"one_cells", am.model().one_cell_count()},
                                  {"two_cells", am.model().two_cell_count()},
                                  {"valid", av.valid()}};
    if (!av.valid()) fail_with(c, "arrow model fails validation");

    Recorder base(m, &c);
    Recorder arrows(am.model(), &c, "arrows");
    auto units = find_unit_objects(m);
    std::size_t morphisms = 0, agreeing = 0;
    json failures = json::array();
    for (std::size_t s = 0; s < units.size(); ++s)
        for (std::size_t t = 0; t < units.size(); ++t) {
            auto sp = synth_constraints(m, units[s], opt.seed);
            auto tp = synth_constraints(m, units[t], opt.seed);
            for (const auto& f : enumerate_unit_morphisms(m, units[s], units[t], opt.budget)) {
                ++morphisms;
                auto r = verify_theorem_B(am, units[s], sp, units[t], tp, f, base, &arrows);
                agreeing += r.routes_agree;
                if (!(r.direct && r.arrow && r.routes_agree))
                    c.counterexample({{"source", s},
                                      {"target", t},
                                      {"u", arrow_json(m, f.u)},
                                      {"U", cell_json(m, f.U)},
                                      {"direct", r.direct},
                                      {"arrow", r.arrow},
                                      {"routes_agree", r.routes_agree},
                                      {"message", r.failure}});
            }
        }
    c.summary()["units"] = units.size();
    c.summary()["morphisms"] = morphisms;
    c.summary()["routes_agree"] = agreeing;
    return c;
}

Certificate run_verify_C(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("theorem-C", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    Recorder rec(m, &c);
    auto r = verify_theorem_C(rec, opt.seed, opt.budget);
    c.summary() = {{"units", r.units},
                   {"pairs", r.pairs},
                   {"morphisms", r.morphisms},
                   {"parallel_pairs", r.parallel_pairs},
                   {"inhabited", r.inhabited},
                   {"unique_2cells", r.unique_2cells},
                   {"constructive_agrees", r.constructive_agrees},
                   {"truncated", r.truncated}};
    if (!r.holds()) fail_with(c, r.failure.empty() ? "contractibility fails" : r.failure);
    return c;
}

Certificate run_verify_E(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("theorem-E", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    Recorder rec(m, &c);
    auto r = verify_theorem_E(rec, opt.seed, opt.budget);
    auto counts = [](std::size_t obj, std::size_t mor, std::size_t two) {
        return json{{"objects", obj}, {"morphisms", mor}, {"2-cells", two}};
    };
    c.summary() = {{"units", r.units},
                   {"gps_units", r.gps_units},
                   {"gps_candidates", r.gps_candidates},
                   {"ta_disagreements", r.ta_disagreements},
                   {"hom_pairs", r.hom_pairs},
                   {"U", counts(r.uobjects, r.totals.u, r.totals.u2)},
                   {"E", counts(r.uobjects, r.totals.e, r.totals.e2)},
                   {"G", counts(r.uobjects, r.totals.g, r.totals.g2)},
                   {"phi_surjective", r.phi_surjective},
                   {"psi_surjective", r.psi_surjective},
                   {"round_trip_ci", r.round_trip_ci},
                   {"round_trip_gps", r.round_trip_gps},
                   {"lemma_W", r.lemma_W},
                   {"counterpart_involutive", r.counterpart_involutive},
                   {"homs_match", r.homs_match},
                   {"truncated", r.truncated}};
    if (!r.holds()) fail_with(c, r.failure.empty() ? "comparison fails" : r.failure);
    return c;
}

Certificate run_verify_dim1(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("dimension-1", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    try {
        require_locally_discrete(m);
    } catch (const CertificationError& e) {
        fail_with(c, e.what());
        return c;
    }
    Recorder rec(m, &c);
    const auto& P = rec.p();
    auto found = find_units_1(m);
    auto units2 = find_unit_objects(m);
    std::vector<Unit1> built;
    json out = json::array();
    for (auto [i, a] : found) {
        const auto tag = "[" + m.label(i) + "," + m.label(a) + "] ";
        try {
            auto u = construct_lr_1(m, i, a);
            auto r = verify_kelly_1(rec, u);
            bool assoc = verify_assoc_1(rec, u);
            for (const auto& f : r.failures) c.counterexample({{"unit", obj_json(m, i)}, {"message", f}});
            if (!r.holds() || !assoc) c.set_verdict(false);
            // the 2-dimensional synthesis restricted to 1-cells
            bool agrees = false;
            for (const auto& u2 : units2)
                if (u2.unit == i && u2.alpha == a) {
                    auto p = synth_constraints(m, u2, opt.seed);
                    agrees = true;
                    for (std::uint32_t x = 0; x < m.object_count(); ++x) {
                        const auto at = " at " + m.label(ObjId(x));
                        agrees &= rec.check(tag + "lambda agrees with the 2-dimensional one" + at,
                                            P.arr(u.lambda[x]), P.arr(p.lambda[x]));
                        agrees &= rec.check(tag + "rho agrees with the 2-dimensional one" + at, P.arr(u.rho[x]),
                                            P.arr(p.rho[x]));
                    }
                }
            if (!agrees) fail_with(c, tag + "no matching 2-dimensional constraints");
            out.push_back({{"unit", obj_json(m, i)}, {"alpha", arrow_json(m, a)}, {"holds", r.holds() && assoc}});
            built.push_back(u);
        } catch (const std::exception& e) {
            fail_with(c, tag + e.what());
        }
    }
    json isos = json::array();
    for (const auto& s : built)
        for (const auto& t : built) {
            auto f = canonical_unit_iso_1(m, s, t);
            rec.witness("canonical isomorphism " + m.label(s.alpha) + " -> " + m.label(t.alpha), f);
            isos.push_back({{"source", arrow_json(m, s.alpha)}, {"target", arrow_json(m, t.alpha)}, {"iso", arrow_json(m, f)}});
        }
    c.summary()["units"] = out;
    c.summary()["isomorphisms"] = isos;
    return c;
}

Certificate run_verify_actions(const ModelPtr& mp, const DriverOptions& opt) {
    const auto& m = *mp;
    auto c = make_cert("actions", mp, opt);
    if (!validation_gate(c, m, opt)) return c;
    Recorder rec(m, &c);
    json out = json::array();
    for (const auto& u : find_unit_objects(m)) {
        auto r = verify_actions(rec, u, synth_constraints(m, u, opt.seed));
        out.push_back({{"unit", obj_json(m, u.unit)}, {"alpha", arrow_json(m, u.alpha)}, {"left", r.left}, {"right", r.right}});
    }
    c.summary()["units"] = out;
    return c;
}

Certificate run_verify(const ModelPtr& m, const std::string& theorem, const DriverOptions& opt) {
    if (theorem == "A") return run_verify_A(m, opt);
    if (theorem == "B") return run_verify_B(m, opt);
    if (theorem == "C") return run_verify_C(m, opt);
    if (theorem == "E") return run_verify_E(m, opt);
    if (theorem == "dim1") return run_verify_dim1(m, opt);
    if (theorem == "actions") return run_verify_actions(m, opt);
    throw StructuralError("unknown theorem '" + theorem + "' (expected A, B, C, E, dim1 or actions)");
}

}  // namespace weakunits
