#include "weakunits/validate.hpp"

#include <array>
#include <functional>

namespace weakunits {

bool ValidationReport::valid() const {
    if (!structural.empty()) return false;
    for (const auto& f : families)
        if (f.violations) return false;
    return true;
}

std::uint64_t ValidationReport::violation_count(const std::string& family) const {
    for (const auto& f : families)
        if (f.family == family) return f.violations;
    return 0;
}

namespace {

enum Fam { kBoundary, kComp1Unit, kComp1Assoc, kHomUnit, kHomAssoc, kHcompUnit, kHcompAssoc, kInterchange,
           kTensorFun, kTensorAssoc, kFamCount };

using u32 = std::uint32_t;

class Validator {
public:
    Validator(const TwoCategoryModel& m, std::size_t cap) : m_(m), cap_(cap) {
        for (int i = 0; i < kFamCount; ++i) report_.families.push_back({kAxiomFamilies[i], 0, 0});
        const auto n1 = m.one_cell_count(), n2 = m.two_cell_count();
        out1_.assign(m.object_count(), {});
        for (u32 f = 0; f < n1; ++f) out1_[m.src(OneCellId(f)).index()].push_back(OneCellId(f));
        out2_.assign(n1, {});
        from_obj2_.assign(m.object_count(), {});
        for (u32 a = 0; a < n2; ++a) {
            TwoCellId c(a);
            out2_[m.src(c).index()].push_back(c);
            from_obj2_[m.src(m.src(c)).index()].push_back(c);
        }
    }

    ValidationReport run() {
        boundaries();
        one_cells();
        hom_categories();
        horizontal();
        interchange();
        tensor_functoriality();
        tensor_associativity();
        return std::move(report_);
    }

private:
    const TwoCategoryModel& m_;
    std::size_t cap_;
    ValidationReport report_;
    std::vector<std::vector<OneCellId>> out1_;
    std::vector<std::vector<TwoCellId>> out2_;
    std::vector<std::vector<TwoCellId>> from_obj2_;

    template <class Describe>
    bool check(Fam fam, bool ok, Describe&& describe) {
        auto& f = report_.families[fam];
        ++f.checked;
        if (ok) return true;
        if (f.violations++ < cap_) {
            auto v = describe();
            v.family = f.family;
            report_.violations.push_back(std::move(v));
        }
        return false;
    }

    static Violation eq(std::string msg, Expr2 lhs, Expr2 rhs) {
        Violation v;
        v.equation = Equation{msg, std::move(lhs), std::move(rhs)};
        v.message = std::move(msg);
        return v;
    }
    static Violation note(std::string msg) {
        Violation v;
        v.message = std::move(msg);
        return v;
    }
    std::string l(OneCellId f) const { return m_.label(f); }
    std::string l(TwoCellId a) const { return m_.label(a); }
    std::string l(ObjId x) const { return m_.label(x); }

    static Expr2 I1(Expr1 e) { return make_id2(std::move(e)); }
    static Expr1 L1(OneCellId f) { return make_lit1(f); }
    static Expr2 L2(TwoCellId a) { return make_lit2(a); }

    void boundaries() {
        const auto n0 = m_.object_count(), n1 = m_.one_cell_count(), n2 = m_.two_cell_count();
        for (u32 x = 0; x < n0; ++x) {
            ObjId o(x);
            auto f = m_.id1(o);
            check(kBoundary, m_.src(f) == o && m_.dst(f) == o, [&] { return note("id1(" + l(o) + ") is not an endo-arrow of " + l(o)); });
        }
        for (u32 f = 0; f < n1; ++f) {
            OneCellId g(f);
            auto a = m_.id2(g);
            check(kBoundary, m_.src(a) == g && m_.dst(a) == g, [&] { return note("id2(" + l(g) + ") is not an endo-2-cell of " + l(g)); });
        }
        for (u32 f = 0; f < n1; ++f)
            for (OneCellId g : out1_[m_.dst(OneCellId(f)).index()]) {
                auto c = m_.comp1(OneCellId(f), g);
                check(kBoundary, m_.src(c) == m_.src(OneCellId(f)) && m_.dst(c) == m_.dst(g),
                      [&] { return note("comp1(" + l(OneCellId(f)) + "," + l(g) + ") has the wrong endpoints"); });
            }
        for (u32 x = 0; x < n0; ++x)
            for (u32 y = 0; y < n0; ++y) (void)m_.tensor(ObjId(x), ObjId(y));
        for (u32 f = 0; f < n1; ++f)
            for (u32 g = 0; g < n1; ++g) {
                OneCellId a(f), b(g);
                auto t = m_.tensor(a, b);
                check(kBoundary,
                      m_.src(t) == m_.tensor(m_.src(a), m_.src(b)) && m_.dst(t) == m_.tensor(m_.dst(a), m_.dst(b)),
                      [&] { return note("tensor1(" + l(a) + "," + l(b) + ") has the wrong endpoints"); });
            }
        for (u32 i = 0; i < n2; ++i) {
            TwoCellId a(i);
            for (TwoCellId b : out2_[m_.dst(a).index()]) {
                auto c = m_.vcomp(a, b);
                check(kBoundary, m_.src(c) == m_.src(a) && m_.dst(c) == m_.dst(b),
                      [&] { return note("vcomp(" + l(a) + "," + l(b) + ") has the wrong boundary"); });
            }
            for (TwoCellId b : from_obj2_[m_.dst(m_.src(a)).index()]) {
                auto c = m_.hcomp(a, b);
                check(kBoundary,
                      m_.src(c) == m_.comp1(m_.src(a), m_.src(b)) && m_.dst(c) == m_.comp1(m_.dst(a), m_.dst(b)),
                      [&] { return note("hcomp(" + l(a) + "," + l(b) + ") has the wrong boundary"); });
            }
            for (u32 j = 0; j < n2; ++j) {
                TwoCellId b(j);
                auto c = m_.tensor(a, b);
                check(kBoundary,
                      m_.src(c) == m_.tensor(m_.src(a), m_.src(b)) && m_.dst(c) == m_.tensor(m_.dst(a), m_.dst(b)),
                      [&] { return note("tensor2(" + l(a) + "," + l(b) + ") has the wrong boundary"); });
            }
        }
    }

    void one_cells() {
        const auto n1 = m_.one_cell_count();
        for (u32 i = 0; i < n1; ++i) {
            OneCellId f(i);
            check(kComp1Unit, m_.comp1(m_.id1(m_.src(f)), f) == f,
                  [&] { return eq("id # " + l(f), I1(make_comp1(make_id1(m_.src(f)), L1(f))), I1(L1(f))); });
            check(kComp1Unit, m_.comp1(f, m_.id1(m_.dst(f))) == f,
                  [&] { return eq(l(f) + " # id", I1(make_comp1(L1(f), make_id1(m_.dst(f)))), I1(L1(f))); });
            for (OneCellId g : out1_[m_.dst(f).index()])
                for (OneCellId h : out1_[m_.dst(g).index()]) {
                    check(kComp1Assoc, m_.comp1(m_.comp1(f, g), h) == m_.comp1(f, m_.comp1(g, h)), [&] {
                        return eq("(" + l(f) + " # " + l(g) + ") # " + l(h),
                                  I1(make_comp1(make_comp1(L1(f), L1(g)), L1(h))),
                                  I1(make_comp1(L1(f), make_comp1(L1(g), L1(h)))));
                    });
                }
        }
    }

    void hom_categories() {
        const auto n2 = m_.two_cell_count();
        for (u32 i = 0; i < n2; ++i) {
            TwoCellId a(i);
            check(kHomUnit, m_.vcomp(m_.id2(m_.src(a)), a) == a,
                  [&] { return eq("id ; " + l(a), make_vcomp(I1(L1(m_.src(a))), L2(a)), L2(a)); });
            check(kHomUnit, m_.vcomp(a, m_.id2(m_.dst(a))) == a,
                  [&] { return eq(l(a) + " ; id", make_vcomp(L2(a), I1(L1(m_.dst(a)))), L2(a)); });
            for (TwoCellId b : out2_[m_.dst(a).index()])
                for (TwoCellId c : out2_[m_.dst(b).index()])
                    check(kHomAssoc, m_.vcomp(m_.vcomp(a, b), c) == m_.vcomp(a, m_.vcomp(b, c)), [&] {
                        return eq("(" + l(a) + " ; " + l(b) + ") ; " + l(c), make_vcomp(make_vcomp(L2(a), L2(b)), L2(c)),
                                  make_vcomp(L2(a), make_vcomp(L2(b), L2(c))));
                    });
        }
    }

    void horizontal() {
        const auto n2 = m_.two_cell_count();
        for (u32 i = 0; i < n2; ++i) {
            TwoCellId a(i);
            ObjId x = m_.src(m_.src(a)), y = m_.dst(m_.src(a));
            check(kHcompUnit, m_.hcomp(m_.id2(x), a) == a,
                  [&] { return eq("id_" + l(x) + " # " + l(a), make_hcomp(I1(make_id1(x)), L2(a)), L2(a)); });
            check(kHcompUnit, m_.hcomp(a, m_.id2(y)) == a,
                  [&] { return eq(l(a) + " # id_" + l(y), make_hcomp(L2(a), I1(make_id1(y))), L2(a)); });
            for (TwoCellId b : from_obj2_[y.index()])
                for (TwoCellId c : from_obj2_[m_.dst(m_.src(b)).index()])
                    check(kHcompAssoc, m_.hcomp(m_.hcomp(a, b), c) == m_.hcomp(a, m_.hcomp(b, c)), [&] {
                        return eq("(" + l(a) + " # " + l(b) + ") # " + l(c), make_hcomp(make_hcomp(L2(a), L2(b)), L2(c)),
                                  make_hcomp(L2(a), make_hcomp(L2(b), L2(c))));
                    });
        }
    }

    void interchange() {
        const auto n1 = m_.one_cell_count();
        for (u32 i = 0; i < n1; ++i) {
            OneCellId f(i);
            for (OneCellId g : out1_[m_.dst(f).index()])
                check(kInterchange, m_.hcomp(m_.id2(f), m_.id2(g)) == m_.id2(m_.comp1(f, g)), [&] {
                    return eq("id_" + l(f) + " # id_" + l(g), make_hcomp(I1(L1(f)), I1(L1(g))),
                              I1(make_comp1(L1(f), L1(g))));
                });
        }
        const auto n2 = m_.two_cell_count();
        for (u32 i = 0; i < n2; ++i) {
            TwoCellId a(i);
            for (TwoCellId b : out2_[m_.dst(a).index()]) {
                auto ab = m_.vcomp(a, b);
                for (TwoCellId c : from_obj2_[m_.dst(m_.src(a)).index()])
                    for (TwoCellId d : out2_[m_.dst(c).index()]) {
                        bool ok = m_.hcomp(ab, m_.vcomp(c, d)) == m_.vcomp(m_.hcomp(a, c), m_.hcomp(b, d));
                        check(kInterchange, ok, [&] {
                            return eq("interchange " + l(a) + "," + l(b) + "," + l(c) + "," + l(d),
                                      make_hcomp(make_vcomp(L2(a), L2(b)), make_vcomp(L2(c), L2(d))),
                                      make_vcomp(make_hcomp(L2(a), L2(c)), make_hcomp(L2(b), L2(d))));
                        });
                    }
            }
        }
    }

    // Respect for horizontal composition is checked on the generating cases
    // (a # b) x id and id x (a # b); together with the vertical cases and the
    // interchange law these imply the general one.
    void tensor_functoriality() {
        const auto n0 = m_.object_count(), n1 = m_.one_cell_count(), n2 = m_.two_cell_count();
        for (u32 x = 0; x < n0; ++x)
            for (u32 y = 0; y < n0; ++y) {
                ObjId a(x), b(y);
                check(kTensorFun, m_.tensor(m_.id1(a), m_.id1(b)) == m_.id1(m_.tensor(a, b)), [&] {
                    return eq("id_" + l(a) + " x id_" + l(b), I1(make_tensor1(make_id1(a), make_id1(b))),
                              I1(make_id1(m_.tensor(a, b))));
                });
            }
        for (u32 i = 0; i < n1; ++i)
            for (u32 j = 0; j < n1; ++j) {
                OneCellId f(i), h(j);
                check(kTensorFun, m_.tensor(m_.id2(f), m_.id2(h)) == m_.id2(m_.tensor(f, h)), [&] {
                    return eq("id_" + l(f) + " x id_" + l(h), make_tensor2(I1(L1(f)), I1(L1(h))),
                              I1(make_tensor1(L1(f), L1(h))));
                });
                for (OneCellId g : out1_[m_.dst(f).index()])
                    for (OneCellId k : out1_[m_.dst(h).index()])
                        check(kTensorFun,
                              m_.tensor(m_.comp1(f, g), m_.comp1(h, k)) ==
                                  m_.comp1(m_.tensor(f, h), m_.tensor(g, k)),
                              [&] {
                                  return eq("(" + l(f) + " # " + l(g) + ") x (" + l(h) + " # " + l(k) + ")",
                                            I1(make_tensor1(make_comp1(L1(f), L1(g)), make_comp1(L1(h), L1(k)))),
                                            I1(make_comp1(make_tensor1(L1(f), L1(h)), make_tensor1(L1(g), L1(k)))));
                              });
            }
        // vertical
        for (u32 i = 0; i < n2; ++i) {
            TwoCellId a(i);
            for (TwoCellId b : out2_[m_.dst(a).index()]) {
                auto ab = m_.vcomp(a, b);
                for (u32 j = 0; j < n2; ++j) {
                    TwoCellId c(j);
                    for (TwoCellId d : out2_[m_.dst(c).index()])
                        check(kTensorFun,
                              m_.tensor(ab, m_.vcomp(c, d)) == m_.vcomp(m_.tensor(a, c), m_.tensor(b, d)), [&] {
                                  return eq("(" + l(a) + " ; " + l(b) + ") x (" + l(c) + " ; " + l(d) + ")",
                                            make_tensor2(make_vcomp(L2(a), L2(b)), make_vcomp(L2(c), L2(d))),
                                            make_vcomp(make_tensor2(L2(a), L2(c)), make_tensor2(L2(b), L2(d))));
                              });
                }
            }
        }
        // horizontal, generating cases
        for (u32 i = 0; i < n2; ++i) {
            TwoCellId a(i);
            for (TwoCellId b : from_obj2_[m_.dst(m_.src(a)).index()]) {
                auto ab = m_.hcomp(a, b);
                for (u32 j = 0; j < n1; ++j) {
                    OneCellId h(j);
                    for (OneCellId k : out1_[m_.dst(h).index()]) {
                        auto hk = m_.id2(m_.comp1(h, k));
                        check(kTensorFun,
                              m_.tensor(ab, hk) == m_.hcomp(m_.tensor(a, m_.id2(h)), m_.tensor(b, m_.id2(k))), [&] {
                                  return eq("(" + l(a) + " # " + l(b) + ") x id",
                                            make_tensor2(make_hcomp(L2(a), L2(b)), I1(make_comp1(L1(h), L1(k)))),
                                            make_hcomp(make_tensor2(L2(a), I1(L1(h))), make_tensor2(L2(b), I1(L1(k)))));
                              });
                        check(kTensorFun,
                              m_.tensor(hk, ab) == m_.hcomp(m_.tensor(m_.id2(h), a), m_.tensor(m_.id2(k), b)), [&] {
                                  return eq("id x (" + l(a) + " # " + l(b) + ")",
                                            make_tensor2(I1(make_comp1(L1(h), L1(k))), make_hcomp(L2(a), L2(b))),
                                            make_hcomp(make_tensor2(I1(L1(h)), L2(a)), make_tensor2(I1(L1(k)), L2(b))));
                              });
                    }
                }
            }
        }
    }

    void tensor_associativity() {
        const auto n0 = m_.object_count(), n1 = m_.one_cell_count(), n2 = m_.two_cell_count();
        for (u32 x = 0; x < n0; ++x)
            for (u32 y = 0; y < n0; ++y)
                for (u32 z = 0; z < n0; ++z) {
                    ObjId a(x), b(y), c(z);
                    check(kTensorAssoc, m_.tensor(m_.tensor(a, b), c) == m_.tensor(a, m_.tensor(b, c)), [&] {
                        return eq("(" + l(a) + " x " + l(b) + ") x " + l(c),
                                  I1(make_tensor1(make_tensor1(make_id1(a), make_id1(b)), make_id1(c))),
                                  I1(make_tensor1(make_id1(a), make_tensor1(make_id1(b), make_id1(c)))));
                    });
                }
        for (u32 i = 0; i < n1; ++i)
            for (u32 j = 0; j < n1; ++j) {
                OneCellId f(i), g(j);
                auto fg = m_.tensor(f, g);
                for (u32 k = 0; k < n1; ++k) {
                    OneCellId h(k);
                    check(kTensorAssoc, m_.tensor(fg, h) == m_.tensor(f, m_.tensor(g, h)), [&] {
                        return eq("(" + l(f) + " x " + l(g) + ") x " + l(h),
                                  I1(make_tensor1(make_tensor1(L1(f), L1(g)), L1(h))),
                                  I1(make_tensor1(L1(f), make_tensor1(L1(g), L1(h)))));
                    });
                }
            }
        const auto& t2 = m_.tables().tensor2;
        for (u32 i = 0; i < n2; ++i)
            for (u32 j = 0; j < n2; ++j) {
                const std::size_t ab = t2[std::size_t(i) * n2 + j].index();
                for (u32 k = 0; k < n2; ++k) {
                    const bool ok = t2[ab * n2 + k] == t2[std::size_t(i) * n2 + t2[std::size_t(j) * n2 + k].index()];
                    check(kTensorAssoc, ok, [&] {
                        TwoCellId a(i), b(j), c(k);
                        return eq("(" + l(a) + " x " + l(b) + ") x " + l(c), make_tensor2(make_tensor2(L2(a), L2(b)), L2(c)),
                                  make_tensor2(L2(a), make_tensor2(L2(b), L2(c))));
                    });
                }
            }
    }
};

}  // namespace

ValidationReport validate_model(const TwoCategoryModel& m, std::size_t cap) { return Validator(m, cap).run(); }

ValidationReport validate_tables(const ModelTables& t, std::size_t cap) {
    auto issues = structural_issues(t);
    if (!issues.empty()) {
        ValidationReport r;
        r.structural = std::move(issues);
        for (const char* f : kAxiomFamilies) r.families.push_back({f, 0, 0});
        return r;
    }
    return validate_model(TwoCategoryModel(t), cap);
}

}  // namespace weakunits
