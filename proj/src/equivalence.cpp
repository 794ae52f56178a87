#include "weakunits/equivalence.hpp"

#include <vector>

namespace weakunits {

bool triangle_identities_hold(const TwoCategoryModel& m, const AdjointEquivalence& w) {
    const ObjId x = m.src(w.f), y = m.dst(w.f);
    if (m.src(w.g) != y || m.dst(w.g) != x) return false;
    if (m.src(w.eta) != m.id1(x) || m.dst(w.eta) != m.comp1(w.f, w.g)) return false;
    if (m.src(w.eps) != m.comp1(w.g, w.f) || m.dst(w.eps) != m.id1(y)) return false;
    const auto idf = m.id2(w.f), idg = m.id2(w.g);
    bool first = m.vcomp(m.hcomp(w.eta, idf), m.hcomp(idf, w.eps)) == idf;
    bool second = m.vcomp(m.hcomp(idg, w.eta), m.hcomp(w.eps, idg)) == idg;
    return first && second;
}

std::optional<AdjointEquivalence> find_pseudo_inverse(const TwoCategoryModel& m, OneCellId f) {
    const ObjId x = m.src(f), y = m.dst(f);
    for (OneCellId g : m.hom(y, x)) {
        const auto& etas = m.cells(m.id1(x), m.comp1(f, g));
        const auto& epss = m.cells(m.comp1(g, f), m.id1(y));
        for (TwoCellId eta : etas) {
            if (!m.invertible(eta)) continue;
            for (TwoCellId eps : epss) {
                if (!m.invertible(eps)) continue;
                AdjointEquivalence w{f, g, eta, eps};
                if (triangle_identities_hold(m, w)) return w;
            }
        }
    }
    return std::nullopt;
}

bool is_equi_arrow(const TwoCategoryModel& m, OneCellId f) { return find_pseudo_inverse(m, f).has_value(); }

namespace {

TwoCellId act(const TwoCategoryModel& m, TwoCellId xid, Side side, TwoCellId a) {
    return side == Side::Left ? m.tensor(xid, a) : m.tensor(a, xid);
}

OneCellId act(const TwoCategoryModel& m, OneCellId xid, Side side, OneCellId f) {
    return side == Side::Left ? m.tensor(xid, f) : m.tensor(f, xid);
}

}  // namespace

bool is_hom_equivalence(const TwoCategoryModel& m, OneCellId one, Side side, ObjId a, ObjId b) {
    const TwoCellId two = m.id2(one);
    const ObjId xa = side == Side::Left ? m.tensor(m.src(one), a) : m.tensor(a, m.src(one));
    const ObjId xb = side == Side::Left ? m.tensor(m.dst(one), b) : m.tensor(b, m.dst(one));
    const auto& src_hom = m.hom(a, b);

    // fully faithful
    std::vector<bool> hit(m.two_cell_count(), false);
    for (OneCellId f : src_hom)
        for (OneCellId g : src_hom) {
            const auto& from = m.cells(f, g);
            const auto& to = m.cells(act(m, one, side, f), act(m, one, side, g));
            if (from.size() != to.size()) return false;
            for (TwoCellId c : from) {
                auto img = act(m, two, side, c);
                if (hit[img.index()]) return false;
                hit[img.index()] = true;
            }
            for (TwoCellId c : from) hit[act(m, two, side, c).index()] = false;
        }
    // essentially surjective
    for (OneCellId k : m.hom(xa, xb)) {
        bool reached = false;
        for (OneCellId f : src_hom) {
            for (TwoCellId c : m.cells(k, act(m, one, side, f)))
                if (m.invertible(c)) {
                    reached = true;
                    break;
                }
            if (reached) break;
        }
        if (!reached) return false;
    }
    return true;
}

bool is_hom_equivalence(const TwoCategoryModel& m, ObjId x, Side side, ObjId a, ObjId b) {
    return is_hom_equivalence(m, m.id1(x), side, a, b);
}

bool is_cancellable(const TwoCategoryModel& m, ObjId x, Side side) {
    for (std::uint32_t a = 0; a < m.object_count(); ++a)
        for (std::uint32_t b = 0; b < m.object_count(); ++b)
            if (!is_hom_equivalence(m, x, side, ObjId(a), ObjId(b))) return false;
    return true;
}

bool is_cancellable(const TwoCategoryModel& m, ObjId x) {
    return is_cancellable(m, x, Side::Left) && is_cancellable(m, x, Side::Right);
}

namespace {

template <class Pred>
TwoCellId unique_solution(const TwoCategoryModel& m, TwoCellId c, OneCellId src, OneCellId dst,
                          const std::string& step, Pred pred) {
    std::vector<TwoCellId> hits;
    for (TwoCellId d : m.cells(src, dst))
        if (pred(d)) hits.push_back(d);
    if (hits.empty()) throw UniquenessError(UniquenessError::Kind::NoPreimage, step, {c});
    if (hits.size() > 1) throw UniquenessError(UniquenessError::Kind::MultiplePreimages, step, hits);
    return hits.front();
}

}  // namespace

TwoCellId divide_tensor(const TwoCategoryModel& m, OneCellId by, Side side, TwoCellId c, OneCellId src,
                        OneCellId dst, const std::string& step) {
    const TwoCellId e = m.id2(by);
    return unique_solution(m, c, src, dst, step, [&](TwoCellId d) { return act(m, e, side, d) == c; });
}

TwoCellId divide_tensor(const TwoCategoryModel& m, ObjId by, Side side, TwoCellId c, OneCellId src, OneCellId dst,
                        const std::string& step) {
    return divide_tensor(m, m.id1(by), side, c, src, dst, step);
}

TwoCellId divide_whisker(const TwoCategoryModel& m, OneCellId e, Side side, TwoCellId c, OneCellId src,
                         OneCellId dst, const std::string& step) {
    const TwoCellId ide = m.id2(e);
    return unique_solution(m, c, src, dst, step, [&](TwoCellId d) {
        if (side == Side::Left) return m.dst(e) == m.src(m.src(d)) && m.hcomp(ide, d) == c;
        return m.dst(m.src(d)) == m.src(e) && m.hcomp(d, ide) == c;
    });
}

Expr2 mate(const Paster& p, const AdjointEquivalence& w, TwoCellId F, OneCellId a_x, OneCellId a_y) {
    const auto& m = p.model();
    auto g = p.arr(w.g);
    auto gg = p.tensor(g, g);
    auto eps2 = m.tensor(w.eps, w.eps);
    auto step1 = p.h(p.inv(eps2), p.id(p.comp(p.arr(a_y), g)));
    auto step2 = p.h({p.id(gg), p.inv(F), p.id(g)});
    auto step3 = p.h(p.id(p.comp(gg, p.arr(a_x))), p.inv(w.eta));
    return p.v({step1, step2, step3});
}

std::optional<TwoCellId> parallel_twin(const TwoCategoryModel& m, TwoCellId c) {
    for (TwoCellId d : m.cells(m.src(c), m.dst(c)))
        if (d != c) return d;
    return std::nullopt;
}

}  // namespace weakunits
