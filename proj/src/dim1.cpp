#include "weakunits/dim1.hpp"

#include "weakunits/errors.hpp"

namespace weakunits {

namespace {

ObjId obj(std::size_t i) { return ObjId(static_cast<std::uint32_t>(i)); }

// The unique f in hom(a, b) with by (x) f == target (Left) or f (x) by == target.
OneCellId divide_1(const TwoCategoryModel& m, ObjId by, Side side, OneCellId target, ObjId a, ObjId b,
                   const std::string& step) {
    std::size_t hits = 0;
    std::string names;
    OneCellId found;
    for (OneCellId f : m.hom(a, b)) {
        auto img = side == Side::Left ? m.tensor(m.id1(by), f) : m.tensor(f, m.id1(by));
        if (img == target) {
            found = f;
            names += (hits++ ? "," : " ") + m.label(f);
        }
    }
    if (hits == 0) throw UniquenessError(UniquenessError::Kind::NoPreimage, step);
    if (hits > 1) throw UniquenessError(UniquenessError::Kind::MultiplePreimages, step + ":" + names);
    return found;
}

}  // namespace

void require_locally_discrete(const TwoCategoryModel& m) {
    if (!m.is_locally_discrete()) throw CertificationError(m.name() + " has non-identity 2-cells");
}

std::optional<OneCellId> inverse_1(const TwoCategoryModel& m, OneCellId f) {
    for (OneCellId g : m.hom(m.dst(f), m.src(f)))
        if (m.comp1(f, g) == m.id1(m.src(f)) && m.comp1(g, f) == m.id1(m.dst(f))) return g;
    return std::nullopt;
}

bool is_cancellable_1(const TwoCategoryModel& m, ObjId x) {
    const auto n = m.object_count();
    for (Side side : {Side::Left, Side::Right})
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                auto xa = side == Side::Left ? m.tensor(x, obj(a)) : m.tensor(obj(a), x);
                auto xb = side == Side::Left ? m.tensor(x, obj(b)) : m.tensor(obj(b), x);
                const auto& src = m.hom(obj(a), obj(b));
                const auto& dst = m.hom(xa, xb);
                if (src.size() != dst.size()) return false;
                std::vector<bool> hit(m.one_cell_count(), false);
                for (OneCellId f : src) {
                    auto img = side == Side::Left ? m.tensor(m.id1(x), f) : m.tensor(f, m.id1(x));
                    if (hit[img.index()]) return false;
                    hit[img.index()] = true;
                }
            }
    return true;
}

std::vector<std::pair<ObjId, OneCellId>> find_units_1(const TwoCategoryModel& m) {
    require_locally_discrete(m);
    std::vector<std::pair<ObjId, OneCellId>> out;
    for (std::size_t i = 0; i < m.object_count(); ++i) {
        ObjId x = obj(i);
        if (!is_cancellable_1(m, x)) continue;
        for (OneCellId a : m.hom(m.tensor(x, x), x))
            if (inverse_1(m, a)) out.emplace_back(x, a);
    }
    return out;
}

Unit1 construct_lr_1(const TwoCategoryModel& m, ObjId i, OneCellId alpha) {
    require_locally_discrete(m);
    Unit1 u{i, alpha, {}, {}};
    for (std::size_t k = 0; k < m.object_count(); ++k) {
        ObjId x = obj(k);
        u.lambda.push_back(divide_1(m, i, Side::Left, m.tensor(alpha, m.id1(x)), m.tensor(i, x), x,
                                    "lambda at " + m.label(x)));
        u.rho.push_back(divide_1(m, i, Side::Right, m.tensor(m.id1(x), alpha), m.tensor(x, i), x,
                                 "rho at " + m.label(x)));
    }
    return u;
}

Dim1Report verify_kelly_1(Recorder& rec, const Unit1& u) {
    const auto& m = rec.model();
    const auto& P = rec.p();
    Dim1Report r;
    auto same = [&](const std::string& name, Expr1 a, Expr1 b) {
        bool ok = rec.check(name, a, b);
        if (!ok) r.failures.push_back(name);
        return ok;
    };
    const auto n = m.object_count();
    const auto i = u.unit.index();
    auto I = P.obj(u.unit);
    r.unit_axiom = same("lambda_I = rho_I", P.arr(u.lambda[i]), P.arr(u.rho[i]));
    r.lambda_tensor = r.rho_tensor = r.kelly = r.naturality = r.isomorphisms = true;
    for (std::size_t a = 0; a < n; ++a) {
        auto X = P.obj(obj(a));
        const auto& xn = m.label(obj(a));
        bool iso = inverse_1(m, u.lambda[a]) && inverse_1(m, u.rho[a]);
        if (!iso) r.failures.push_back("constraints at " + xn + " are not invertible");
        r.isomorphisms &= iso;
        r.naturality &= same("lambda_IX = I lambda_X at " + xn, P.arr(u.lambda[m.tensor(u.unit, obj(a)).index()]),
                             P.tensor(I, P.arr(u.lambda[a])));
        r.naturality &= same("rho_XI = rho_X I at " + xn, P.arr(u.rho[m.tensor(obj(a), u.unit).index()]),
                             P.tensor(P.arr(u.rho[a]), I));
        for (std::size_t b = 0; b < n; ++b) {
            auto Y = P.obj(obj(b));
            const auto pair = " at (" + xn + "," + m.label(obj(b)) + ")";
            const auto xy = m.tensor(obj(a), obj(b)).index();
            r.lambda_tensor &= same("lambda_XY = lambda_X Y" + pair, P.arr(u.lambda[xy]),
                                    P.tensor(P.arr(u.lambda[a]), Y));
            r.rho_tensor &= same("rho_XY = X rho_Y" + pair, P.arr(u.rho[xy]), P.tensor(X, P.arr(u.rho[b])));
            r.kelly &= same("Kelly axiom" + pair, P.tensor(X, P.arr(u.lambda[b])), P.tensor(P.arr(u.rho[a]), Y));
        }
    }
    return r;
}

bool verify_assoc_1(Recorder& rec, const Unit1& u) {
    const auto& P = rec.p();
    auto I = P.obj(u.unit);
    auto a = P.arr(u.alpha);
    return rec.check("alpha is associative", P.tensor(I, a), P.tensor(a, I));
}

OneCellId canonical_unit_iso_1(const TwoCategoryModel& m, const Unit1& source, const Unit1& target) {
    auto r = inverse_1(m, target.rho[source.unit.index()]);
    if (!r) throw CertificationError("rho_I is not invertible");
    return m.comp1(*r, source.lambda[target.unit.index()]);
}

}  // namespace weakunits
