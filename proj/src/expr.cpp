#include "weakunits/expr.hpp"

#include <sstream>

namespace weakunits {

namespace {

Expr1 node1(Expr1Node n) { return std::make_shared<const Expr1Node>(std::move(n)); }
Expr2 node2(Expr2Node n) { return std::make_shared<const Expr2Node>(std::move(n)); }

std::string child(const std::string& path, const char* op, int i) {
    return path + "/" + op + "[" + std::to_string(i) + "]";
}

OneCellId eval1(const TwoCategoryModel& m, const Expr1& e, const std::string& path) {
    if (!e) throw BoundaryError(path, "null expression");
    switch (e->kind) {
        case Expr1Node::Kind::Id:
            if (!e->obj.valid() || e->obj.index() >= m.object_count())
                throw BoundaryError(path, "unknown object");
            return m.id1(e->obj);
        case Expr1Node::Kind::Lit:
            if (!e->lit.valid() || e->lit.index() >= m.one_cell_count())
                throw BoundaryError(path, "unknown 1-cell");
            return e->lit;
        case Expr1Node::Kind::Comp: {
            auto f = eval1(m, e->a, child(path, "comp", 0));
            auto g = eval1(m, e->b, child(path, "comp", 1));
            if (m.dst(f) != m.src(g))
                throw BoundaryError(path, "comp: target " + m.label(m.dst(f)) + " of " + m.label(f) +
                                              " differs from source " + m.label(m.src(g)) + " of " + m.label(g));
            return m.comp1(f, g);
        }
        case Expr1Node::Kind::Tensor:
            return m.tensor(eval1(m, e->a, child(path, "tensor", 0)), eval1(m, e->b, child(path, "tensor", 1)));
    }
    throw BoundaryError(path, "bad node kind");
}

TwoCellId eval2(const TwoCategoryModel& m, const Expr2& e, const std::string& path) {
    if (!e) throw BoundaryError(path, "null expression");
    switch (e->kind) {
        case Expr2Node::Kind::Id:
            return m.id2(eval1(m, e->id, child(path, "id", 0)));
        case Expr2Node::Kind::Lit:
            if (!e->lit.valid() || e->lit.index() >= m.two_cell_count())
                throw BoundaryError(path, "unknown 2-cell");
            return e->lit;
        case Expr2Node::Kind::VComp: {
            auto a = eval2(m, e->a, child(path, "v", 0));
            auto b = eval2(m, e->b, child(path, "v", 1));
            if (m.dst(a) != m.src(b))
                throw BoundaryError(path, "v: target " + m.label(m.dst(a)) + " of " + m.label(a) +
                                              " differs from source " + m.label(m.src(b)) + " of " + m.label(b));
            return m.vcomp(a, b);
        }
        case Expr2Node::Kind::HComp: {
            auto a = eval2(m, e->a, child(path, "h", 0));
            auto b = eval2(m, e->b, child(path, "h", 1));
            if (m.dst(m.src(a)) != m.src(m.src(b)))
                throw BoundaryError(path, "h: " + m.label(a) + " ends at " + m.label(m.dst(m.src(a))) + " but " +
                                              m.label(b) + " starts at " + m.label(m.src(m.src(b))));
            return m.hcomp(a, b);
        }
        case Expr2Node::Kind::Tensor:
            return m.tensor(eval2(m, e->a, child(path, "t", 0)), eval2(m, e->b, child(path, "t", 1)));
    }
    throw BoundaryError(path, "bad node kind");
}

}  // namespace

Expr1 make_id1(ObjId x) { return node1({Expr1Node::Kind::Id, x, {}, nullptr, nullptr, {}}); }
Expr1 make_lit1(OneCellId f) { return node1({Expr1Node::Kind::Lit, {}, f, nullptr, nullptr, {}}); }
Expr1 make_comp1(Expr1 a, Expr1 b) { return node1({Expr1Node::Kind::Comp, {}, {}, std::move(a), std::move(b), {}}); }
Expr1 make_tensor1(Expr1 a, Expr1 b) {
    return node1({Expr1Node::Kind::Tensor, {}, {}, std::move(a), std::move(b), {}});
}
Expr2 make_id2(Expr1 f) { return node2({Expr2Node::Kind::Id, std::move(f), {}, nullptr, nullptr, {}}); }
Expr2 make_lit2(TwoCellId c) { return node2({Expr2Node::Kind::Lit, nullptr, c, nullptr, nullptr, {}}); }
Expr2 make_vcomp(Expr2 a, Expr2 b) {
    return node2({Expr2Node::Kind::VComp, nullptr, {}, std::move(a), std::move(b), {}});
}
Expr2 make_hcomp(Expr2 a, Expr2 b) {
    return node2({Expr2Node::Kind::HComp, nullptr, {}, std::move(a), std::move(b), {}});
}
Expr2 make_tensor2(Expr2 a, Expr2 b) {
    return node2({Expr2Node::Kind::Tensor, nullptr, {}, std::move(a), std::move(b), {}});
}

OneCellId evaluate(const TwoCategoryModel& m, const Expr1& e) { return eval1(m, e, "root"); }
TwoCellId evaluate(const TwoCategoryModel& m, const Expr2& e) { return eval2(m, e, "root"); }

std::size_t node_count(const Expr2& e) {
    if (!e) return 0;
    if (e->kind == Expr2Node::Kind::Id || e->kind == Expr2Node::Kind::Lit) return 1;
    return 1 + node_count(e->a) + node_count(e->b);
}

namespace {

void render1(std::ostream& os, const TwoCategoryModel& m, const Expr1& e) {
    switch (e->kind) {
        case Expr1Node::Kind::Id: os << m.label(e->obj); break;
        case Expr1Node::Kind::Lit: os << m.label(e->lit); break;
        case Expr1Node::Kind::Comp:
            os << "(";
            render1(os, m, e->a);
            os << " # ";
            render1(os, m, e->b);
            os << ")";
            break;
        case Expr1Node::Kind::Tensor:
            os << "(";
            render1(os, m, e->a);
            os << " x ";
            render1(os, m, e->b);
            os << ")";
            break;
    }
}

void render2(std::ostream& os, const TwoCategoryModel& m, const Expr2& e) {
    const char* op = "";
    switch (e->kind) {
        case Expr2Node::Kind::Id:
            os << "id[";
            render1(os, m, e->id);
            os << "]";
            return;
        case Expr2Node::Kind::Lit: os << m.label(e->lit); return;
        case Expr2Node::Kind::VComp: op = " ; "; break;
        case Expr2Node::Kind::HComp: op = " # "; break;
        case Expr2Node::Kind::Tensor: op = " x "; break;
    }
    os << "(";
    render2(os, m, e->a);
    os << op;
    render2(os, m, e->b);
    os << ")";
}

}  // namespace

std::string render(const TwoCategoryModel& m, const Expr2& e) {
    std::ostringstream os;
    render2(os, m, e);
    return os.str();
}

EquationResult check_equation(const TwoCategoryModel& m, const Equation& eq) {
    EquationResult r;
    r.lhs = evaluate(m, eq.lhs);
    r.rhs = evaluate(m, eq.rhs);
    if (m.src(r.lhs) != m.src(r.rhs) || m.dst(r.lhs) != m.dst(r.rhs))
        throw BoundaryError(eq.name, "sides are not parallel: " + m.label(r.lhs) + " vs " + m.label(r.rhs));
    r.holds = r.lhs == r.rhs;
    return r;
}

// ---- Paster -----------------------------------------------------------------

Expr1 Paster::obj(ObjId x) const {
    if (!x.valid() || x.index() >= m_->object_count()) throw BoundaryError("obj", "unknown object");
    return node1({Expr1Node::Kind::Id, x, {}, nullptr, nullptr, m_->id1(x)});
}

Expr1 Paster::arr(OneCellId f) const {
    if (!f.valid() || f.index() >= m_->one_cell_count()) throw BoundaryError("arr", "unknown 1-cell");
    return node1({Expr1Node::Kind::Lit, {}, f, nullptr, nullptr, f});
}

OneCellId Paster::value(const Expr1& e) const { return e->cached.valid() ? e->cached : evaluate(*m_, e); }
TwoCellId Paster::value(const Expr2& e) const { return e->cached.valid() ? e->cached : evaluate(*m_, e); }

Expr1 Paster::comp(Expr1 a, Expr1 b) const {
    auto f = value(a), g = value(b);
    if (m_->dst(f) != m_->src(g))
        throw BoundaryError("comp", m_->label(f) + " then " + m_->label(g) + " is not composable");
    return node1({Expr1Node::Kind::Comp, {}, {}, std::move(a), std::move(b), m_->comp1(f, g)});
}

Expr1 Paster::comp(std::initializer_list<Expr1> parts) const {
    auto it = parts.begin();
    Expr1 acc = *it++;
    for (; it != parts.end(); ++it) acc = comp(acc, *it);
    return acc;
}

Expr1 Paster::tensor(Expr1 a, Expr1 b) const {
    auto f = value(a), g = value(b);
    return node1({Expr1Node::Kind::Tensor, {}, {}, std::move(a), std::move(b), m_->tensor(f, g)});
}

Expr1 Paster::tensor(std::initializer_list<Expr1> parts) const {
    auto it = parts.begin();
    Expr1 acc = *it++;
    for (; it != parts.end(); ++it) acc = tensor(acc, *it);
    return acc;
}

Expr2 Paster::id(Expr1 f) const {
    auto v = m_->id2(value(f));
    return node2({Expr2Node::Kind::Id, std::move(f), {}, nullptr, nullptr, v});
}

Expr2 Paster::cell(TwoCellId c) const {
    if (!c.valid() || c.index() >= m_->two_cell_count()) throw BoundaryError("cell", "unknown 2-cell");
    return node2({Expr2Node::Kind::Lit, nullptr, c, nullptr, nullptr, c});
}

Expr2 Paster::inv(TwoCellId c) const {
    auto i = m_->inverse(c);
    if (!i) throw CertificationError("2-cell " + m_->label(c) + " is not invertible");
    return cell(*i);
}

Expr2 Paster::v(Expr2 a, Expr2 b) const {
    auto x = value(a), y = value(b);
    if (m_->dst(x) != m_->src(y))
        throw BoundaryError("v", "target " + m_->label(m_->dst(x)) + " of " + m_->label(x) + " differs from source " +
                                     m_->label(m_->src(y)) + " of " + m_->label(y));
    return node2({Expr2Node::Kind::VComp, nullptr, {}, std::move(a), std::move(b), m_->vcomp(x, y)});
}

Expr2 Paster::v(std::initializer_list<Expr2> parts) const {
    auto it = parts.begin();
    Expr2 acc = *it++;
    for (; it != parts.end(); ++it) acc = v(acc, *it);
    return acc;
}

Expr2 Paster::h(Expr2 a, Expr2 b) const {
    auto x = value(a), y = value(b);
    if (m_->dst(m_->src(x)) != m_->src(m_->src(y)))
        throw BoundaryError("h", m_->label(x) + " and " + m_->label(y) + " are not horizontally composable");
    return node2({Expr2Node::Kind::HComp, nullptr, {}, std::move(a), std::move(b), m_->hcomp(x, y)});
}

Expr2 Paster::h(std::initializer_list<Expr2> parts) const {
    auto it = parts.begin();
    Expr2 acc = *it++;
    for (; it != parts.end(); ++it) acc = h(acc, *it);
    return acc;
}

Expr2 Paster::t(Expr2 a, Expr2 b) const {
    auto x = value(a), y = value(b);
    return node2({Expr2Node::Kind::Tensor, nullptr, {}, std::move(a), std::move(b), m_->tensor(x, y)});
}

Expr2 Paster::t(std::initializer_list<Expr2> parts) const {
    auto it = parts.begin();
    Expr2 acc = *it++;
    for (; it != parts.end(); ++it) acc = t(acc, *it);
    return acc;
}

}  // namespace weakunits
