#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "weakunits/model.hpp"

namespace weakunits {

struct Expr1Node;
struct Expr2Node;
using Expr1 = std::shared_ptr<const Expr1Node>;
using Expr2 = std::shared_ptr<const Expr2Node>;

struct Expr1Node {
    enum class Kind { Id, Lit, Comp, Tensor };
    Kind kind;
    ObjId obj;      // Id
    OneCellId lit;  // Lit
    Expr1 a, b;     // Comp, Tensor
    OneCellId cached;  // set by Paster, never trusted by evaluate()
};

struct Expr2Node {
    enum class Kind { Id, Lit, VComp, HComp, Tensor };
    Kind kind;
    Expr1 id;       // Id
    TwoCellId lit;  // Lit
    Expr2 a, b;
    TwoCellId cached;
};

Expr1 make_id1(ObjId x);
Expr1 make_lit1(OneCellId f);
Expr1 make_comp1(Expr1 a, Expr1 b);
Expr1 make_tensor1(Expr1 a, Expr1 b);
Expr2 make_id2(Expr1 f);
Expr2 make_lit2(TwoCellId c);
Expr2 make_vcomp(Expr2 a, Expr2 b);
Expr2 make_hcomp(Expr2 a, Expr2 b);
Expr2 make_tensor2(Expr2 a, Expr2 b);

// Fold against the tables; throws BoundaryError naming the first ill-typed node.
OneCellId evaluate(const TwoCategoryModel& m, const Expr1& e);
TwoCellId evaluate(const TwoCategoryModel& m, const Expr2& e);

std::size_t node_count(const Expr2& e);
std::string render(const TwoCategoryModel& m, const Expr2& e);

struct Equation {
    std::string name;
    Expr2 lhs, rhs;
};

struct EquationResult {
    TwoCellId lhs, rhs;
    bool holds = false;
};

// Throws BoundaryError when the two sides are not parallel.
EquationResult check_equation(const TwoCategoryModel& m, const Equation& eq);

// Builds expressions against one model, checking boundaries as nodes are made.
class Paster {
public:
    explicit Paster(const TwoCategoryModel& m) : m_(&m) {}

    const TwoCategoryModel& model() const { return *m_; }

    Expr1 obj(ObjId x) const;
    Expr1 arr(OneCellId f) const;
    Expr1 comp(Expr1 a, Expr1 b) const;
    Expr1 comp(std::initializer_list<Expr1> parts) const;
    Expr1 tensor(Expr1 a, Expr1 b) const;
    Expr1 tensor(std::initializer_list<Expr1> parts) const;

    Expr2 id(Expr1 f) const;
    Expr2 id(OneCellId f) const { return id(arr(f)); }
    Expr2 id(ObjId x) const { return id(obj(x)); }
    Expr2 cell(TwoCellId c) const;
    Expr2 v(Expr2 a, Expr2 b) const;
    Expr2 v(std::initializer_list<Expr2> parts) const;
    Expr2 h(Expr2 a, Expr2 b) const;
    Expr2 h(std::initializer_list<Expr2> parts) const;
    Expr2 t(Expr2 a, Expr2 b) const;
    Expr2 t(std::initializer_list<Expr2> parts) const;

    // Stored inverse as a literal; throws CertificationError if there is none.
    Expr2 inv(TwoCellId c) const;

    OneCellId value(const Expr1& e) const;
    TwoCellId value(const Expr2& e) const;
    OneCellId src(const Expr2& e) const { return m_->src(value(e)); }
    OneCellId dst(const Expr2& e) const { return m_->dst(value(e)); }

private:
    const TwoCategoryModel* m_;
};

}  // namespace weakunits
