#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weakunits/errors.hpp"
#include "weakunits/ids.hpp"

namespace weakunits {

struct OneCellData {
    ObjId src, dst;
};

struct TwoCellData {
    OneCellId src, dst;
};

// Raw operation tables. Binary tables are dense row-major arrays; an invalid
// id marks an absent entry.
struct ModelTables {
    std::string name;
    std::size_t objects = 0;
    std::vector<OneCellData> one_cells;
    std::vector<TwoCellData> two_cells;

    std::vector<OneCellId> id1;  // per object
    std::vector<TwoCellId> id2;  // per 1-cell
    std::vector<OneCellId> comp1;
    std::vector<TwoCellId> vcomp;
    std::vector<TwoCellId> hcomp;
    std::vector<ObjId> tensor_obj;
    std::vector<OneCellId> tensor1;
    std::vector<TwoCellId> tensor2;

    std::vector<std::string> object_names, one_cell_names, two_cell_names;

    std::size_t n1() const { return one_cells.size(); }
    std::size_t n2() const { return two_cells.size(); }
};

// Structural problems only: sizes, dangling ids, missing or spurious entries.
std::vector<std::string> structural_issues(const ModelTables& t);

class TwoCategoryModel {
public:
    explicit TwoCategoryModel(ModelTables tables);

    const ModelTables& tables() const { return t_; }
    const std::string& name() const { return t_.name; }

    std::size_t object_count() const { return t_.objects; }
    std::size_t one_cell_count() const { return t_.n1(); }
    std::size_t two_cell_count() const { return t_.n2(); }

    ObjId src(OneCellId f) const { return t_.one_cells[f.index()].src; }
    ObjId dst(OneCellId f) const { return t_.one_cells[f.index()].dst; }
    OneCellId src(TwoCellId a) const { return t_.two_cells[a.index()].src; }
    OneCellId dst(TwoCellId a) const { return t_.two_cells[a.index()].dst; }

    OneCellId id1(ObjId x) const { return t_.id1[x.index()]; }
    TwoCellId id2(OneCellId f) const { return t_.id2[f.index()]; }
    TwoCellId id2(ObjId x) const { return id2(id1(x)); }

    // Diagrammatic order: comp1(f, g) is "f then g". Invalid id when not composable.
    OneCellId comp1(OneCellId f, OneCellId g) const { return t_.comp1[f.index() * t_.n1() + g.index()]; }
    TwoCellId vcomp(TwoCellId a, TwoCellId b) const { return t_.vcomp[a.index() * t_.n2() + b.index()]; }
    TwoCellId hcomp(TwoCellId a, TwoCellId b) const { return t_.hcomp[a.index() * t_.n2() + b.index()]; }

    ObjId tensor(ObjId x, ObjId y) const { return t_.tensor_obj[x.index() * t_.objects + y.index()]; }
    OneCellId tensor(OneCellId f, OneCellId g) const { return t_.tensor1[f.index() * t_.n1() + g.index()]; }
    TwoCellId tensor(TwoCellId a, TwoCellId b) const { return t_.tensor2[a.index() * t_.n2() + b.index()]; }

    const std::vector<OneCellId>& hom(ObjId x, ObjId y) const { return homs_[x.index() * t_.objects + y.index()]; }
    const std::vector<TwoCellId>& cells(OneCellId f, OneCellId g) const {
        return cells_[f.index() * t_.n1() + g.index()];
    }

    std::optional<TwoCellId> inverse(TwoCellId a) const {
        auto v = inverse_[a.index()];
        return v.valid() ? std::optional<TwoCellId>(v) : std::nullopt;
    }
    bool invertible(TwoCellId a) const { return inverse_[a.index()].valid(); }
    bool is_identity(TwoCellId a) const { return src(a) == dst(a) && id2(src(a)) == a; }
    // Every 2-cell is an identity.
    bool is_locally_discrete() const;

    std::string label(ObjId x) const;
    std::string label(OneCellId f) const;
    std::string label(TwoCellId a) const;

private:
    ModelTables t_;
    std::vector<std::vector<OneCellId>> homs_;
    std::vector<std::vector<TwoCellId>> cells_;
    std::vector<TwoCellId> inverse_;
};

// Fills tables from callbacks; used by the generators and by derived constructions.
class ModelBuilder {
public:
    explicit ModelBuilder(std::string name) { t_.name = std::move(name); }

    ObjId add_object(std::string name = {});
    OneCellId add_one_cell(ObjId src, ObjId dst, std::string name = {});
    TwoCellId add_two_cell(OneCellId src, OneCellId dst, std::string name = {});

    void set_id1(ObjId x, OneCellId f);
    void set_id2(OneCellId f, TwoCellId a);

    // Each callback is invoked for every pair where the operation is defined.
    void fill_comp1(const std::function<OneCellId(OneCellId, OneCellId)>& fn);
    void fill_vcomp(const std::function<TwoCellId(TwoCellId, TwoCellId)>& fn);
    void fill_hcomp(const std::function<TwoCellId(TwoCellId, TwoCellId)>& fn);
    void fill_tensor_obj(const std::function<ObjId(ObjId, ObjId)>& fn);
    void fill_tensor1(const std::function<OneCellId(OneCellId, OneCellId)>& fn);
    void fill_tensor2(const std::function<TwoCellId(TwoCellId, TwoCellId)>& fn);

    ModelTables& tables() { return t_; }
    ModelTables take() { return std::move(t_); }

private:
    ModelTables t_;
};

}  // namespace weakunits
