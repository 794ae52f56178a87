#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weakunits/model.hpp"

namespace weakunits {

// Locally discrete model of a finite semigroup given by its multiplication
// table (objects are the elements; only identity 1- and 2-cells).
TwoCategoryModel make_semigroup_model(const std::vector<std::vector<int>>& table, std::string name = "monoid");
TwoCategoryModel make_m3();  // Z/3 under addition

// Two objects I and X with II = I and every other product X.  The endo-arrows
// of I form {e, u} (u # u = e), optionally with an absorbing non-invertible z.
// 2-cells between endo-arrows of I carry labels in Z/labels and exist between
// all pairs (chaotic) or only on the diagonal.  Everything tensored with X
// collapses onto id_X.
struct PuffSpec {
    std::string name;
    bool chaotic = false;
    int labels = 1;
    bool absorbing_zero = false;
};
TwoCategoryModel make_puff(const PuffSpec& spec);

TwoCategoryModel make_z2p();
TwoCategoryModel make_zg();
TwoCategoryModel make_chp();

// Same objects and 1-cells, identity 2-cells only.
TwoCategoryModel discrete_reduct(const TwoCategoryModel& m);

// "m3", "z2p", "z2p-discrete", "zg", "chp".
std::vector<std::string> builtin_model_names();
TwoCategoryModel make_builtin(std::string_view kind);

// "0,1,2;1,2,0;2,0,1"
std::vector<std::vector<int>> parse_table(std::string_view text);

}  // namespace weakunits
