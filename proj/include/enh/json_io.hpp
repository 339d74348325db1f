#pragma once

#include <json.hpp>

#include "enh/bigraded.hpp"

namespace enh {

inline nlohmann::json table_json(const HomologyTable& t, bool with_reps = false)
{
    nlohmann::json cells = nlohmann::json::array();
    for (auto& [c, e] : t.entries) {
        if (e.dim == 0)
            continue;
        nlohmann::json cell{{"degree", c.deg}, {"weight", c.wt}, {"dim", e.dim}};
        if (with_reps && !e.reps.empty()) {
            nlohmann::json reps = nlohmann::json::array();
            for (auto& rep : e.reps) {
                nlohmann::json terms = nlohmann::json::array();
                for (auto& [label, coeff] : rep)
                    terms.push_back({{"basis", label}, {"coeff", coeff}});
                reps.push_back(terms);
            }
            cell["reps"] = reps;
        }
        cells.push_back(cell);
    }
    return nlohmann::json{{"field", t.field}, {"cells", cells}};
}

inline std::string HomologyTable::to_json() const { return table_json(*this).dump(2); }

}  // namespace enh
