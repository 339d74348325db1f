#pragma once

#include <json.hpp>

#include "enh/hodge.hpp"

namespace enh {

inline SimplicialSetFinite simplicial_from_json(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail_usage(std::string("simplicial JSON parse error: ") + e.what());
    }
    SimplicialSetFinite X;
    if (!j.contains("levels"))
        fail_usage("simplicial JSON needs a 'levels' array");
    for (auto& n : j["levels"])
        X.level_size.push_back(n.get<int>());
    int top = X.dims();
    X.faces.resize(top + 1);
    X.degens.resize(top + 1);
    auto load_tables = [&](const char* key, auto& out, int first_level, int ops_of_level) {
        if (!j.contains(key))
            fail_usage(std::string("simplicial JSON needs '") + key + "'");
        auto& arr = j[key];
        for (int q = first_level; q <= top; ++q) {
            size_t slot = q - first_level;
            if (slot >= arr.size())
                break;
            for (auto& tbl : arr[slot]) {
                std::vector<int> t;
                for (auto& v : tbl)
                    t.push_back(v.get<int>());
                if ((int)t.size() != X.level_size[q])
                    fail_usage("simplicial JSON: table size mismatch at level " +
                               std::to_string(q));
                out[q].push_back(std::move(t));
            }
            if ((int)out[q].size() != (q + ops_of_level))
                fail_usage("simplicial JSON: wrong operator count at level " +
                           std::to_string(q));
        }
    };
    load_tables("faces", X.faces, 1, 1);    // q+1 faces at level q
    load_tables("degens", X.degens, 0, 1);  // q+1 degeneracies at level q
    if (auto err = X.validate())
        fail_invalid("simplicial JSON: " + *err);
    return X;
}

inline nlohmann::json etale_json(const EtaleCertificate& cert)
{
    nlohmann::json j;
    j["etale"] = cert.etale;
    auto dims = nlohmann::json::array();
    for (auto& [c, d] : cert.indecomposable_dims)
        dims.push_back({{"degree", c.deg}, {"weight", c.wt}, {"dim", d}});
    j["indecomposables"] = dims;
    j["generating_products"] = cert.generating_products;
    return j;
}

}  // namespace enh
