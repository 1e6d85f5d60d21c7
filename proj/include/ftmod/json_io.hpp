/*
   Copyright 2026 The ftmod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FTMOD_JSON_IO_HPP
#define FTMOD_JSON_IO_HPP

#include <nlohmann/json.hpp>

#include "ext_structure.hpp"
#include "parse.hpp"

namespace ftmod {

// {"var": "tau", "entries": [[ [[deg, "coeff"], ...], ... ], ...]}
template <class K>
nlohmann::json matrix_json(const SkewMatrix<K>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols(); ++j) {
            nlohmann::json terms = nlohmann::json::array();
            for (const auto& [d, c] : m(i, j).terms()) terms.push_back({d, c.str()});
            row.push_back(terms);
        }
        rows.push_back(row);
    }
    return {{"var", var_name(m.variable())}, {"entries", rows}};
}

template <class K>
SkewMatrix<K> matrix_from_json(const typename K::field_ptr& f, const nlohmann::json& j) {
    try {
        const std::string vs = j.at("var").get<std::string>();
        if (vs != "tau" && vs != "sig") throw ParseError("unknown variable " + vs);
        const Var v = vs == "tau" ? Var::tau : Var::sigma;
        const auto& rows = j.at("entries");
        std::vector<std::vector<SkewPoly<K>>> out;
        for (const auto& r : rows) {
            std::vector<SkewPoly<K>> row;
            for (const auto& e : r) {
                SkewPoly<K> p(f, v);
                for (const auto& t : e) p.add_term(t.at(0).get<int>(), parse_element<K>(f, t.at(1).get<std::string>()));
                row.push_back(p);
            }
            out.push_back(std::move(row));
        }
        return SkewMatrix<K>::from_rows(f, v, out);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix JSON: ") + e.what());
    }
}

template <class K>
nlohmann::json structure_json(const ExtStructure<K>& E) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& a : E.basis) basis.push_back({a.row, a.col, a.deg});
    return {{"basis", basis}, {"order", order_name(E.order)}, {"pi_t", matrix_json(E.pi_t)}, {"ga_rank", E.ga_rank()}};
}

}  // namespace ftmod

#endif
