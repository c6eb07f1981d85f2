/*
   Copyright 2026 The qlk authors

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

#ifndef QLK_JSON_IO_HPP
#define QLK_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qlk/braid.hpp"
#include "qlk/engine.hpp"
#include "qlk/hopfcheck.hpp"
#include "qlk/laurent.hpp"
#include "qlk/ribbon.hpp"

namespace qlk {

using Json = nlohmann::json;

/// [[exponent, coefficient-as-decimal-string], ...] in decreasing exponent
/// order; coefficients as strings so arbitrary precision survives transport.
inline Json poly_to_json(const LaurentPoly& p) {
    Json terms = Json::array();
    const auto& ts = p.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it)
        terms.push_back(Json::array({it->first, it->second.str()}));
    return terms;
}

inline Json invariant_to_json(const BraidWord& b, const InvariantResult& r) {
    return Json{{"braid", render(b)},
                {"model", r.model},
                {"variable", var_name(r.scalar.variable())},
                {"strands", r.strands},
                {"writhe", r.writhe},
                {"scalar", poly_to_json(r.scalar)},
                {"rendered", r.scalar.str()},
                {"proportional", r.proportionality_ok},
                {"elapsed_ms", r.elapsed_ms}};
}

inline Json theorem_to_json(const TheoremReport& r) {
    return Json{{"braid", render(r.braid)},
                {"n", r.n},
                {"lg", poly_to_json(r.lg)},
                {"alexander_pow", poly_to_json(r.alexander_pow)},
                {"equal_normalized", r.equal_normalized},
                {"raw_equal", r.raw_equal},
                {"raw_difference", poly_to_json(r.raw_difference)},
                {"elapsed_ms", r.elapsed_ms}};
}

inline Json check_report_to_json(const std::vector<CheckReport>& reports, std::uint64_t seed,
                                 int samples) {
    Json checks = Json::array();
    bool all = true;
    for (const auto& c : reports) {
        checks.push_back(Json{{"name", c.name},
                              {"samples", c.samples},
                              {"max_residual", c.max_residual},
                              {"tolerance", c.tolerance},
                              {"exact", c.tolerance == 0.0},
                              {"pass", c.pass}});
        all = all && c.pass;
    }
    return Json{{"seed", seed}, {"samples", samples}, {"checks", checks}, {"all_pass", all}};
}

/// Dense dump of a ribbon for golden-file comparisons: row-major entry list
/// of the braiding and its inverse, plus the pivot diagonal.
inline Json ribbon_to_json(const RibbonData& rib) {
    auto dense = [&](const SparseOperator& op) {
        Json rows = Json::array();
        for (std::uint64_t r = 0; r < op.dim(); ++r) {
            Json row = Json::array();
            for (std::uint64_t c = 0; c < op.dim(); ++c) row.push_back(poly_to_json(op.entry(r, c)));
            rows.push_back(row);
        }
        return rows;
    };
    Json pivot = Json::array();
    for (const auto& p : rib.pivot) pivot.push_back(poly_to_json(p));
    return Json{{"model", rib.model},
                {"dim", rib.dim},
                {"variable", var_name(rib.var)},
                {"braiding", dense(rib.braiding)},
                {"braiding_inv", dense(rib.braiding_inv)},
                {"pivot", pivot}};
}

} // namespace qlk

#endif // QLK_JSON_IO_HPP
