/*
   Copyright 2026 The fillcurve authors

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

#pragma once

#include <nlohmann/json.hpp>

#include "fillcurve/autgroup.hpp"
#include "fillcurve/centralizer.hpp"
#include "fillcurve/classify.hpp"
#include "fillcurve/smooth.hpp"

/// JSON views of the verification reports. Key order is fixed (insertion
/// order) and every iteration below is over deterministically ordered
/// containers, so serialized reports are byte-stable across runs.

namespace fillcurve {

using Json = nlohmann::ordered_json;

inline Json to_json(const Cubic& f) {
    return Json{{"c", to_string(f.c)}, {"b", to_string(f.b)}, {"a", to_string(f.a)}, {"text", to_string(f)}};
}

inline Json to_json(const ProjPoint& p) {
    Json arr = Json::array();
    for (int i = 0; i < p.dim(); ++i) arr.push_back(to_string(p[i]));
    return arr;
}

inline Json to_json(const SmoothnessReport& r) {
    Json scan = Json::array();
    for (int m : r.scanned_degrees) {
        Json layer;
        layer["m"] = m;
        layer["points"] = Json::array();
        for (const auto& hit : r.scan_results)
            if (hit.m == m) layer["points"].push_back(to_json(hit.point));
        scan.push_back(std::move(layer));
    }
    Json identities = Json::object();
    for (const auto& [name, ok] : r.identity_results) identities[name] = ok;
    return Json{{"q", r.q},
                {"cubic", to_json(r.cubic)},
                {"criterion", r.criterion_result},
                {"scan", std::move(scan)},
                {"identities", std::move(identities)},
                {"consistent", r.consistent}};
}

inline Json to_json(const MinDegreeReport& r) {
    return Json{{"q", r.q},
                {"witness_cubic", to_json(r.witness)},
                {"witness_smooth", r.witness_smooth},
                {"low_degrees_empty", r.low_degrees_empty},
                {"pencil_all_singular", r.pencil_all_singular},
                {"ok", r.ok}};
}

inline Json to_json(const ClassReport& r) {
    Json classes = Json::array();
    for (const auto& cl : r.classes) {
        Json labels = Json::array();
        for (const auto& l : cl.labels) labels.push_back(l);
        classes.push_back(Json{{"representative", to_json(cl.representative)},
                               {"size", cl.size},
                               {"labels", std::move(labels)}});
    }
    return Json{{"q", r.q}, {"irreducible_count", r.irreducible_count}, {"classes", std::move(classes)}};
}

inline Json to_json(const AutGroupReport& r, bool include_elements = false) {
    Json j{{"q", r.q},
           {"cubic", to_json(r.cubic)},
           {"order", r.order},
           {"singer_order", r.singer_order},
           {"quotient", r.quotient == Quotient::Z3 ? "Z3" : "trivial"},
           {"case_detected", r.case_detected == SpecialCase::CaseI    ? "case_i"
                             : r.case_detected == SpecialCase::CaseII ? "case_ii"
                                                                      : "none"},
           {"tallini_corrected", r.tallini_corrected},
           {"singer_normal", r.singer_normal}};
    if (include_elements) {
        Json elems = Json::array();
        for (const auto& m : r.elements) elems.push_back(to_string(m));
        j["elements"] = std::move(elems);
    }
    return j;
}

inline Json to_json(const CentralizerReport& r) {
    Json j{{"n", r.n},
           {"q", r.q},
           {"poly", to_string(r.poly)},
           {"z_gl_order", r.z_gl_order},
           {"z_pgl_order", r.z_pgl_order},
           {"pgl_image_order", r.pgl_image_order},
           {"pi_image_order", r.pi_image_order}};
    if (r.support_k)
        j["support_k"] = *r.support_k;
    else
        j["support_k"] = nullptr;
    j["support_condition_holds"] = r.support_condition_holds;
    j["generator"] = to_string(r.generator);
    return j;
}

}  // namespace fillcurve
