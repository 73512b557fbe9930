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

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "fillcurve/centralizer.hpp"
#include "fillcurve/classify.hpp"
#include "fillcurve/ffield.hpp"
#include "fillcurve/linalg.hpp"

/// The automorphism group of a nonsingular degree-(q+2) curve inside
/// PGL(3, F_q). A matrix B acts as an automorphism of the curve of A
/// exactly when tB A tB^-1 = rho A + mu E for scalars rho != 0, mu; the
/// group is enumerated by solving, for each of the q(q-1) scalar pairs,
/// the 9x9 linear system in the entries of tB and keeping the invertible
/// solutions. A full GL(3, F_q) scan is kept alongside as a cross-check
/// for small q.
///
/// |Aut| is q^2+q+1 or 3(q^2+q+1). For the harmonic class (q = 3^e,
/// cubic t^3 - (mu^2 t + a)) the enumerated order is 3(q^2+q+1) = 39 at
/// q = 3, not 6(q^2+q+1); reports flag the verified triple order.

namespace fillcurve {

/// The unique scalars with tB A tB^-1 = rho A + mu E, if any. For matrices
/// A outside the scalar family the pair is unique.
inline std::optional<std::pair<FieldElem, FieldElem>> aut_condition(const Mat& b, const Mat& a) {
    if (det(b).is_zero()) throw std::invalid_argument("aut_condition requires an invertible matrix");
    const FieldCtxPtr& K = a.ctx();
    const Mat tb = transpose(b);
    const Mat m = tb * a * inverse(tb);
    const Mat E = Mat::identity(K, a.n());
    for (std::int64_t ri = 1; ri < K->size(); ++ri) {
        const FieldElem rho = element_at(K, ri);
        for (std::int64_t mi = 0; mi < K->size(); ++mi) {
            const FieldElem mu = element_at(K, mi);
            if (m == rho * a + mu * E) return std::make_pair(rho, mu);
        }
    }
    return std::nullopt;
}

enum class Quotient { Trivial, Z3 };
enum class SpecialCase { None, CaseI, CaseII };

struct AutGroupReport {
    std::int64_t q = 0;
    Cubic cubic;
    std::int64_t order = 0;
    std::int64_t singer_order = 0;  // q^2 + q + 1
    Quotient quotient = Quotient::Trivial;
    SpecialCase case_detected = SpecialCase::None;
    bool tallini_corrected = false;  // quotient Z3 with verified order 3(q^2+q+1)
    bool singer_normal = false;
    std::vector<Mat> elements;  // normalized PGL representatives, sorted
    std::vector<std::pair<FieldElem, FieldElem>> solvable_pairs;
};

/// Generator of the Singer subgroup: a centralizer generator of tA, whose
/// PGL image has order exactly q^2 + q + 1.
inline Mat singer_generator(const Mat& a) {
    return centralizer_generator(transpose(a));
}

/// Full enumeration of Aut inside PGL(3, F_q) by per-(rho, mu) linear
/// systems. Also verifies the Singer subgroup's order and normality and the
/// structure facts the report carries.
inline AutGroupReport enumerate_aut(const Mat& a) {
    if (a.n() != 3) throw std::invalid_argument("enumerate_aut requires a 3x3 matrix");
    const MonicPoly f = char_poly(a);
    if (!is_irreducible(f)) throw std::invalid_argument("characteristic polynomial is reducible");
    const FieldCtxPtr& K = a.ctx();
    const std::int64_t q = K->size();

    AutGroupReport report;
    report.q = q;
    report.cubic = cubic_of_poly(f);
    report.singer_order = q * q + q + 1;

    std::set<Mat> elems;
    for (std::int64_t ri = 1; ri < q; ++ri) {
        const FieldElem rho = element_at(K, ri);
        for (std::int64_t mi = 0; mi < q; ++mi) {
            const FieldElem mu = element_at(K, mi);
            // tB A = (rho A + mu E) tB, linear in X = tB.
            const Mat C = rho * a + mu * Mat::identity(K, 3);
            const auto basis = sylvester_nullspace(neg(one(K)) * C, a);  // -C X + X A = 0
            if (basis.empty()) continue;
            if (basis.size() != 3) throw Error("automorphism system has unexpected dimension");
            report.solvable_pairs.emplace_back(rho, mu);
            std::array<std::int64_t, 3> odo = {0, 0, 0};
            while (true) {
                if (odo[0] || odo[1] || odo[2]) {
                    Mat x(K, 3);
                    for (int i = 0; i < 3; ++i) x = x + element_at(K, odo[static_cast<std::size_t>(i)]) * basis[static_cast<std::size_t>(i)];
                    if (det(x).is_zero()) throw Error("nonzero automorphism solution is singular");
                    elems.insert(pgl_normalize(transpose(x)));
                }
                int pos = 2;
                while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == q) odo[static_cast<std::size_t>(pos--)] = 0;
                if (pos < 0) break;
            }
        }
    }
    report.order = static_cast<std::int64_t>(elems.size());
    report.elements.assign(elems.begin(), elems.end());

    if (report.order % report.singer_order != 0) throw Error("group order is not a multiple of q^2+q+1");
    const std::int64_t quot = report.order / report.singer_order;
    if (quot != 1 && quot != 3) throw Error("quotient order is neither 1 nor 3");
    report.quotient = quot == 1 ? Quotient::Trivial : Quotient::Z3;

    const auto cases = special_case_detect(report.cubic);
    report.case_detected = cases.case_i   ? SpecialCase::CaseI
                           : cases.case_ii ? SpecialCase::CaseII
                                           : SpecialCase::None;
    if ((report.quotient == Quotient::Z3) != (report.case_detected != SpecialCase::None))
        throw Error("quotient structure disagrees with the special-case detector");
    report.tallini_corrected = report.quotient == Quotient::Z3 && report.order == 3 * report.singer_order;

    // Singer subgroup: order and normality under conjugation by every element.
    const Mat b0 = singer_generator(a);
    if (pgl_order(b0) != report.singer_order) throw Error("Singer generator has wrong PGL order");
    std::set<Mat> singer;
    Mat cur = Mat::identity(K, 3);
    for (std::int64_t s = 0; s < report.singer_order; ++s) {
        cur = s == 0 ? cur : cur * b0;
        singer.insert(pgl_normalize(cur));
    }
    if (!elems.count(pgl_normalize(b0))) throw Error("Singer generator is not in the enumerated group");
    report.singer_normal = true;
    for (const Mat& g : report.elements) {
        const Mat conj = g * b0 * inverse(g);
        if (!singer.count(pgl_normalize(conj))) report.singer_normal = false;
    }
    return report;
}

/// The permutation of the three eigen-points induced by an automorphism.
inline std::array<int, 3> pi_map(const Mat& b, const Mat& a) {
    if (!aut_condition(b, a)) throw std::invalid_argument("matrix is not an automorphism of the curve");
    const FieldCtxPtr ext = make_extension(a.ctx(), 3);
    const auto pts = eigen_points(a, ext);
    std::array<int, 3> sigma = {-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        const ProjPoint image = apply(b, pts[static_cast<std::size_t>(i)]);
        for (int j = 0; j < 3; ++j)
            if (image == pts[static_cast<std::size_t>(j)]) sigma[static_cast<std::size_t>(i)] = j;
        if (sigma[static_cast<std::size_t>(i)] < 0) throw Error("automorphism does not permute the eigen-points");
    }
    return sigma;
}

/// All points of P^2(F_{q^3}) fixed by B0^s, 1 <= s < q^2+q+1.
inline std::vector<ProjPoint> fixed_points(const Mat& a, std::int64_t s) {
    const std::int64_t q = a.ctx()->size();
    if (s < 1 || s >= q * q + q + 1) throw std::invalid_argument("power out of range");
    const Mat b0s = mat_pow(singer_generator(a), s);
    const FieldCtxPtr ext = make_extension(a.ctx(), 3);
    const Mat be = embed_mat(b0s, ext);
    std::vector<ProjPoint> out;
    for (const auto& pt : proj_points(3, ext))
        if (apply(be, pt) == pt) out.push_back(pt);
    return out;
}

inline Quotient quotient_structure(const Mat& a) { return enumerate_aut(a).quotient; }

/// Exhaustive cross-check: automorphisms found by scanning all of GL(3, F_q).
/// Only sensible for q <= 3.
inline std::set<Mat> aut_via_gl_scan(const Mat& a) {
    std::set<Mat> out;
    for_each_gl(a.ctx(), 3, [&](const Mat& b) {
        if (aut_condition(b, a)) out.insert(pgl_normalize(b));
    });
    return out;
}

}  // namespace fillcurve
