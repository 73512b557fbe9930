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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fillcurve/classify.hpp"
#include "fillcurve/ffield.hpp"
#include "fillcurve/forms.hpp"
#include "fillcurve/linalg.hpp"
#include "fillcurve/scan.hpp"

/// Smoothness of the degree-(q+2) curves. Two independent routes are kept
/// side by side:
///
///  - the criterion: the curve of F_A is nonsingular exactly when the
///    characteristic cubic of A has no root in F_q;
///
///  - the oracle: an exhaustive search for points of P^2(F_{q^m}),
///    m in {1,2,3,6}, at which the form and all three partials vanish.
///
/// The scan layers cover every point of degree dividing 6 over F_q. Points
/// of degree 4, 5 or >= 7 are outside the scanned layers; the theory places
/// all singular-point candidates in P^2(F_q) or P^2(F_{q^3}), so the m = 6
/// layer is margin beyond that, not a completeness guarantee. The residual
/// gap is recorded here rather than silently ignored.
///
/// The form's value is always tested explicitly alongside the partials:
/// in characteristic p | q+2 the Euler relation degenerates and vanishing
/// partials alone do not certify membership in the curve.

namespace fillcurve {

/// True exactly when the characteristic polynomial of A (degree 3) has no
/// root in the base field.
inline bool is_smooth_criterion(const Mat& a) {
    if (a.n() != 3) throw std::invalid_argument("criterion requires a 3x3 matrix");
    return roots_in(char_poly(a), a.ctx()).empty();
}

/// The canonical curve y U + z V + (a x + b y + c z) W of a cubic.
inline HomForm canonical_form(const Cubic& f) { return build_FA(companion3(f)); }

struct ScanHit {
    int m = 0;
    ProjPoint point;
};

/// All points of P^2(F_{q^m}), for each requested m, at which F and its
/// three partials vanish. Hits are reported per layer in scan order.
inline std::vector<ScanHit> singular_scan(const HomForm& f, const std::vector<int>& degrees) {
    for (int m : degrees)
        if (m != 1 && m != 2 && m != 3 && m != 6)
            throw std::invalid_argument("scan layers are restricted to m in {1,2,3,6}");
    const auto parts = partials(f);
    std::vector<ScanHit> hits;
    for (int m : degrees) {
        const FieldCtxPtr ext = make_extension(f.ctx(), m);
        const scan::Table tab(ext);
        std::vector<scan::CompiledForm> polys;
        for (const auto& p : parts) polys.push_back(scan::compile(p, tab));
        polys.push_back(scan::compile(f, tab));
        for (std::int64_t t : scan::common_zeros(tab, polys)) hits.push_back({m, scan::point_at(tab, t)});
    }
    return hits;
}

/// The auxiliary curve G = x^q F_x + y^q F_y + z^q F_z of the canonical F,
/// verified against its closed form y^q U + z^q V + (ax+by+cz)^q W.
inline HomForm build_G(const Cubic& f) {
    const FieldCtxPtr& K = f.ctx();
    const int q = static_cast<int>(K->size());
    const HomForm F = canonical_form(f);
    const auto parts = partials(F);
    HomForm g(K, 2 * q + 1);
    for (int v = 0; v < 3; ++v) {
        Expo e = {0, 0, 0};
        e[static_cast<std::size_t>(v)] = q;
        HomForm xq(K, q);
        xq.add_term(e, one(K));
        g = g + xq * parts[static_cast<std::size_t>(v)];
    }
    const auto gens = uvw(K);
    HomForm l3(K, 1);
    l3.add_term({1, 0, 0}, f.a);
    l3.add_term({0, 1, 0}, f.b);
    l3.add_term({0, 0, 1}, f.c);
    HomForm yq(K, q), zq(K, q);
    yq.add_term({0, q, 0}, one(K));
    zq.add_term({0, 0, q}, one(K));
    const HomForm closed = yq * gens[0] + zq * gens[1] + form_pow(l3, q) * gens[2];
    if (g != closed) throw Error("G does not match its closed form");
    return g;
}

namespace detail {

// Bivariate polynomial over an extension field, used for the local
// expansions F(s+u, t+v, 1) and G(s+u, t+v, 1).
using BiPoly = std::map<std::pair<int, int>, FieldElem>;

inline void bi_add(BiPoly& p, int i, int j, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = p.find({i, j});
    if (it == p.end()) {
        p.emplace(std::make_pair(i, j), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline FieldElem bi_coeff(const BiPoly& p, int i, int j, const FieldCtxPtr& K) {
    auto it = p.find({i, j});
    return it == p.end() ? zero(K) : it->second;
}

/// Expansion of form(s+u, t+v, 1) by literal polynomial substitution: an
/// oracle for the local coefficients that never consults closed formulas.
inline BiPoly local_expansion(const HomForm& form, const FieldElem& u, const FieldElem& v) {
    const FieldCtxPtr& K = u.ctx();
    BiPoly out;
    for (const auto& [e, c] : form.terms()) {
        // (s+u)^e0 as univariate in s, low degree first; likewise (t+v)^e1.
        auto expand = [&](const FieldElem& shift, int n) {
            std::vector<FieldElem> r = {one(K)};
            for (int k = 0; k < n; ++k) {
                std::vector<FieldElem> nx(r.size() + 1, zero(K));
                for (std::size_t i = 0; i < r.size(); ++i) {
                    nx[i + 1] = nx[i + 1] + r[i];
                    nx[i] = nx[i] + r[i] * shift;
                }
                r = std::move(nx);
            }
            return r;
        };
        const auto su = expand(u, e[0]);
        const auto tv = expand(v, e[1]);
        const FieldElem ce = embed(c, K);
        for (std::size_t i = 0; i < su.size(); ++i)
            for (std::size_t j = 0; j < tv.size(); ++j)
                bi_add(out, static_cast<int>(i), static_cast<int>(j), ce * su[i] * tv[j]);
    }
    return out;
}

}  // namespace detail

/// Local-coefficient identities at the eigen-point (lambda^-2, lambda^-1, 1)
/// and the closing determinant identity. Every coefficient is computed independently
/// from the shifted expansion and then compared against both the partial
/// evaluations and the closed formulas. Returned in fixed order.
inline std::vector<std::pair<std::string, bool>> proof_identities(const Cubic& f) {
    if (!is_irreducible(f)) throw std::invalid_argument("proof identities require an irreducible cubic");
    const FieldCtxPtr& K = f.ctx();
    const std::int64_t q = K->size();
    const FieldCtxPtr ext = make_extension(K, 3);
    const FieldElem lambda = roots_in(cubic_to_poly(f), ext).front();
    const FieldElem u = pow(lambda, -2), v = pow(lambda, -1);
    const FieldElem a = embed(f.a, ext), b = embed(f.b, ext);
    const FieldElem o = one(ext), two = from_int(ext, 2);

    const HomForm F = canonical_form(f);
    const HomForm G = build_G(f);
    const auto partsF = partials(F);
    const auto expF = detail::local_expansion(embed_form(F, ext), u, v);
    const auto expG = detail::local_expansion(embed_form(G, ext), u, v);

    const FieldElem coeff_s = detail::bi_coeff(expF, 1, 0, ext);
    const FieldElem coeff_t = detail::bi_coeff(expF, 0, 1, ext);
    const FieldElem coeff_sq = detail::bi_coeff(expG, static_cast<int>(q), 0, ext);
    const FieldElem coeff_tq = detail::bi_coeff(expG, 0, static_cast<int>(q), ext);

    const FieldElem factor = pow(lambda, 1 - q) - o;
    const FieldElem lam_qm2 = pow(lambda, -q - 2);

    bool eq10 = coeff_s == factor * (a * lam_qm2 - o) && coeff_s == eval_at(partsF[0], {u, v, o});
    bool eq11 = coeff_t == factor * (b * lam_qm2 + pow(lambda, -q) + two * v) &&
                coeff_t == eval_at(partsF[1], {u, v, o});
    bool eq12 = coeff_sq == factor * (a * lam_qm2 - pow(lambda, q - 1));
    bool eq13 = coeff_tq == factor * (b * lam_qm2 + pow(lambda, q - 2) + two * v);

    // Both curves pass through the eigen-point, and the degree <= q part of the
    // local expansion of G is exactly (Coeff_{s^q}) s^q + (Coeff_{t^q}) t^q.
    bool structure = detail::bi_coeff(expF, 0, 0, ext).is_zero() &&
                     detail::bi_coeff(expG, 0, 0, ext).is_zero();
    for (int i = 0; i <= static_cast<int>(q) && structure; ++i)
        for (int j = 0; i + j <= static_cast<int>(q); ++j) {
            if (i + j == 0) continue;
            if ((i == static_cast<int>(q) && j == 0) || (i == 0 && j == static_cast<int>(q))) continue;
            if (!detail::bi_coeff(expG, i, j, ext).is_zero()) {
                structure = false;
                break;
            }
        }

    const FieldElem det2 = pow(coeff_s, q) * coeff_tq - pow(coeff_t, q) * coeff_sq;
    const FieldElem rhs = pow(factor, q + 1) * (o - pow(lambda, q * q - 1)) * pow(lambda, -q * q - 1) *
                          pow(two * a * u + b * v + lambda, q);
    bool det_identity = det2 == rhs;
    bool det_nonzero = !det2.is_zero();

    return {{"coeff_s_F", eq10},     {"coeff_t_F", eq11},       {"coeff_sq_G", eq12},
            {"coeff_tq_G", eq13},    {"local_structure", structure}, {"det_identity", det_identity},
            {"det_nonzero", det_nonzero}};
}

// ---------------------------------------------------------------------------
// Reports

/// One curve's smoothness evidence: criterion verdict, per-layer scan
/// results, proof identities, and their mutual consistency.
struct SmoothnessReport {
    std::int64_t q = 0;
    Cubic cubic;
    bool criterion_result = false;
    std::vector<int> scanned_degrees;
    std::vector<ScanHit> scan_results;
    std::vector<std::pair<std::string, bool>> identity_results;  // irreducible cubics only
    bool consistent = false;
};

inline SmoothnessReport smoothness_report(const Cubic& f, const std::vector<int>& degrees) {
    SmoothnessReport r;
    r.q = f.ctx()->size();
    r.cubic = f;
    r.scanned_degrees = degrees;
    const Mat A = companion3(f);
    r.criterion_result = is_smooth_criterion(A);
    r.scan_results = singular_scan(canonical_form(f), degrees);
    if (is_irreducible(f)) r.identity_results = proof_identities(f);
    r.consistent = r.criterion_result == r.scan_results.empty();
    return r;
}

/// Certificate that q+2 is the least degree at which a nonsingular curve
/// through all of P^2(F_q) exists: (a) a smooth degree-(q+2) witness,
/// (b) no nonzero vanishing form of degree <= q, (c) every nonzero pencil
/// member of degree q+1 is singular.
struct MinDegreeReport {
    std::int64_t q = 0;
    Cubic witness;
    bool witness_smooth = false;
    bool low_degrees_empty = false;    // dim of vanishing forms is 0 for d <= q
    bool pencil_all_singular = false;  // all q^2+q+1 pencil classes
    bool ok = false;
};

inline MinDegreeReport min_degree_certificate(const FieldCtxPtr& ctx) {
    MinDegreeReport r;
    r.q = ctx->size();
    // (a) first irreducible cubic in enumeration order.
    bool have_witness = false;
    for (const Cubic& f : enumerate_cubics(ctx)) {
        if (!is_irreducible(f)) continue;
        r.witness = f;
        have_witness = true;
        break;
    }
    if (!have_witness) throw Error("no irreducible cubic found");
    r.witness_smooth = is_smooth_criterion(companion3(r.witness)) &&
                       singular_scan(canonical_form(r.witness), {1, 2, 3}).empty();
    // (b) no nonzero form of degree <= q vanishes on all rational points.
    r.low_degrees_empty = true;
    for (int d = 1; d <= static_cast<int>(r.q); ++d)
        if (ideal_dimensions(ctx, d).second != 0) r.low_degrees_empty = false;
    // (c) every nonzero pencil member is singular: the distinguished point
    // lies on the curve and annihilates all three partials.
    r.pencil_all_singular = true;
    const auto gens = uvw(ctx);
    for (const auto& coeffs : proj_points(3, ctx)) {
        const HomForm F = coeffs[0] * gens[0] + coeffs[1] * gens[1] + coeffs[2] * gens[2];
        const auto rep = pencil_analysis(coeffs[0], coeffs[1], coeffs[2]);
        const auto parts = partials(F);
        bool singular = eval(F, rep.singular_point).is_zero();
        for (const auto& p : parts)
            if (!eval(p, rep.singular_point).is_zero()) singular = false;
        if (!singular || rep.lines.size() != static_cast<std::size_t>(r.q) + 1) r.pencil_all_singular = false;
    }
    r.ok = r.witness_smooth && r.low_degrees_empty && r.pencil_all_singular;
    return r;
}

/// The four equivalent conditions on a curve F_A. Conditions (a), (c), (d)
/// are decided exactly; (b) is a necessary-condition check only: it rules
/// out linear factors over F_{q^3} by trial division and does not decide
/// absolute irreducibility.
struct EquivalenceConditions {
    bool a_smooth = false;
    bool b_no_linear_factor = false;
    bool c_smooth_at_rational_points = false;
    bool d_irreducible_charpoly = false;
    bool b_is_partial_check = true;
};

inline EquivalenceConditions equivalence_conditions(const Mat& A,
                                                    const std::vector<int>& degrees = {1, 2, 3, 6}) {
    const HomForm F = build_FA(A);
    if (F.is_zero()) throw std::invalid_argument("the form of a scalar matrix is identically zero");
    EquivalenceConditions r;
    r.a_smooth = singular_scan(F, degrees).empty();
    r.c_smooth_at_rational_points = singular_scan(F, {1}).empty();
    r.d_irreducible_charpoly = is_smooth_criterion(A);
    const FieldCtxPtr ext3 = make_extension(A.ctx(), 3);
    const HomForm Fe = embed_form(F, ext3);
    r.b_no_linear_factor = true;
    for (const auto& dual : proj_points(3, ext3)) {
        HomForm line(ext3, 1);
        line.add_term({1, 0, 0}, dual[0]);
        line.add_term({0, 1, 0}, dual[1]);
        line.add_term({0, 0, 1}, dual[2]);
        if (divide_by_linear(Fe, line)) {
            r.b_no_linear_factor = false;
            break;
        }
    }
    return r;
}

}  // namespace fillcurve
