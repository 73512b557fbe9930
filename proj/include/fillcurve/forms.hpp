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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillcurve/ffield.hpp"
#include "fillcurve/linalg.hpp"

/// Trivariate homogeneous forms over F_q and the specific forms of the
/// plane-filling theory:
///
///   U = y^q z - y z^q,  V = z^q x - z x^q,  W = x^q y - x y^q
///
/// of degree q+1, the degree-(q+2) family F_A = (x,y,z) A (U,V,W)^t, the
/// cofactor covariance law of (U,V,W) under linear substitutions, and the
/// per-degree linear algebra of the vanishing ideal of P^2(F_q).

namespace fillcurve {

using Expo = std::array<int, 3>;

/// Sparse homogeneous polynomial: exponent triple -> nonzero coefficient.
class HomForm {
  public:
    HomForm(FieldCtxPtr ctx, int degree) : ctx_(std::move(ctx)), degree_(degree) {}

    const FieldCtxPtr& ctx() const { return ctx_; }
    int degree() const { return degree_; }
    const std::map<Expo, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Expo& e, const FieldElem& c) {
        if (c.is_zero()) return;
        if (e[0] + e[1] + e[2] != degree_) throw std::invalid_argument("term degree mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FieldElem coeff(const Expo& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero(ctx_) : it->second;
    }

    friend bool operator==(const HomForm& a, const HomForm& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const HomForm& a, const HomForm& b) { return !(a == b); }

  private:
    FieldCtxPtr ctx_;
    int degree_;
    std::map<Expo, FieldElem> terms_;
};

inline HomForm operator+(const HomForm& a, const HomForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    HomForm r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

inline HomForm operator-(const HomForm& a, const HomForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
    HomForm r = a;
    for (const auto& [e, c] : b.terms()) r.add_term(e, neg(c));
    return r;
}

inline HomForm operator*(const FieldElem& s, const HomForm& a) {
    HomForm r(a.ctx(), a.degree());
    for (const auto& [e, c] : a.terms()) r.add_term(e, s * c);
    return r;
}

inline HomForm operator*(const HomForm& a, const HomForm& b) {
    HomForm r(a.ctx(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms())
            r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
}

inline HomForm form_pow(const HomForm& a, int k) {
    HomForm r(a.ctx(), 0);
    r.add_term({0, 0, 0}, one(a.ctx()));
    for (int i = 0; i < k; ++i) r = r * a;
    return r;
}

/// Formal partial derivative with respect to variable 0, 1 or 2.
inline HomForm partial(const HomForm& f, int var) {
    HomForm r(f.ctx(), f.degree() - 1);
    for (const auto& [e, c] : f.terms()) {
        if (e[static_cast<std::size_t>(var)] == 0) continue;
        Expo d = e;
        --d[static_cast<std::size_t>(var)];
        r.add_term(d, from_int(f.ctx(), e[static_cast<std::size_t>(var)]) * c);
    }
    return r;
}

inline std::array<HomForm, 3> partials(const HomForm& f) {
    return {partial(f, 0), partial(f, 1), partial(f, 2)};
}

inline HomForm embed_form(const HomForm& f, const FieldCtxPtr& ext) {
    HomForm r(ext, f.degree());
    for (const auto& [e, c] : f.terms()) r.add_term(e, embed(c, ext));
    return r;
}

/// Evaluation at literal (non-normalized) coordinates; coefficients are
/// embedded into the coordinates' field.
inline FieldElem eval_at(const HomForm& f, const std::array<FieldElem, 3>& xyz) {
    const FieldCtxPtr& K = xyz[0].ctx();
    FieldElem acc = zero(K);
    for (const auto& [e, c] : f.terms()) {
        FieldElem t = embed(c, K);
        for (int v = 0; v < 3; ++v)
            if (e[static_cast<std::size_t>(v)] > 0) t = t * pow(xyz[static_cast<std::size_t>(v)], e[static_cast<std::size_t>(v)]);
        acc = acc + t;
    }
    return acc;
}

/// Evaluation at a projective point (the stored normalized representative);
/// the point may live over any extension in the tower. For homogeneous f
/// only the zero/nonzero outcome is projectively meaningful.
inline FieldElem eval(const HomForm& f, const ProjPoint& pt) {
    return eval_at(f, {pt[0], pt[1], pt[2]});
}

/// Substitution x_i -> sum_j B_ij x_j applied term by term.
inline HomForm substitute_linear(const HomForm& f, const Mat& b) {
    const FieldCtxPtr& K = f.ctx();
    std::array<HomForm, 3> lin = {HomForm(K, 1), HomForm(K, 1), HomForm(K, 1)};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Expo e = {0, 0, 0};
            e[static_cast<std::size_t>(j)] = 1;
            lin[static_cast<std::size_t>(i)].add_term(e, b.at(i, j));
        }
    HomForm r(K, f.degree());
    for (const auto& [e, c] : f.terms()) {
        HomForm t(K, 0);
        t.add_term({0, 0, 0}, c);
        for (int v = 0; v < 3; ++v)
            for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) t = t * lin[static_cast<std::size_t>(v)];
        r = r + t;
    }
    return r;
}

/// Exact division by a nonzero linear form; nullopt when not divisible.
inline std::optional<HomForm> divide_by_linear(const HomForm& f, const HomForm& line) {
    if (line.degree() != 1 || line.is_zero()) throw std::invalid_argument("divisor must be a nonzero linear form");
    int pivot = -1;
    FieldElem pc = zero(f.ctx());
    for (const auto& [e, c] : line.terms())
        for (int v = 2; v >= 0; --v)
            if (e[static_cast<std::size_t>(v)] == 1 && (pivot < 0 || v > pivot)) {
                pivot = v;
                pc = c;
            }
    const FieldElem pc_inv = inv(pc);
    HomForm rem = f;
    HomForm quot(f.ctx(), f.degree() - 1);
    while (true) {
        // Highest pivot-variable exponent still present.
        const std::map<Expo, FieldElem>& ts = rem.terms();
        Expo best = {-1, -1, -1};
        for (const auto& [e, c] : ts)
            if (e[static_cast<std::size_t>(pivot)] > 0 &&
                (best[0] < 0 || e[static_cast<std::size_t>(pivot)] > best[static_cast<std::size_t>(pivot)]))
                best = e;
        if (best[0] < 0) break;
        const FieldElem c = rem.coeff(best);
        Expo qe = best;
        --qe[static_cast<std::size_t>(pivot)];
        const FieldElem qc = c * pc_inv;
        quot.add_term(qe, qc);
        for (const auto& [le, lc] : line.terms())
            rem.add_term({qe[0] + le[0], qe[1] + le[1], qe[2] + le[2]}, neg(qc * lc));
    }
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

// ---------------------------------------------------------------------------
// The forms of the plane-filling theory

/// (U, V, W) of degree q+1 over ctx = F_q.
inline std::array<HomForm, 3> uvw(const FieldCtxPtr& ctx) {
    const int q = static_cast<int>(ctx->size());
    const FieldElem o = one(ctx);
    HomForm U(ctx, q + 1), V(ctx, q + 1), W(ctx, q + 1);
    U.add_term({0, q, 1}, o);
    U.add_term({0, 1, q}, neg(o));
    V.add_term({1, 0, q}, o);
    V.add_term({q, 0, 1}, neg(o));
    W.add_term({q, 1, 0}, o);
    W.add_term({1, q, 0}, neg(o));
    return {U, V, W};
}

/// F_A = (x,y,z) A (U,V,W)^t, the generic member of the degree-(q+2) piece
/// of the vanishing ideal. Linear in A; zero exactly for scalar A.
inline HomForm build_FA(const Mat& a) {
    if (a.n() != 3) throw std::invalid_argument("build_FA requires a 3x3 matrix");
    const FieldCtxPtr& K = a.ctx();
    const auto gens = uvw(K);
    const int q = static_cast<int>(K->size());
    HomForm r(K, q + 2);
    for (int j = 0; j < 3; ++j) {
        HomForm lj(K, 1);
        for (int i = 0; i < 3; ++i) {
            Expo e = {0, 0, 0};
            e[static_cast<std::size_t>(i)] = 1;
            lj.add_term(e, a.at(i, j));
        }
        r = r + lj * gens[static_cast<std::size_t>(j)];
    }
    return r;
}

/// True exactly when A is a scalar matrix; cross-checked against literal
/// cancellation of the polynomial.
inline bool is_zero_form(const Mat& a) {
    const bool scalar = is_scalar_matrix(a);
    const bool null_poly = build_FA(a).is_zero();
    if (scalar != null_poly) throw Error("zero-form criterion disagrees with expansion");
    return null_poly;
}

/// M = det(B) * transpose(B^-1), verified symbolically to satisfy the
/// covariance (U,V,W)^t = M (U',V',W')^t under (x,y,z) = B (x',y',z').
inline Mat pullback_uvw(const Mat& b) {
    if (b.n() != 3) throw std::invalid_argument("pullback_uvw requires a 3x3 matrix");
    const Mat m = det(b) * transpose(inverse(b));
    const auto gens = uvw(b.ctx());
    for (int i = 0; i < 3; ++i) {
        HomForm expect(b.ctx(), gens[0].degree());
        for (int j = 0; j < 3; ++j) expect = expect + m.at(i, j) * gens[static_cast<std::size_t>(j)];
        if (substitute_linear(gens[static_cast<std::size_t>(i)], b) != expect)
            throw Error("cofactor covariance identity failed");
    }
    return m;
}

// ---------------------------------------------------------------------------
// Per-degree linear algebra of the vanishing ideal

inline std::vector<Expo> monomials_of_degree(int d) {
    std::vector<Expo> out;
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d - i; ++j) out.push_back({i, j, d - i - j});
    return out;
}

/// Dimensions in degree d of (a) the span of all monomial multiples of
/// U, V, W and (b) the space of forms vanishing on every point of P^2(F_q).
/// The two agree exactly when the ideal is generated by U, V, W in that
/// degree.
inline std::pair<int, int> ideal_dimensions(const FieldCtxPtr& ctx, int d) {
    const auto monos = monomials_of_degree(d);
    std::map<Expo, int> col_of;
    for (std::size_t i = 0; i < monos.size(); ++i) col_of[monos[i]] = static_cast<int>(i);

    // Vanishing side: kernel of evaluation at the rational points.
    const auto pts = proj_points(3, ctx);
    std::vector<std::vector<FieldElem>> eval_rows;
    for (const auto& p : pts) {
        std::vector<FieldElem> row;
        row.reserve(monos.size());
        for (const auto& e : monos) {
            FieldElem v = one(ctx);
            for (int var = 0; var < 3; ++var)
                if (e[static_cast<std::size_t>(var)] > 0) v = v * pow(p[var], e[static_cast<std::size_t>(var)]);
            row.push_back(v);
        }
        eval_rows.push_back(std::move(row));
    }
    const int dim_vanishing = static_cast<int>(monos.size()) - rank_of(std::move(eval_rows), ctx);

    // Ideal side: span of monomial multiples of the three generators.
    const auto gens = uvw(ctx);
    const int gen_deg = gens[0].degree();
    std::vector<std::vector<FieldElem>> ideal_rows;
    if (d >= gen_deg) {
        for (const auto& g : gens)
            for (const auto& mu : monomials_of_degree(d - gen_deg)) {
                std::vector<FieldElem> row(monos.size(), zero(ctx));
                for (const auto& [e, c] : g.terms())
                    row[static_cast<std::size_t>(col_of[{e[0] + mu[0], e[1] + mu[1], e[2] + mu[2]}])] = c;
                ideal_rows.push_back(std::move(row));
            }
    }
    const int dim_ideal = ideal_rows.empty() ? 0 : rank_of(std::move(ideal_rows), ctx);
    return {dim_ideal, dim_vanishing};
}

// ---------------------------------------------------------------------------
// Pencil members a1 U + a2 V + a3 W

struct PencilReport {
    ProjPoint singular_point;
    std::vector<HomForm> lines;  // q+1 linear factors; their product equals the form
};

/// A nonzero pencil member splits into q+1 rational lines through its unique
/// singular point (a1, a2, a3). The factorization is recovered by scanning
/// the q+1 lines through the point and dividing; the product of the returned
/// factors reproduces the form exactly.
inline PencilReport pencil_analysis(const FieldElem& a1, const FieldElem& a2, const FieldElem& a3) {
    const FieldCtxPtr& K = a1.ctx();
    if (a1.is_zero() && a2.is_zero() && a3.is_zero())
        throw std::invalid_argument("pencil coefficients must not all vanish");
    const auto gens = uvw(K);
    HomForm f = a1 * gens[0] + a2 * gens[1] + a3 * gens[2];
    ProjPoint s(std::vector<FieldElem>{a1, a2, a3});

    std::vector<HomForm> lines;
    for (const auto& dual : proj_points(3, K)) {
        FieldElem at_s = dual[0] * s[0] + dual[1] * s[1] + dual[2] * s[2];
        if (!at_s.is_zero()) continue;
        HomForm line(K, 1);
        line.add_term({1, 0, 0}, dual[0]);
        line.add_term({0, 1, 0}, dual[1]);
        line.add_term({0, 0, 1}, dual[2]);
        auto quot = divide_by_linear(f, line);
        if (!quot) throw Error("pencil member not divisible by a line through its singular point");
        f = std::move(*quot);
        lines.push_back(std::move(line));
    }
    if (f.degree() != 0 || f.is_zero()) throw Error("pencil member is not a product of rational lines");
    if (lines.empty()) throw Error("no lines found through the singular point");
    // Fold the residual constant into the first factor so the product is exact.
    lines[0] = f.coeff({0, 0, 0}) * lines[0];
    return PencilReport{std::move(s), std::move(lines)};
}

/// Deterministic printing: terms "coeff*x^i*y^j*z^k" in lexicographic
/// exponent order.
inline std::string to_string(const HomForm& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : f.terms()) {
        if (!s.empty()) s += " + ";
        s += to_string(c) + "*x^" + std::to_string(e[0]) + "*y^" + std::to_string(e[1]) + "*z^" +
             std::to_string(e[2]);
    }
    return s;
}

}  // namespace fillcurve
