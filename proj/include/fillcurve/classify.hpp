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
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fillcurve/ffield.hpp"
#include "fillcurve/linalg.hpp"

/// Classification of the nonsingular degree-(q+2) curves, which reduces to
/// classifying monic irreducible cubics under the substitutions
///
///   f(t)  ~  rho^3 f((t - mu)/rho),   rho in F_q^x, mu in F_q.
///
/// Orbits are enumerated exhaustively; canonical representatives are the
/// lexicographically smallest (c,b,a) tuples. The classical normal forms
/// are reported as labels on each orbit.

namespace fillcurve {

/// The monic cubic t^3 - (c t^2 + b t + a). Note the sign convention: the
/// stored triple is subtracted, matching the characteristic polynomials of
/// the curve matrices.
struct Cubic {
    FieldElem c, b, a;

    const FieldCtxPtr& ctx() const { return c.ctx(); }
    friend bool operator==(const Cubic& x, const Cubic& y) { return x.c == y.c && x.b == y.b && x.a == y.a; }
    friend bool operator!=(const Cubic& x, const Cubic& y) { return !(x == y); }
    friend bool operator<(const Cubic& x, const Cubic& y) {
        if (x.c != y.c) return x.c < y.c;
        if (x.b != y.b) return x.b < y.b;
        return x.a < y.a;
    }
};

inline MonicPoly cubic_to_poly(const Cubic& f) {
    return MonicPoly(f.ctx(), {neg(f.a), neg(f.b), neg(f.c)});
}

inline Cubic cubic_of_poly(const MonicPoly& f) {
    if (f.degree() != 3) throw std::invalid_argument("cubic expected");
    return Cubic{neg(f.tail_coeff(2)), neg(f.tail_coeff(1)), neg(f.tail_coeff(0))};
}

inline bool is_irreducible(const Cubic& f) { return is_irreducible(cubic_to_poly(f)); }

/// Curve3 companion of the cubic: the matrix behind the canonical curve.
inline Mat companion3(const Cubic& f) { return companion(cubic_to_poly(f), CompanionShape::Curve3); }

/// All q^3 cubics in lexicographic (c,b,a) order.
inline std::vector<Cubic> enumerate_cubics(const FieldCtxPtr& ctx) {
    std::vector<Cubic> out;
    const std::int64_t Q = ctx->size();
    out.reserve(static_cast<std::size_t>(Q * Q * Q));
    for (std::int64_t ci = 0; ci < Q; ++ci)
        for (std::int64_t bi = 0; bi < Q; ++bi)
            for (std::int64_t ai = 0; ai < Q; ++ai)
                out.push_back(Cubic{element_at(ctx, ci), element_at(ctx, bi), element_at(ctx, ai)});
    return out;
}

inline std::string to_string(const Cubic& f) {
    return "t^3-(" + to_string(f.c) + "*t^2+" + to_string(f.b) + "*t+" + to_string(f.a) + ")";
}

/// rho^3 f((t - mu)/rho), expanded to a monic cubic over F_q.
inline Cubic substitute(const Cubic& f, const FieldElem& rho, const FieldElem& mu) {
    if (rho.is_zero()) throw std::invalid_argument("rho must be nonzero");
    const FieldCtxPtr& K = f.ctx();
    // (t - mu)^k expansions, low degree first.
    using P = std::vector<FieldElem>;
    const P tm = {neg(mu), one(K)};
    auto pmul = [&](const P& x, const P& y) {
        P r(x.size() + y.size() - 1, zero(K));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y.size(); ++j) r[i + j] = r[i + j] + x[i] * y[j];
        return r;
    };
    const P tm2 = pmul(tm, tm);
    const P tm3 = pmul(tm2, tm);
    P g(4, zero(K));
    for (std::size_t i = 0; i < 4; ++i) g[i] = tm3[i];
    const FieldElem rc = neg(f.c) * rho;
    for (std::size_t i = 0; i < 3; ++i) g[i] = g[i] + rc * tm2[i];
    const FieldElem rb = neg(f.b) * rho * rho;
    for (std::size_t i = 0; i < 2; ++i) g[i] = g[i] + rb * tm[i];
    g[0] = g[0] + neg(f.a) * rho * rho * rho;
    if (g[3] != one(K)) throw Error("substitution lost monicity");
    return Cubic{neg(g[2]), neg(g[1]), neg(g[0])};
}

/// First witness (rho, mu) with substitute(g, rho, mu) == f, searching all
/// q(q-1) pairs in enumeration order; nullopt when the cubics are not
/// equivalent.
inline std::optional<std::pair<FieldElem, FieldElem>> equivalent(const Cubic& f, const Cubic& g) {
    const FieldCtxPtr& K = f.ctx();
    for (std::int64_t ri = 1; ri < K->size(); ++ri) {
        const FieldElem rho = element_at(K, ri);
        for (std::int64_t mi = 0; mi < K->size(); ++mi) {
            const FieldElem mu = element_at(K, mi);
            if (substitute(g, rho, mu) == f) return std::make_pair(rho, mu);
        }
    }
    return std::nullopt;
}

/// The full substitution orbit of f, sorted by (c,b,a).
inline std::vector<Cubic> orbit(const Cubic& f) {
    const FieldCtxPtr& K = f.ctx();
    std::set<Cubic> out;
    for (std::int64_t ri = 1; ri < K->size(); ++ri)
        for (std::int64_t mi = 0; mi < K->size(); ++mi)
            out.insert(substitute(f, element_at(K, ri), element_at(K, mi)));
    return std::vector<Cubic>(out.begin(), out.end());
}

namespace detail {

inline bool is_square(const FieldElem& b) {
    for (std::int64_t i = 0; i < b.ctx()->size(); ++i) {
        const FieldElem x = element_at(b.ctx(), i);
        if (x * x == b) return true;
    }
    return false;
}

inline bool is_char3_power(std::int64_t q) {
    while (q % 3 == 0) q /= 3;
    return q == 1;
}

}  // namespace detail

/// Normal-form labels for the orbit of an irreducible cubic:
///   form_i   : the orbit contains t^3 - a t - a;
///   form_ii  : q = 1 mod 3 and the orbit contains t^3 - a;
///   form_iii : q = 3^e and the orbit contains t^3 - (c t^2 - 1), i.e. a
///              cubic t^3 + c' t^2 + 1 (b = 0, a = -1);
///   generic  : none of the above occurs in the orbit.
inline std::set<std::string> tallini_label(const Cubic& f) {
    if (!is_irreducible(f)) throw std::invalid_argument("cubic is reducible");
    const FieldCtxPtr& K = f.ctx();
    const std::int64_t q = K->size();
    std::set<std::string> labels;
    const FieldElem minus_one = neg(one(K));
    for (const Cubic& g : orbit(f)) {
        if (g.c.is_zero() && g.b == g.a) labels.insert("form_i");
        if (q % 3 == 1 && g.c.is_zero() && g.b.is_zero()) labels.insert("form_ii");
        if (detail::is_char3_power(q) && g.b.is_zero() && g.a == minus_one) labels.insert("form_iii");
    }
    if (labels.empty()) labels.insert("generic");
    return labels;
}

/// The two special cases behind a nontrivial automorphism quotient:
///   case_i  : q = 1 mod 3 and the orbit contains some t^3 - a;
///   case_ii : q = 3^e and f = t^3 - (b t + a) with b a nonzero square.
struct SpecialCases {
    bool case_i = false;
    bool case_ii = false;
};

inline SpecialCases special_case_detect(const Cubic& f) {
    if (!is_irreducible(f)) throw std::invalid_argument("cubic is reducible");
    const std::int64_t q = f.ctx()->size();
    SpecialCases out;
    if (q % 3 == 1)
        for (const Cubic& g : orbit(f))
            if (g.c.is_zero() && g.b.is_zero()) {
                out.case_i = true;
                break;
            }
    if (detail::is_char3_power(q) && f.c.is_zero() && !f.b.is_zero() && detail::is_square(f.b))
        out.case_ii = true;
    return out;
}

// ---------------------------------------------------------------------------
// Orbit partition

struct ClassInfo {
    Cubic representative;  // lexicographically smallest member
    std::int64_t size = 0;
    std::set<std::string> labels;
};

struct ClassReport {
    std::int64_t q = 0;
    std::int64_t irreducible_count = 0;  // (q^3 - q)/3
    std::vector<ClassInfo> classes;
};

/// Partition of all monic irreducible cubics into substitution orbits.
inline ClassReport classes(const FieldCtxPtr& ctx) {
    ClassReport report;
    report.q = ctx->size();
    std::set<Cubic> seen;
    std::int64_t total = 0;
    for (const Cubic& f : enumerate_cubics(ctx)) {
        if (!is_irreducible(f)) continue;
        ++total;
        if (seen.count(f)) continue;
        const auto orb = orbit(f);
        ClassInfo info;
        info.representative = orb.front();
        info.size = static_cast<std::int64_t>(orb.size());
        info.labels = tallini_label(f);
        for (const Cubic& g : orb) seen.insert(g);
        report.classes.push_back(std::move(info));
    }
    report.irreducible_count = total;
    const std::int64_t q = report.q;
    if (total != (q * q * q - q) / 3) throw Error("irreducible cubic count is off");
    std::int64_t covered = 0;
    for (const auto& cl : report.classes) covered += cl.size;
    if (covered != total) throw Error("orbits do not partition the irreducible cubics");
    return report;
}

// ---------------------------------------------------------------------------
// Curve-level equivalence

namespace detail {

/// Brute-force search for T in GL(3, F_q) and scalars with
/// tT A tT^-1 = rho B + mu E.
inline bool gl_equivalence_search(const Mat& A, const Mat& B) {
    const FieldCtxPtr& K = A.ctx();
    const Mat E = Mat::identity(K, 3);
    bool found = false;
    for_each_gl(K, 3, [&](const Mat& T) {
        if (found) return;
        const Mat tT = transpose(T);
        const Mat M = tT * A * inverse(tT);
        for (std::int64_t ri = 1; ri < K->size() && !found; ++ri)
            for (std::int64_t mi = 0; mi < K->size() && !found; ++mi) {
                const Mat rhs = element_at(K, ri) * B + element_at(K, mi) * E;
                if (M == rhs) found = true;
            }
    });
    return found;
}

}  // namespace detail

/// Projective equivalence of the curves of two matrices with irreducible
/// characteristic polynomials; decided through the cubic substitution
/// criterion and, for q <= 3, cross-checked against the explicit search
/// over GL(3, F_q).
inline bool curves_equivalent(const Mat& A, const Mat& B) {
    const MonicPoly fa = char_poly(A), fb = char_poly(B);
    if (!is_irreducible(fa) || !is_irreducible(fb))
        throw std::invalid_argument("curves_equivalent requires irreducible characteristic polynomials");
    const bool by_cubic = equivalent(cubic_of_poly(fa), cubic_of_poly(fb)).has_value();
    if (A.ctx()->size() <= 3) {
        const bool by_search = detail::gl_equivalence_search(A, B);
        if (by_search != by_cubic) throw Error("cubic criterion disagrees with the GL search");
    }
    return by_cubic;
}

}  // namespace fillcurve
