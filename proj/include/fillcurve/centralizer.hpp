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
#include <utility>
#include <vector>

#include "fillcurve/ffield.hpp"
#include "fillcurve/linalg.hpp"

/// Centralizers in GL(n, F_q) of a matrix A0 with irreducible characteristic
/// polynomial f, their images in PGL(n, F_q), and the twisted-commutation
/// criterion A0 B = rho B A0.
///
/// The centralizer is realized as the unit group of F_q[A0] = F_q[t]/(f):
/// a generator is g(A0) for g a primitive element of the quotient ring, so
/// no eigen-decomposition over the splitting field is ever needed. Nonzero
/// solutions of the twisted commutation systems are provably invertible
/// (an irreducible characteristic polynomial leaves no proper invariant
/// subspace), and the code checks this at runtime instead of assuming it.

namespace fillcurve {

/// PGL representative: first nonzero entry in row-major order scaled to 1.
inline Mat pgl_normalize(const Mat& m) {
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j)
            if (!m.at(i, j).is_zero()) return inv(m.at(i, j)) * m;
    throw std::invalid_argument("cannot normalize the zero matrix");
}

/// Least s >= 1 with m^s scalar, i.e. the order of the image in PGL.
inline std::int64_t pgl_order(const Mat& m) {
    Mat cur = m;
    for (std::int64_t s = 1; s <= m.ctx()->size() * m.ctx()->size() * m.ctx()->size(); ++s) {
        if (is_scalar_matrix(cur)) return s;
        cur = cur * m;
    }
    throw Error("pgl_order did not terminate");
}

namespace detail {

// Elements of F_q[t]/(f) as coefficient vectors over F_q, low degree first.
struct QuotientRing {
    MonicPoly f;

    explicit QuotientRing(MonicPoly modulus) : f(std::move(modulus)) {}

    int n() const { return f.degree(); }
    const FieldCtxPtr& K() const { return f.ctx(); }

    std::vector<FieldElem> one() const {
        std::vector<FieldElem> r(static_cast<std::size_t>(n()), zero(K()));
        r[0] = fillcurve::one(K());
        return r;
    }

    std::vector<FieldElem> mul(const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) const {
        const int d = n();
        std::vector<FieldElem> buf(static_cast<std::size_t>(2 * d - 1), zero(K()));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                buf[static_cast<std::size_t>(i + j)] =
                    buf[static_cast<std::size_t>(i + j)] + a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
        for (int i = 2 * d - 2; i >= d; --i) {
            const FieldElem lead = buf[static_cast<std::size_t>(i)];
            if (lead.is_zero()) continue;
            for (int j = 0; j < d; ++j)
                buf[static_cast<std::size_t>(i - d + j)] =
                    buf[static_cast<std::size_t>(i - d + j)] - lead * f.tail_coeff(j);
            buf[static_cast<std::size_t>(i)] = zero(K());
        }
        buf.resize(static_cast<std::size_t>(d), zero(K()));
        return buf;
    }

    std::vector<FieldElem> pow(std::vector<FieldElem> base, std::int64_t k) const {
        std::vector<FieldElem> r = one();
        while (k > 0) {
            if (k & 1) r = mul(r, base);
            base = mul(base, base);
            k >>= 1;
        }
        return r;
    }

    /// Element with the given enumeration index, first coefficient most
    /// significant (the same convention as field elements).
    std::vector<FieldElem> element_at(std::int64_t index) const {
        std::vector<FieldElem> r(static_cast<std::size_t>(n()), zero(K()));
        for (int j = n() - 1; j >= 0; --j) {
            r[static_cast<std::size_t>(j)] = fillcurve::element_at(K(), index % K()->size());
            index /= K()->size();
        }
        return r;
    }
};

inline bool ring_is_one(const QuotientRing& ring, const std::vector<FieldElem>& a) {
    return a == ring.one();
}

}  // namespace detail

/// B0 in the centralizer of A0 with multiplicative order exactly q^n - 1:
/// the image under g -> g(A0) of the first primitive element of F_q[t]/(f).
inline Mat centralizer_generator(const Mat& a0) {
    const MonicPoly f = char_poly(a0);
    if (!is_irreducible(f)) throw std::invalid_argument("characteristic polynomial is reducible");
    const FieldCtxPtr& K = a0.ctx();
    const int n = a0.n();
    const detail::QuotientRing ring(f);
    std::int64_t Q = 1;
    for (int i = 0; i < n; ++i) Q *= K->size();
    const auto primes = detail::prime_factors(Q - 1);

    std::vector<FieldElem> g;
    for (std::int64_t i = 1; i < Q; ++i) {
        auto cand = ring.element_at(i);
        bool ok = true;
        for (std::int64_t ell : primes)
            if (detail::ring_is_one(ring, ring.pow(cand, (Q - 1) / ell))) {
                ok = false;
                break;
            }
        if (ok) {
            g = std::move(cand);
            break;
        }
    }
    if (g.empty()) throw Error("no primitive element in the quotient ring");

    Mat b0(K, n);
    Mat apow = Mat::identity(K, n);
    for (int i = 0; i < n; ++i) {
        b0 = b0 + g[static_cast<std::size_t>(i)] * apow;
        apow = apow * a0;
    }
    if (b0 * a0 != a0 * b0) throw Error("generator does not commute with A0");
    if (mat_pow(b0, Q - 1) != Mat::identity(K, n)) throw Error("generator order exceeds q^n - 1");
    for (std::int64_t ell : primes)
        if (mat_pow(b0, (Q - 1) / ell) == Mat::identity(K, n)) throw Error("generator order below q^n - 1");
    return b0;
}

namespace detail {

/// All invertible solutions of A0 X = rho X A0, or empty when none exist.
/// The solution space is asserted to have dimension 0 or n, and every
/// nonzero solution is checked to be invertible.
inline std::vector<Mat> twisted_commutant(const Mat& a0, const FieldElem& rho) {
    const FieldCtxPtr& K = a0.ctx();
    const int n = a0.n();
    const auto basis = sylvester_nullspace(a0, neg(rho) * a0);  // A0 X - rho X A0 = 0
    if (basis.empty()) return {};
    if (static_cast<int>(basis.size()) != n) throw Error("twisted commutant has unexpected dimension");
    std::vector<Mat> out;
    std::vector<std::int64_t> odo(basis.size(), 0);
    while (true) {
        bool all_zero = true;
        for (auto v : odo)
            if (v != 0) all_zero = false;
        if (!all_zero) {
            Mat x(K, n);
            for (std::size_t i = 0; i < basis.size(); ++i)
                x = x + element_at(K, odo[i]) * basis[i];
            if (det(x).is_zero()) throw Error("nonzero twisted-commutant element is singular");
            out.push_back(std::move(x));
        }
        int pos = static_cast<int>(odo.size()) - 1;
        while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == K->size()) odo[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
    return out;
}

}  // namespace detail

/// |Z_{GL(n,q)}(A0)| = q^n - 1, counted honestly from the commutant.
inline std::int64_t centralizer_order(const Mat& a0) {
    if (!is_irreducible(char_poly(a0))) throw std::invalid_argument("characteristic polynomial is reducible");
    const auto elems = detail::twisted_commutant(a0, one(a0.ctx()));
    std::int64_t Q = 1;
    for (int i = 0; i < a0.n(); ++i) Q *= a0.ctx()->size();
    if (static_cast<std::int64_t>(elems.size()) != Q - 1) throw Error("centralizer order is not q^n - 1");
    return static_cast<std::int64_t>(elems.size());
}

/// Order (q^n - 1)/(q - 1) of the centralizer's image in PGL, counted as
/// distinct normalized representatives.
inline std::int64_t pgl_image_order(const Mat& a0) {
    if (!is_irreducible(char_poly(a0))) throw std::invalid_argument("characteristic polynomial is reducible");
    std::set<Mat> reps;
    for (const auto& x : detail::twisted_commutant(a0, one(a0.ctx()))) reps.insert(pgl_normalize(x));
    std::int64_t Q = 1;
    for (int i = 0; i < a0.n(); ++i) Q *= a0.ctx()->size();
    if (static_cast<std::int64_t>(reps.size()) != (Q - 1) / (a0.ctx()->size() - 1))
        throw Error("PGL image order is not (q^n - 1)/(q - 1)");
    return static_cast<std::int64_t>(reps.size());
}

/// The scalars rho for which A0 B = rho B A0 admits an invertible solution.
/// They form a cyclic subgroup of F_q^x (checked).
inline std::vector<FieldElem> solvable_rhos(const Mat& a0) {
    if (!is_irreducible(char_poly(a0))) throw std::invalid_argument("characteristic polynomial is reducible");
    const FieldCtxPtr& K = a0.ctx();
    std::vector<FieldElem> out;
    for (std::int64_t ri = 1; ri < K->size(); ++ri) {
        const FieldElem rho = element_at(K, ri);
        if (!detail::twisted_commutant(a0, rho).empty()) out.push_back(rho);
    }
    // Subgroup sanity: closed under product and inverse.
    auto contains = [&](const FieldElem& x) {
        for (const auto& y : out)
            if (y == x) return true;
        return false;
    };
    for (const auto& x : out)
        for (const auto& y : out)
            if (!contains(x * y) || !contains(inv(x))) throw Error("solvable scalars do not form a subgroup");
    return out;
}

/// k = |Im pi|: the number of solvable scalars.
inline int pi_image_order(const Mat& a0) { return static_cast<int>(solvable_rhos(a0).size()); }

/// Largest k > 1 with k | n, q = 1 mod k, and vanishing coefficients at all
/// exponents not divisible by k; nullopt when no such k exists.
inline std::optional<int> support_condition(const MonicPoly& f) {
    const int n = f.degree();
    const std::int64_t q = f.ctx()->size();
    for (int k = n; k >= 2; --k) {
        if (n % k != 0 || (q - 1) % k != 0) continue;
        bool ok = true;
        for (int i = 0; i < n; ++i)
            if (i % k != 0 && !f.tail_coeff(i).is_zero()) ok = false;
        if (ok) return k;
    }
    return std::nullopt;
}

/// The diagonal witness diag(1, rho, ..., rho^{n-1}) with A0 B = rho B A0,
/// for A0 the bottom-row companion of its characteristic polynomial and rho
/// a primitive k-th root of unity for the support-condition k.
inline Mat diag_witness(const FieldElem& rho, const Mat& a0) {
    const MonicPoly f = char_poly(a0);
    if (a0 != companion(f, CompanionShape::BottomRow))
        throw std::invalid_argument("diag_witness requires the bottom-row companion layout");
    const auto k = support_condition(f);
    if (!k) throw std::invalid_argument("support condition does not hold for this polynomial");
    const FieldCtxPtr& K = a0.ctx();
    if (pow(rho, *k) != one(K)) throw std::invalid_argument("rho is not a k-th root of unity");
    for (int j = 1; j < *k; ++j)
        if (pow(rho, j) == one(K)) throw std::invalid_argument("rho is not a primitive k-th root of unity");
    const int n = a0.n();
    Mat b(K, n);
    for (int i = 0; i < n; ++i) b.at(i, i) = pow(rho, i);
    if (a0 * b != rho * (b * a0)) throw Error("diagonal witness identity failed");
    return b;
}

/// Structured verification record for one matrix: the general-n centralizer
/// quantities, each computed by independent enumeration and tied together
/// by the product law |Z_PGL| = pgl_image_order * k.
struct CentralizerReport {
    int n = 0;
    std::int64_t q = 0;
    MonicPoly poly;
    std::int64_t z_gl_order = 0;
    std::int64_t z_pgl_order = 0;
    std::int64_t pgl_image_order = 0;
    int pi_image_order = 0;
    std::optional<int> support_k;
    bool support_condition_holds = false;
    Mat generator;

    CentralizerReport(MonicPoly p, Mat gen) : poly(std::move(p)), generator(std::move(gen)) {}
};

inline CentralizerReport centralizer_report(const Mat& a0) {
    const MonicPoly f = char_poly(a0);
    if (!is_irreducible(f)) throw std::invalid_argument("characteristic polynomial is reducible");
    CentralizerReport r(f, centralizer_generator(a0));
    r.n = a0.n();
    r.q = a0.ctx()->size();
    r.z_gl_order = centralizer_order(a0);
    r.pgl_image_order = fillcurve::pgl_image_order(a0);
    r.pi_image_order = 0;
    std::set<Mat> z_pgl;
    for (std::int64_t ri = 1; ri < a0.ctx()->size(); ++ri) {
        const FieldElem rho = element_at(a0.ctx(), ri);
        const auto sols = detail::twisted_commutant(a0, rho);
        if (sols.empty()) continue;
        ++r.pi_image_order;
        for (const auto& x : sols) z_pgl.insert(pgl_normalize(x));
    }
    r.z_pgl_order = static_cast<std::int64_t>(z_pgl.size());
    r.support_k = support_condition(f);
    r.support_condition_holds = r.support_k.has_value();
    if (r.z_pgl_order != r.pgl_image_order * r.pi_image_order)
        throw Error("centralizer orders violate the product law");
    if ((r.pi_image_order > 1) != r.support_condition_holds)
        throw Error("support condition disagrees with the measured image order");
    return r;
}

}  // namespace fillcurve
