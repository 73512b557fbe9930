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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fillcurve/ffield.hpp"

/// Exact matrix algebra over a FieldCtx: products, inverses, determinants,
/// cofactors, characteristic polynomials, companion matrices, eigen-points
/// over the splitting field, and enumeration of projective points.

namespace fillcurve {

class Mat {
  public:
    Mat(FieldCtxPtr ctx, int n) : ctx_(std::move(ctx)), n_(n), e_(static_cast<std::size_t>(n) * n, zero(ctx_)) {}

    static Mat identity(const FieldCtxPtr& ctx, int n) {
        Mat m(ctx, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = one(ctx);
        return m;
    }

    int n() const { return n_; }
    const FieldCtxPtr& ctx() const { return ctx_; }
    FieldElem& at(int i, int j) { return e_[static_cast<std::size_t>(i) * n_ + j]; }
    const FieldElem& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * n_ + j]; }

    friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.e_ == b.e_; }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
    friend bool operator<(const Mat& a, const Mat& b) { return a.e_ < b.e_; }

  private:
    FieldCtxPtr ctx_;
    int n_;
    std::vector<FieldElem> e_;
};

inline Mat operator+(const Mat& a, const Mat& b) {
    Mat r(a.ctx(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
    return r;
}

inline Mat operator-(const Mat& a, const Mat& b) {
    Mat r(a.ctx(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
    return r;
}

inline Mat operator*(const Mat& a, const Mat& b) {
    if (a.n() != b.n() || !same_field(a.ctx(), b.ctx()))
        throw std::invalid_argument("matrix dimension or context mismatch");
    Mat r(a.ctx(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int k = 0; k < a.n(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.n(); ++j) r.at(i, j) = r.at(i, j) + a.at(i, k) * b.at(k, j);
        }
    return r;
}

inline Mat operator*(const FieldElem& s, const Mat& a) {
    Mat r(a.ctx(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.at(i, j) = s * a.at(i, j);
    return r;
}

inline Mat transpose(const Mat& a) {
    Mat r(a.ctx(), a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.at(i, j) = a.at(j, i);
    return r;
}

inline FieldElem det(const Mat& a) {
    Mat m = a;
    const int n = m.n();
    FieldElem d = one(m.ctx());
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) return zero(m.ctx());
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = neg(d);
        }
        d = d * m.at(col, col);
        const FieldElem piv_inv = inv(m.at(col, col));
        for (int r = col + 1; r < n; ++r) {
            if (m.at(r, col).is_zero()) continue;
            const FieldElem f = m.at(r, col) * piv_inv;
            for (int j = col; j < n; ++j) m.at(r, j) = m.at(r, j) - f * m.at(col, j);
        }
    }
    return d;
}

inline Mat inverse(const Mat& a) {
    const int n = a.n();
    Mat m = a;
    Mat r = Mat::identity(a.ctx(), n);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!m.at(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw std::invalid_argument("matrix is singular");
        if (pivot != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(r.at(pivot, j), r.at(col, j));
            }
        const FieldElem piv_inv = inv(m.at(col, col));
        for (int j = 0; j < n; ++j) {
            m.at(col, j) = piv_inv * m.at(col, j);
            r.at(col, j) = piv_inv * r.at(col, j);
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            const FieldElem f = m.at(i, col);
            for (int j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - f * m.at(col, j);
                r.at(i, j) = r.at(i, j) - f * r.at(col, j);
            }
        }
    }
    return r;
}

/// Matrix of (i,j)-cofactors, computed from minors so it is defined for
/// singular input as well; satisfies cofactor(B) = det(B) * transpose(B^-1)
/// whenever B is invertible.
inline Mat cofactor_matrix(const Mat& a) {
    const int n = a.n();
    Mat r(a.ctx(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Mat minor(a.ctx(), n - 1);
            for (int r2 = 0, mi = 0; r2 < n; ++r2) {
                if (r2 == i) continue;
                for (int c2 = 0, mj = 0; c2 < n; ++c2) {
                    if (c2 == j) continue;
                    minor.at(mi, mj) = a.at(r2, c2);
                    ++mj;
                }
                ++mi;
            }
            FieldElem v = n == 1 ? one(a.ctx()) : det(minor);
            if ((i + j) % 2 == 1) v = neg(v);
            r.at(i, j) = v;
        }
    return r;
}

inline Mat mat_pow(const Mat& a, std::int64_t k) {
    if (k < 0) return mat_pow(inverse(a), -k);
    Mat r = Mat::identity(a.ctx(), a.n());
    Mat base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

inline bool is_scalar_matrix(const Mat& a) {
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) {
            if (i == j && a.at(i, j) != a.at(0, 0)) return false;
            if (i != j && !a.at(i, j).is_zero()) return false;
        }
    return true;
}

/// Entrywise embedding into an extension field.
inline Mat embed_mat(const Mat& a, const FieldCtxPtr& ext) {
    Mat r(ext, a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) r.at(i, j) = embed(a.at(i, j), ext);
    return r;
}

// ---------------------------------------------------------------------------
// Monic polynomials

/// t^deg + tail[deg-1] t^{deg-1} + ... + tail[0]; the leading 1 is implicit.
class MonicPoly {
  public:
    MonicPoly(FieldCtxPtr ctx, std::vector<FieldElem> tail) : ctx_(std::move(ctx)), tail_(std::move(tail)) {}

    int degree() const { return static_cast<int>(tail_.size()); }
    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<FieldElem>& tail() const { return tail_; }
    const FieldElem& tail_coeff(int i) const { return tail_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const MonicPoly& a, const MonicPoly& b) { return a.tail_ == b.tail_; }
    friend bool operator!=(const MonicPoly& a, const MonicPoly& b) { return !(a == b); }
    friend bool operator<(const MonicPoly& a, const MonicPoly& b) { return a.tail_ < b.tail_; }

    /// Horner evaluation; x may live in an extension of the coefficient field.
    FieldElem eval(const FieldElem& x) const {
        FieldElem acc = one(x.ctx());
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + embed(tail_[static_cast<std::size_t>(i)], x.ctx());
        return acc;
    }

  private:
    FieldCtxPtr ctx_;
    std::vector<FieldElem> tail_;
};

inline std::vector<FieldElem> roots_in(const MonicPoly& f, const FieldCtxPtr& where) {
    std::vector<FieldElem> out;
    for (std::int64_t i = 0; i < where->size(); ++i) {
        const FieldElem x = element_at(where, i);
        if (f.eval(x).is_zero()) out.push_back(x);
    }
    return out;
}

/// Degree <= 3 reduces to a root scan; higher degrees use trial division by
/// monic polynomials of degree <= deg/2 over the coefficient field.
inline bool is_irreducible(const MonicPoly& f) {
    const int d = f.degree();
    if (d <= 1) return d == 1;
    if (d <= 3) return roots_in(f, f.ctx()).empty();
    const FieldCtxPtr& K = f.ctx();
    // Dense polynomial remainder over K, divisor monic of degree dg.
    auto rem_is_zero = [&](const std::vector<FieldElem>& divisor_tail) {
        std::vector<FieldElem> r(f.tail());
        r.push_back(one(K));  // leading coefficient
        const int dg = static_cast<int>(divisor_tail.size());
        for (int i = static_cast<int>(r.size()) - 1; i >= dg; --i) {
            const FieldElem lead = r[static_cast<std::size_t>(i)];
            if (lead.is_zero()) continue;
            r[static_cast<std::size_t>(i)] = zero(K);
            for (int j = 0; j < dg; ++j)
                r[static_cast<std::size_t>(i - dg + j)] =
                    r[static_cast<std::size_t>(i - dg + j)] - lead * divisor_tail[static_cast<std::size_t>(j)];
        }
        for (int j = 0; j < dg; ++j)
            if (!r[static_cast<std::size_t>(j)].is_zero()) return false;
        return true;
    };
    for (int dg = 1; dg <= d / 2; ++dg) {
        std::vector<std::int64_t> odo(static_cast<std::size_t>(dg), 0);
        while (true) {
            std::vector<FieldElem> tail;
            tail.reserve(static_cast<std::size_t>(dg));
            for (int j = 0; j < dg; ++j) tail.push_back(element_at(K, odo[static_cast<std::size_t>(j)]));
            if (rem_is_zero(tail)) return false;
            int pos = dg - 1;
            while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == K->size()) odo[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
        }
    }
    return true;
}

namespace detail {

// Dense polynomial arithmetic over a field, low degree first; only used for
// the characteristic polynomial expansion.
using EPoly = std::vector<FieldElem>;

inline EPoly ep_add(const EPoly& a, const EPoly& b, const FieldCtxPtr& K) {
    EPoly r(std::max(a.size(), b.size()), zero(K));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = r[i] + a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    return r;
}

inline EPoly ep_mul(const EPoly& a, const EPoly& b, const FieldCtxPtr& K) {
    if (a.empty() || b.empty()) return {};
    EPoly r(a.size() + b.size() - 1, zero(K));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    return r;
}

inline EPoly ep_neg(const EPoly& a) {
    EPoly r = a;
    for (auto& v : r) v = neg(v);
    return r;
}

// Laplace expansion along the first row; exact in any characteristic and
// cheap for the n <= 6 sizes used here.
inline EPoly ep_det(const std::vector<std::vector<EPoly>>& m, const FieldCtxPtr& K) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    EPoly acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].empty()) continue;
        std::vector<std::vector<EPoly>> minor(n - 1, std::vector<EPoly>(n - 1));
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, mc = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][mc++] = m[r][c];
            }
        EPoly term = ep_mul(m[0][j], ep_det(minor, K), K);
        if (j % 2 == 1) term = ep_neg(term);
        acc = ep_add(acc, term, K);
    }
    if (acc.empty()) acc.push_back(zero(K));
    return acc;
}

}  // namespace detail

/// det(tE - A), expanded exactly over F_q[t].
inline MonicPoly char_poly(const Mat& a) {
    const int n = a.n();
    const FieldCtxPtr& K = a.ctx();
    std::vector<std::vector<detail::EPoly>> m(static_cast<std::size_t>(n),
                                              std::vector<detail::EPoly>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            detail::EPoly e;
            e.push_back(neg(a.at(i, j)));
            if (i == j) e.push_back(one(K));
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(e);
        }
    detail::EPoly d = detail::ep_det(m, K);
    d.resize(static_cast<std::size_t>(n) + 1, zero(K));
    if (d[static_cast<std::size_t>(n)] != one(K)) throw Error("characteristic polynomial is not monic");
    d.pop_back();
    return MonicPoly(K, std::move(d));
}

enum class CompanionShape { Curve3, BottomRow };

/// Companion matrix of a monic polynomial. Curve3 is the 3x3 layout
/// [[0,0,a],[1,0,b],[0,1,c]] for t^3 - (c t^2 + b t + a); BottomRow is the
/// bottom-row layout with last row (a_0,...,a_{n-1}) where
/// f = t^n - (a_{n-1} t^{n-1} + ... + a_0).
inline Mat companion(const MonicPoly& f, CompanionShape shape) {
    const int n = f.degree();
    if (n < 2) throw std::invalid_argument("companion requires degree >= 2");
    const FieldCtxPtr& K = f.ctx();
    Mat m(K, n);
    if (shape == CompanionShape::Curve3) {
        if (n != 3) throw std::invalid_argument("curve3 companion requires degree 3");
        m.at(1, 0) = one(K);
        m.at(2, 1) = one(K);
        for (int i = 0; i < 3; ++i) m.at(i, 2) = neg(f.tail_coeff(i));
    } else {
        for (int i = 0; i + 1 < n; ++i) m.at(i, i + 1) = one(K);
        for (int j = 0; j < n; ++j) m.at(n - 1, j) = neg(f.tail_coeff(j));
    }
    return m;
}

// ---------------------------------------------------------------------------
// Projective points

/// Point of P^{n-1}, stored with the first nonzero coordinate scaled to 1 so
/// equal points are bit-identical.
class ProjPoint {
  public:
    explicit ProjPoint(std::vector<FieldElem> coords) : c_(std::move(coords)) {
        int lead = -1;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) {
                lead = static_cast<int>(i);
                break;
            }
        if (lead < 0) throw std::invalid_argument("projective point cannot be the zero vector");
        const FieldElem s = inv(c_[static_cast<std::size_t>(lead)]);
        for (auto& v : c_) v = s * v;
    }

    int dim() const { return static_cast<int>(c_.size()); }
    const FieldCtxPtr& ctx() const { return c_[0].ctx(); }
    const FieldElem& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const std::vector<FieldElem>& coords() const { return c_; }

    friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }
    friend bool operator<(const ProjPoint& a, const ProjPoint& b) { return a.c_ < b.c_; }

  private:
    std::vector<FieldElem> c_;
};

inline ProjPoint apply(const Mat& m, const ProjPoint& pt) {
    const FieldCtxPtr& K = pt.ctx();
    const Mat me = same_field(m.ctx(), K) ? m : embed_mat(m, K);
    std::vector<FieldElem> out(static_cast<std::size_t>(m.n()), zero(K));
    for (int i = 0; i < m.n(); ++i)
        for (int j = 0; j < m.n(); ++j) out[static_cast<std::size_t>(i)] =
            out[static_cast<std::size_t>(i)] + me.at(i, j) * pt[j];
    return ProjPoint(std::move(out));
}

/// Coordinatewise q-power map on projective points.
inline ProjPoint frobenius_point(const ProjPoint& pt, std::int64_t q_sub) {
    std::vector<FieldElem> out;
    out.reserve(pt.coords().size());
    for (const auto& c : pt.coords()) out.push_back(frobenius(c, q_sub));
    return ProjPoint(std::move(out));
}

/// All (Q^n - 1)/(Q - 1) normalized points of P^{n-1}(ctx), in lexicographic
/// coordinate order.
inline std::vector<ProjPoint> proj_points(int n, const FieldCtxPtr& ctx) {
    std::vector<ProjPoint> out;
    const std::int64_t Q = ctx->size();
    for (int lead = n - 1; lead >= 0; --lead) {
        const int free = n - 1 - lead;
        std::int64_t combos = 1;
        for (int i = 0; i < free; ++i) combos *= Q;
        for (std::int64_t k = 0; k < combos; ++k) {
            std::vector<FieldElem> c(static_cast<std::size_t>(n), zero(ctx));
            c[static_cast<std::size_t>(lead)] = one(ctx);
            std::int64_t v = k;
            for (int i = n - 1; i > lead; --i) {
                c[static_cast<std::size_t>(i)] = element_at(ctx, v % Q);
                v /= Q;
            }
            out.emplace_back(std::move(c));
        }
    }
    return out;
}

/// The n eigen-points of transpose(A) over the splitting field, ordered so
/// that point i+1 is the coordinatewise q-power of point i.
inline std::vector<ProjPoint> eigen_points(const Mat& a, const FieldCtxPtr& ext) {
    const MonicPoly f = char_poly(a);
    if (!is_irreducible(f)) throw std::invalid_argument("characteristic polynomial is reducible");
    const int n = a.n();
    const std::int64_t q = a.ctx()->size();
    const auto roots = roots_in(f, ext);
    if (roots.empty()) throw std::invalid_argument("extension field does not split the characteristic polynomial");
    const FieldElem lambda = roots.front();
    // Nullspace of (tA - lambda E) over the extension.
    const Mat tA = embed_mat(transpose(a), ext);
    Mat m = tA;
    for (int i = 0; i < n; ++i) m.at(i, i) = m.at(i, i) - lambda;
    // Gaussian elimination to reduced row echelon form.
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (!m.at(r, col).is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(row, j));
        const FieldElem piv_inv = inv(m.at(row, col));
        for (int j = 0; j < n; ++j) m.at(row, j) = piv_inv * m.at(row, j);
        for (int r = 0; r < n; ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            const FieldElem fct = m.at(r, col);
            for (int j = 0; j < n; ++j) m.at(r, j) = m.at(r, j) - fct * m.at(row, j);
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row != n - 1) throw Error("eigen space does not have dimension 1");
    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (std::find(pivot_col.begin(), pivot_col.end(), col) == pivot_col.end()) {
            free_col = col;
            break;
        }
    std::vector<FieldElem> v(static_cast<std::size_t>(n), zero(ext));
    v[static_cast<std::size_t>(free_col)] = one(ext);
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[static_cast<std::size_t>(pivot_col[r])] = neg(m.at(static_cast<int>(r), free_col));
    std::vector<ProjPoint> pts;
    pts.emplace_back(std::move(v));
    for (int i = 1; i < n; ++i) pts.push_back(frobenius_point(pts.back(), q));
    return pts;
}

// ---------------------------------------------------------------------------
// Generic exact linear algebra on rectangular systems

/// Rank of a dense rectangular matrix over the field.
inline int rank_of(std::vector<std::vector<FieldElem>> rows, const FieldCtxPtr&) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pr = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pr = static_cast<int>(r);
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pr)]);
        const FieldElem piv_inv = inv(rows[static_cast<std::size_t>(rank)][col]);
        for (std::size_t j = col; j < cols; ++j)
            rows[static_cast<std::size_t>(rank)][j] = piv_inv * rows[static_cast<std::size_t>(rank)][j];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col].is_zero()) continue;
            const FieldElem f = rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[r][j] = rows[r][j] - f * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

/// Basis of the right nullspace of the given rows (vectors x with M x = 0).
inline std::vector<std::vector<FieldElem>> nullspace(std::vector<std::vector<FieldElem>> rows,
                                                     std::size_t cols, const FieldCtxPtr& K) {
    std::vector<int> pivot_of_col(cols, -1);
    int rank = 0;
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        int pr = -1;
        for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
            if (!rows[r][col].is_zero()) {
                pr = static_cast<int>(r);
                break;
            }
        if (pr < 0) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pr)]);
        const FieldElem piv_inv = inv(rows[static_cast<std::size_t>(rank)][col]);
        for (std::size_t j = 0; j < cols; ++j)
            rows[static_cast<std::size_t>(rank)][j] = piv_inv * rows[static_cast<std::size_t>(rank)][j];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col].is_zero()) continue;
            const FieldElem f = rows[r][col];
            for (std::size_t j = 0; j < cols; ++j)
                rows[r][j] = rows[r][j] - f * rows[static_cast<std::size_t>(rank)][j];
        }
        pivot_of_col[col] = rank;
        ++rank;
    }
    std::vector<std::vector<FieldElem>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (pivot_of_col[fc] >= 0) continue;
        std::vector<FieldElem> v(cols, zero(K));
        v[fc] = one(K);
        for (std::size_t c = 0; c < cols; ++c)
            if (pivot_of_col[c] >= 0) v[c] = neg(rows[static_cast<std::size_t>(pivot_of_col[c])][fc]);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Basis of {X : L X + X R = 0} as matrices, via the n^2 x n^2 system.
inline std::vector<Mat> sylvester_nullspace(const Mat& L, const Mat& R) {
    const int n = L.n();
    const FieldCtxPtr& K = L.ctx();
    const std::size_t nn = static_cast<std::size_t>(n) * n;
    std::vector<std::vector<FieldElem>> rows(nn, std::vector<FieldElem>(nn, zero(K)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& row = rows[static_cast<std::size_t>(i) * n + j];
            for (int k = 0; k < n; ++k) {
                row[static_cast<std::size_t>(k) * n + j] = row[static_cast<std::size_t>(k) * n + j] + L.at(i, k);
                row[static_cast<std::size_t>(i) * n + k] = row[static_cast<std::size_t>(i) * n + k] + R.at(k, j);
            }
        }
    std::vector<Mat> out;
    for (auto& v : nullspace(std::move(rows), nn, K)) {
        Mat m(K, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i, j) = v[static_cast<std::size_t>(i) * n + j];
        out.push_back(std::move(m));
    }
    return out;
}

/// Visits every invertible n x n matrix over ctx in a deterministic order.
/// Intended for the exhaustive cross-checks at |GL| up to ~10^6.
inline void for_each_gl(const FieldCtxPtr& ctx, int n, const std::function<void(const Mat&)>& fn) {
    const std::int64_t Q = ctx->size();
    const int cells = n * n;
    std::vector<std::int64_t> odo(static_cast<std::size_t>(cells), 0);
    while (true) {
        Mat m(ctx, n);
        for (int i = 0; i < cells; ++i) m.at(i / n, i % n) = element_at(ctx, odo[static_cast<std::size_t>(i)]);
        if (!det(m).is_zero()) fn(m);
        int pos = cells - 1;
        while (pos >= 0 && ++odo[static_cast<std::size_t>(pos)] == Q) odo[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
    }
}

// ---------------------------------------------------------------------------
// Text formats

/// Rows as semicolon-separated lists of element encodings.
inline std::string to_string(const Mat& a) {
    std::string s;
    for (int i = 0; i < a.n(); ++i) {
        if (i) s += ";";
        for (int j = 0; j < a.n(); ++j) {
            if (j) s += ",";
            s += to_string(a.at(i, j));
        }
    }
    return s;
}

inline std::string to_string(const ProjPoint& p) {
    std::string s = "(";
    for (int i = 0; i < p.dim(); ++i) {
        if (i) s += ":";
        s += to_string(p[i]);
    }
    s += ")";
    return s;
}

inline std::string to_string(const MonicPoly& f) {
    std::string s = "t^" + std::to_string(f.degree());
    for (int i = f.degree() - 1; i >= 0; --i) {
        const FieldElem& c = f.tail_coeff(i);
        if (c.is_zero()) continue;
        s += "+" + to_string(c);
        if (i > 0) s += "*t";
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace fillcurve
