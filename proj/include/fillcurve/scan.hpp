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
#include <cstdlib>
#include <thread>
#include <vector>

#include "fillcurve/ffield.hpp"
#include "fillcurve/forms.hpp"

/// Table-driven evaluation engine for the exhaustive point scans. Elements
/// of F_Q are addressed by their enumeration index; multiplication runs in
/// the discrete-log domain and addition through a Zech-logarithm table, so
/// one form evaluation costs a handful of integer operations. P^2(F_{4^6})
/// has ~1.7e7 points, which makes this the only hot path in the library.
///
/// Results are independent of the thread count: the point index space is
/// split into contiguous chunks and per-chunk hits are concatenated in
/// chunk order.

namespace fillcurve::scan {

constexpr std::int32_t kZero = -1;  // log-domain sentinel for the zero element

struct Table {
    FieldCtxPtr ctx;
    std::int64_t Q = 0;
    std::int32_t M = 0;  // Q - 1
    std::uint64_t minv = 0;  // floor(2^48 / M) for the exact reduction below
    std::int64_t one_index = 0;
    std::vector<std::int32_t> log_;   // element index -> log (kZero for 0)
    std::vector<std::int32_t> zech_;  // zech_[i] = log(1 + g^i), kZero when 1 + g^i = 0
    std::vector<std::int64_t> exp_;   // log -> element index

    explicit Table(FieldCtxPtr field) : ctx(std::move(field)) {
        Q = ctx->size();
        M = static_cast<std::int32_t>(Q - 1);
        minv = (std::uint64_t(1) << 48) / static_cast<std::uint64_t>(M);
        log_.assign(static_cast<std::size_t>(Q), kZero);
        exp_.assign(static_cast<std::size_t>(M), 0);
        const FieldElem g = primitive_element(ctx);
        FieldElem cur = one(ctx);
        for (std::int32_t i = 0; i < M; ++i) {
            const std::int64_t idx = index_of(cur);
            log_[static_cast<std::size_t>(idx)] = i;
            exp_[static_cast<std::size_t>(i)] = idx;
            cur = cur * g;
        }
        one_index = exp_[0];
        zech_.assign(static_cast<std::size_t>(M), kZero);
        const FieldElem o = one(ctx);
        for (std::int32_t i = 0; i < M; ++i) {
            const FieldElem s = o + element_at(ctx, exp_[static_cast<std::size_t>(i)]);
            zech_[static_cast<std::size_t>(i)] =
                s.is_zero() ? kZero : log_[static_cast<std::size_t>(index_of(s))];
        }
    }

    std::int32_t log_of_index(std::int64_t idx) const { return log_[static_cast<std::size_t>(idx)]; }

    // v mod M by reciprocal multiplication, exact for v <= 34*M: the
    // quotient estimate (v * floor(2^48/M)) >> 48 is off by at most one,
    // and a single conditional subtraction fixes it.
    std::int32_t reduce(std::uint64_t v) const {
        const std::uint64_t qhat = (v * minv) >> 48;
        std::uint64_t r = v - qhat * static_cast<std::uint64_t>(M);
        if (r >= static_cast<std::uint64_t>(M)) r -= static_cast<std::uint64_t>(M);
        return static_cast<std::int32_t>(r);
    }

    // log(g^a + g^b); either argument may be the zero sentinel.
    std::int32_t add_logs(std::int32_t a, std::int32_t b) const {
        if (a == kZero) return b;
        if (b == kZero) return a;
        std::int32_t d = b - a;
        if (d < 0) d += M;
        const std::int32_t z = zech_[static_cast<std::size_t>(d)];
        if (z == kZero) return kZero;
        std::int32_t r = a + z;
        if (r >= M) r -= M;
        return r;
    }
};

struct CompiledForm {
    struct Term {
        std::int32_t lc;  // log of the coefficient
        std::int32_t ex, ey, ez;
    };
    std::vector<Term> terms;
};

/// Embeds the coefficients of a form (over F_q or a subfield of the table's
/// field) and translates them into the log domain.
inline CompiledForm compile(const HomForm& f, const Table& tab) {
    CompiledForm out;
    for (const auto& [e, c] : f.terms()) {
        const FieldElem ce = embed(c, tab.ctx);
        out.terms.push_back({tab.log_of_index(index_of(ce)), e[0], e[1], e[2]});
    }
    return out;
}

/// Zero test of a compiled form at a point given by coordinate logs.
inline bool eval_is_zero(const CompiledForm& f, const Table& tab, std::int32_t lx, std::int32_t ly,
                         std::int32_t lz) {
    std::int32_t acc = kZero;
    for (const auto& t : f.terms) {
        std::uint64_t v = static_cast<std::uint64_t>(t.lc);
        if (t.ex) {
            if (lx < 0) continue;
            v += std::uint64_t(t.ex) * static_cast<std::uint64_t>(lx);
        }
        if (t.ey) {
            if (ly < 0) continue;
            v += std::uint64_t(t.ey) * static_cast<std::uint64_t>(ly);
        }
        if (t.ez) {
            if (lz < 0) continue;
            v += std::uint64_t(t.ez) * static_cast<std::uint64_t>(lz);
        }
        acc = tab.add_logs(acc, tab.reduce(v));
    }
    return acc == kZero;
}

inline int thread_count() {
    if (const char* env = std::getenv("FILLCURVE_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v > 64 ? 64 : v;
    }
    const unsigned hc = std::thread::hardware_concurrency();
    if (hc == 0) return 1;
    return hc > 8 ? 8 : static_cast<int>(hc);
}

/// Coordinate element indices of the point with the given linear index, in
/// the canonical enumeration of P^2: (0,0,1), then (0,1,*), then (1,*,*).
inline std::array<std::int64_t, 3> point_indices(const Table& tab, std::int64_t t) {
    if (t == 0) return {0, 0, tab.one_index};
    if (t <= tab.Q) return {0, tab.one_index, t - 1};
    const std::int64_t u = t - tab.Q - 1;
    return {tab.one_index, u / tab.Q, u % tab.Q};
}

inline ProjPoint point_at(const Table& tab, std::int64_t t) {
    const auto idx = point_indices(tab, t);
    std::vector<FieldElem> c;
    c.reserve(3);
    for (int v = 0; v < 3; ++v) c.push_back(element_at(tab.ctx, idx[static_cast<std::size_t>(v)]));
    return ProjPoint(std::move(c));
}

/// Linear indices of all points of P^2 at which every compiled form
/// vanishes, ascending. Parallel over contiguous chunks.
inline std::vector<std::int64_t> common_zeros(const Table& tab, const std::vector<CompiledForm>& polys) {
    const std::int64_t total = tab.Q * tab.Q + tab.Q + 1;
    const int nthreads = total > 50000 ? thread_count() : 1;
    std::vector<std::vector<std::int64_t>> hits(static_cast<std::size_t>(nthreads));

    auto work = [&](int which, std::int64_t lo, std::int64_t hi) {
        auto& out = hits[static_cast<std::size_t>(which)];
        for (std::int64_t t = lo; t < hi; ++t) {
            const auto idx = point_indices(tab, t);
            const std::int32_t lx = tab.log_of_index(idx[0]);
            const std::int32_t ly = tab.log_of_index(idx[1]);
            const std::int32_t lz = tab.log_of_index(idx[2]);
            bool all_zero = true;
            for (const auto& f : polys)
                if (!eval_is_zero(f, tab, lx, ly, lz)) {
                    all_zero = false;
                    break;
                }
            if (all_zero) out.push_back(t);
        }
    };

    if (nthreads == 1) {
        work(0, 0, total);
    } else {
        const std::int64_t chunk = (total + nthreads - 1) / nthreads;
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) {
            const std::int64_t lo = i * chunk;
            const std::int64_t hi = lo + chunk < total ? lo + chunk : total;
            if (lo >= hi) break;
            pool.emplace_back(work, i, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::int64_t> merged;
    for (const auto& part : hits) merged.insert(merged.end(), part.begin(), part.end());
    return merged;
}

}  // namespace fillcurve::scan
