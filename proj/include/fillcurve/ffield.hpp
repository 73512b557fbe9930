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

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/// Exact arithmetic in small finite fields F_{p^d}, d = e*m, with
/// deterministic moduli, subfield embeddings, Frobenius, norm and trace.
///
/// Conventions used throughout the library:
///  - polynomial coefficient vectors are stored low degree first;
///  - elements are coefficient vectors of length d with entries in [0, p);
///  - element enumeration order is lexicographic on the coefficient tuple
///    (c0 compared first), and every "first such element" rule below refers
///    to this order, so all constructions are reproducible bit for bit.

namespace fillcurve {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) return false;
    return true;
}

inline std::int64_t ipow(std::int64_t base, int e) {
    std::int64_t r = 1;
    while (e-- > 0) {
        if (r > (std::int64_t(1) << 42) / (base ? base : 1))
            throw Error("field size out of supported range");
        r *= base;
    }
    return r;
}

// Dense univariate polynomials over F_p as int vectors, low degree first.
// Only used for modulus construction and validation.
using IPoly = std::vector<std::int32_t>;

inline void itrim(IPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline IPoly imul(const IPoly& a, const IPoly& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    IPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::int32_t>((r[i + j] + std::int64_t(a[i]) * b[j]) % p);
    itrim(r);
    return r;
}

// Remainder of a mod b, b monic.
inline IPoly imod(IPoly a, const IPoly& b, std::int64_t p) {
    itrim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::int64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        if (lead != 0)
            for (std::size_t j = 0; j <= db; ++j) {
                std::int64_t v = (a[shift + j] - lead * b[j]) % p;
                a[shift + j] = static_cast<std::int32_t>(v < 0 ? v + p : v);
            }
        a.pop_back();
        itrim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2. A reducible
// polynomial of degree d has a monic factor of degree at most d/2, so this
// is a complete test at the sizes this library supports (d <= 12, p <= 7).
inline bool is_irreducible_ipoly(const IPoly& f, std::int64_t p) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d < 1 || f.back() != 1) return false;
    if (d == 1) return true;
    if (f[0] == 0) return false;  // divisible by t
    for (int dg = 1; dg <= d / 2; ++dg) {
        const std::int64_t count = ipow(p, dg);
        IPoly g(dg + 1, 0);
        g[dg] = 1;
        for (std::int64_t k = 0; k < count; ++k) {
            std::int64_t v = k;
            for (int j = dg - 1; j >= 0; --j) {
                g[j] = static_cast<std::int32_t>(v % p);
                v /= p;
            }
            if (imod(f, g, p).empty()) return false;
        }
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree d over F_p,
// candidate tails (c0,...,c_{d-1}) compared as integer tuples, c0 first.
inline IPoly default_modulus(std::int64_t p, int d) {
    static std::mutex mu;
    static std::map<std::pair<std::int64_t, int>, IPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({p, d});
        if (it != cache.end()) return it->second;
    }
    IPoly f(d + 1, 0);
    f[d] = 1;
    const std::int64_t count = ipow(p, d);
    for (std::int64_t k = 0; k < count; ++k) {
        std::int64_t v = k;
        for (int j = d - 1; j >= 0; --j) {
            f[j] = static_cast<std::int32_t>(v % p);
            v /= p;
        }
        if (is_irreducible_ipoly(f, p)) {
            std::lock_guard<std::mutex> lock(mu);
            cache[{p, d}] = f;
            return f;
        }
    }
    throw Error("no irreducible polynomial found");  // cannot happen
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t f = 2; f * f <= n; ++f)
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

class FieldCtx;
using FieldCtxPtr = std::shared_ptr<const FieldCtx>;

/// Descriptor of F_{p^d} = F_p[t]/(modulus). Immutable after construction,
/// safe to share across threads. An extension created with make_extension
/// keeps a handle to its base field together with the image of the base
/// generator, which fixes one deterministic embedding F_q -> F_{q^m}.
class FieldCtx {
  public:
    FieldCtx(std::int64_t p, int d, detail::IPoly modulus, FieldCtxPtr base,
             std::vector<std::int32_t> base_gen)
        : p_(p), d_(d), q_(detail::ipow(p, d)), modulus_(std::move(modulus)),
          base_(std::move(base)), base_gen_(std::move(base_gen)) {}

    std::int64_t p() const { return p_; }
    int degree() const { return d_; }
    std::int64_t size() const { return q_; }
    const detail::IPoly& modulus() const { return modulus_; }
    const FieldCtxPtr& base() const { return base_; }
    const std::vector<std::int32_t>& base_generator_image() const { return base_gen_; }

  private:
    std::int64_t p_;
    int d_;
    std::int64_t q_;
    detail::IPoly modulus_;
    FieldCtxPtr base_;                    // null for fields built directly over F_p
    std::vector<std::int32_t> base_gen_;  // coeffs (in this field) of the base generator image
};

inline bool same_field(const FieldCtx& a, const FieldCtx& b) {
    return a.p() == b.p() && a.degree() == b.degree() && a.modulus() == b.modulus();
}
inline bool same_field(const FieldCtxPtr& a, const FieldCtxPtr& b) {
    return a.get() == b.get() || same_field(*a, *b);
}

/// One element of a FieldCtx: a reduced coefficient vector of length d.
class FieldElem {
  public:
    FieldElem() = default;
    FieldElem(FieldCtxPtr ctx, std::vector<std::int32_t> coeffs)
        : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
        if (static_cast<int>(c_.size()) != ctx_->degree())
            throw std::invalid_argument("coefficient vector has wrong length");
        for (auto& v : c_) {
            v = static_cast<std::int32_t>(v % ctx_->p());
            if (v < 0) v += static_cast<std::int32_t>(ctx_->p());
        }
    }

    const FieldCtxPtr& ctx() const { return ctx_; }
    const std::vector<std::int32_t>& coeffs() const { return c_; }
    std::int32_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](std::int32_t v) { return v == 0; });
    }

    friend bool operator==(const FieldElem& a, const FieldElem& b) {
        return same_field(a.ctx_, b.ctx_) && a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a == b); }
    // Lexicographic on the coefficient tuple, c0 first: the enumeration order.
    friend bool operator<(const FieldElem& a, const FieldElem& b) { return a.c_ < b.c_; }

  private:
    FieldCtxPtr ctx_;
    std::vector<std::int32_t> c_;
};

inline FieldElem zero(const FieldCtxPtr& ctx) {
    return FieldElem(ctx, std::vector<std::int32_t>(static_cast<std::size_t>(ctx->degree()), 0));
}

inline FieldElem from_int(const FieldCtxPtr& ctx, std::int64_t v) {
    std::vector<std::int32_t> c(static_cast<std::size_t>(ctx->degree()), 0);
    std::int64_t r = v % ctx->p();
    if (r < 0) r += ctx->p();
    c[0] = static_cast<std::int32_t>(r);
    return FieldElem(ctx, std::move(c));
}

inline FieldElem one(const FieldCtxPtr& ctx) { return from_int(ctx, 1); }

/// Element with enumeration index i: digits of i in base p, c0 most significant.
inline FieldElem element_at(const FieldCtxPtr& ctx, std::int64_t index) {
    if (index < 0 || index >= ctx->size()) throw std::invalid_argument("element index out of range");
    const int d = ctx->degree();
    std::vector<std::int32_t> c(static_cast<std::size_t>(d), 0);
    for (int j = d - 1; j >= 0; --j) {
        c[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(index % ctx->p());
        index /= ctx->p();
    }
    return FieldElem(ctx, std::move(c));
}

inline std::int64_t index_of(const FieldElem& a) {
    std::int64_t idx = 0;
    for (std::int32_t v : a.coeffs()) idx = idx * a.ctx()->p() + v;
    return idx;
}

/// All p^d elements in enumeration order.
inline std::vector<FieldElem> enumerate(const FieldCtxPtr& ctx) {
    std::vector<FieldElem> out;
    out.reserve(static_cast<std::size_t>(ctx->size()));
    for (std::int64_t i = 0; i < ctx->size(); ++i) out.push_back(element_at(ctx, i));
    return out;
}

namespace detail {

inline void require_same_ctx(const FieldElem& a, const FieldElem& b) {
    if (!same_field(a.ctx(), b.ctx())) throw std::invalid_argument("field context mismatch");
}

}  // namespace detail

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    detail::require_same_ctx(a, b);
    std::vector<std::int32_t> c(a.coeffs());
    const auto p = static_cast<std::int32_t>(a.ctx()->p());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] += b.coeffs()[i];
        if (c[i] >= p) c[i] -= p;
    }
    return FieldElem(a.ctx(), std::move(c));
}

inline FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    detail::require_same_ctx(a, b);
    std::vector<std::int32_t> c(a.coeffs());
    const auto p = static_cast<std::int32_t>(a.ctx()->p());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] -= b.coeffs()[i];
        if (c[i] < 0) c[i] += p;
    }
    return FieldElem(a.ctx(), std::move(c));
}

inline FieldElem neg(const FieldElem& a) { return zero(a.ctx()) - a; }

inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    detail::require_same_ctx(a, b);
    const int d = a.ctx()->degree();
    const std::int64_t p = a.ctx()->p();
    std::vector<std::int64_t> buf(static_cast<std::size_t>(2 * d - 1), 0);
    for (int i = 0; i < d; ++i) {
        if (a.coeffs()[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
            buf[static_cast<std::size_t>(i + j)] +=
                std::int64_t(a.coeffs()[static_cast<std::size_t>(i)]) * b.coeffs()[static_cast<std::size_t>(j)];
    }
    const auto& mod = a.ctx()->modulus();
    for (int i = 2 * d - 2; i >= d; --i) {
        const std::int64_t lead = buf[static_cast<std::size_t>(i)] % p;
        if (lead == 0) continue;
        for (int j = 0; j < d; ++j)
            buf[static_cast<std::size_t>(i - d + j)] -= lead * mod[static_cast<std::size_t>(j)];
        buf[static_cast<std::size_t>(i)] = 0;
    }
    std::vector<std::int32_t> c(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        std::int64_t v = buf[static_cast<std::size_t>(i)] % p;
        if (v < 0) v += p;
        c[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(v);
    }
    return FieldElem(a.ctx(), std::move(c));
}

inline FieldElem pow(const FieldElem& a, std::int64_t k);

inline FieldElem inv(const FieldElem& a) {
    if (a.is_zero()) throw std::invalid_argument("inverse of zero");
    return pow(a, a.ctx()->size() - 2);
}

inline FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * inv(b); }

inline FieldElem pow(const FieldElem& a, std::int64_t k) {
    if (k < 0) {
        if (a.is_zero()) throw std::invalid_argument("zero with negative exponent");
        return pow(inv(a), -k);
    }
    FieldElem r = one(a.ctx());
    FieldElem base = a;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

namespace detail {

// Exponent e' with q_sub = p^{e'}; validates that x -> x^{q_sub} is an
// automorphism of the ambient field (e' | d).
inline int subfield_exponent(const FieldCtxPtr& ctx, std::int64_t q_sub) {
    std::int64_t v = q_sub;
    int e = 0;
    while (v > 1 && v % ctx->p() == 0) {
        v /= ctx->p();
        ++e;
    }
    if (v != 1 || e == 0 || ctx->degree() % e != 0)
        throw std::invalid_argument("not a subfield order of this context");
    return e;
}

}  // namespace detail

/// a^q for q = p^e a subfield order; the coordinatewise q-power map.
inline FieldElem frobenius(const FieldElem& a, std::int64_t q_sub) {
    detail::subfield_exponent(a.ctx(), q_sub);
    return pow(a, q_sub);
}

/// a * a^q * ... * a^{q^(m-1)}, m = d/e. Lands in the q-element subfield.
inline FieldElem norm(const FieldElem& a, std::int64_t q_sub) {
    const int e = detail::subfield_exponent(a.ctx(), q_sub);
    const int m = a.ctx()->degree() / e;
    FieldElem r = a, conj = a;
    for (int i = 1; i < m; ++i) {
        conj = frobenius(conj, q_sub);
        r = r * conj;
    }
    if (frobenius(r, q_sub) != r) throw Error("norm did not land in the subfield");
    return r;
}

/// a + a^q + ... + a^{q^(m-1)}. Lands in the q-element subfield.
inline FieldElem trace(const FieldElem& a, std::int64_t q_sub) {
    const int e = detail::subfield_exponent(a.ctx(), q_sub);
    const int m = a.ctx()->degree() / e;
    FieldElem r = a, conj = a;
    for (int i = 1; i < m; ++i) {
        conj = frobenius(conj, q_sub);
        r = r + conj;
    }
    if (frobenius(r, q_sub) != r) throw Error("trace did not land in the subfield");
    return r;
}

/// F_p-algebra embedding along the base chain of `super`.
inline FieldElem embed(const FieldElem& a, const FieldCtxPtr& super) {
    if (same_field(a.ctx(), super)) return FieldElem(super, a.coeffs());
    if (a.ctx()->p() != super->p()) throw std::invalid_argument("no embedding path (characteristic)");
    if (a.ctx()->degree() == 1) return from_int(super, a.coeff(0));
    if (!super->base()) throw std::invalid_argument("no embedding path");
    const FieldElem b = embed(a, super->base());
    const FieldElem gen(super, super->base_generator_image());
    FieldElem acc = zero(super);
    FieldElem g = one(super);
    for (int i = 0; i < super->base()->degree(); ++i) {
        acc = acc + from_int(super, b.coeff(i)) * g;
        g = g * gen;
    }
    return acc;
}

/// F_{p^d} with the given monic irreducible modulus, or the deterministic
/// default modulus when none is supplied.
inline FieldCtxPtr make_field(std::int64_t p, int d,
                              std::optional<std::vector<std::int32_t>> modulus = std::nullopt) {
    if (!detail::is_prime(p)) throw std::invalid_argument("p is not prime");
    if (d < 1) throw std::invalid_argument("degree must be positive");
    detail::IPoly m;
    if (modulus) {
        m = *modulus;
        for (auto& v : m) {
            v = static_cast<std::int32_t>(v % p);
            if (v < 0) v += static_cast<std::int32_t>(p);
        }
        if (static_cast<int>(m.size()) != d + 1 || m.back() != 1)
            throw std::invalid_argument("modulus must be monic of degree d");
        if (!detail::is_irreducible_ipoly(m, p)) throw std::invalid_argument("modulus is reducible");
    } else {
        m = detail::default_modulus(p, d);
    }
    return std::make_shared<const FieldCtx>(p, d, std::move(m), nullptr, std::vector<std::int32_t>{});
}

/// The extension F_{q^m} of a base field F_q, realized in one step over F_p
/// with the default modulus of degree d = e*m. The base generator is mapped
/// to the first root (in enumeration order) of the base modulus.
inline FieldCtxPtr make_extension(const FieldCtxPtr& base, int m) {
    if (m < 1) throw std::invalid_argument("extension degree must be positive");
    if (m == 1) return base;
    const int d = base->degree() * m;
    detail::IPoly mod = detail::default_modulus(base->p(), d);
    auto bare = std::make_shared<const FieldCtx>(base->p(), d, mod, nullptr, std::vector<std::int32_t>{});
    // Root scan for the base modulus, coefficients read as prime-field scalars.
    const auto& bm = base->modulus();
    std::vector<std::int32_t> gen_image;
    for (std::int64_t i = 0; i < bare->size(); ++i) {
        const FieldElem x = element_at(bare, i);
        FieldElem acc = zero(bare);
        for (int j = static_cast<int>(bm.size()) - 1; j >= 0; --j)
            acc = acc * x + from_int(bare, bm[static_cast<std::size_t>(j)]);
        if (acc.is_zero()) {
            gen_image = x.coeffs();
            break;
        }
    }
    if (gen_image.empty()) throw Error("base modulus has no root in the extension");
    return std::make_shared<const FieldCtx>(base->p(), d, std::move(mod), base, std::move(gen_image));
}

/// First element in enumeration order of multiplicative order p^d - 1.
inline FieldElem primitive_element(const FieldCtxPtr& ctx) {
    const std::int64_t n = ctx->size() - 1;
    const auto primes = detail::prime_factors(n);
    for (std::int64_t i = 1; i < ctx->size(); ++i) {
        const FieldElem g = element_at(ctx, i);
        bool ok = true;
        for (std::int64_t ell : primes)
            if (pow(g, n / ell) == one(ctx)) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw Error("no primitive element found");  // cannot happen
}

/// Element text format: bare integer in prime fields, "[c0,c1,...]" otherwise.
inline std::string to_string(const FieldElem& a) {
    if (a.ctx()->degree() == 1) return std::to_string(a.coeff(0));
    std::string s = "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a.coeffs()[i]);
    }
    s += "]";
    return s;
}

inline FieldElem parse_elem(const FieldCtxPtr& ctx, const std::string& text) {
    std::vector<std::int32_t> c(static_cast<std::size_t>(ctx->degree()), 0);
    std::string body = text;
    if (!body.empty() && body.front() == '[') {
        if (body.back() != ']') throw std::invalid_argument("unterminated element literal: " + text);
        body = body.substr(1, body.size() - 2);
        std::size_t pos = 0, idx = 0;
        while (pos <= body.size()) {
            const std::size_t comma = body.find(',', pos);
            const std::string tok = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (idx >= c.size()) throw std::invalid_argument("too many coefficients: " + text);
            c[idx++] = static_cast<std::int32_t>(std::stol(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        c[0] = static_cast<std::int32_t>(std::stol(body));
    }
    return FieldElem(ctx, std::move(c));
}

}  // namespace fillcurve
