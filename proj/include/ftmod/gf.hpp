/*
   Copyright 2026 The ftmod Authors

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

#ifndef FTMOD_GF_HPP
#define FTMOD_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ftmod {

namespace detail {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

inline long long mod_norm(long long a, long long m) {
    a %= m;
    return a < 0 ? a + m : a;
}

// Dense polynomials over F_p, low degree first, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

inline void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
    // p is prime and small, Fermat is fine
    std::uint64_t r = 1, b = a % p;
    for (std::uint32_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

inline FpPoly fp_rem(FpPoly a, const FpPoly& m, std::uint32_t p) {
    fp_trim(a);
    const std::uint32_t li = fp_inv(m.back(), p);
    while (a.size() >= m.size()) {
        const std::uint64_t f = std::uint64_t(a.back()) * li % p;
        const std::size_t sh = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i)
            a[sh + i] = static_cast<std::uint32_t>((a[sh + i] + (p - f) * m[i]) % p);
        fp_trim(a);
    }
    return a;
}

inline FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    fp_trim(r);
    return r;
}

inline bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    // trial division by every monic polynomial of degree <= n/2
    for (std::size_t d = 1; d <= n / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<unsigned>(d));
        for (std::uint64_t c = 0; c < count; ++c) {
            FpPoly g(d + 1, 0);
            std::uint64_t x = c;
            for (std::size_t i = 0; i < d; ++i, x /= p) g[i] = static_cast<std::uint32_t>(x % p);
            g[d] = 1;
            if (fp_rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// GF(p^m) = F_p[g]/(modulus).  Elements are stored as base-p digit indices.
// q = p^q_exp is the constant field of the A-field structure, theta = iota(t).
class GFField {
   public:
    static constexpr std::uint64_t max_size = 1u << 20;

    static std::shared_ptr<const GFField> make(std::uint32_t p, std::uint32_t m, detail::FpPoly modulus = {},
                                               std::uint32_t q_exp = 1, std::optional<std::uint32_t> theta = {}) {
        return std::shared_ptr<const GFField>(new GFField(p, m, std::move(modulus), q_exp, theta));
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t size() const { return n_; }
    std::uint32_t q_exp() const { return q_exp_; }
    std::uint64_t q() const { return detail::ipow(p_, q_exp_); }
    const detail::FpPoly& modulus() const { return mod_; }
    std::uint32_t generator() const { return gen_; }
    std::uint32_t theta() const { return theta_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        std::uint32_t r = 0, w = 1;
        for (std::uint32_t i = 0; i < m_; ++i, w *= p_) {
            r += ((a % p_ + b % p_) % p_) * w;
            a /= p_;
            b /= p_;
        }
        return r;
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        std::uint32_t r = 0, w = 1;
        for (std::uint32_t i = 0; i < m_; ++i, w *= p_) {
            r += ((p_ - a % p_) % p_) * w;
            a /= p_;
        }
        return r;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (n_ - 1)];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw DivisionByZero("inverse of zero in " + header());
        return exp_[(n_ - 1 - log_[a]) % (n_ - 1)];
    }
    std::uint32_t pow(std::uint32_t a, long long e) const {
        if (a == 0) {
            if (e < 0) throw DivisionByZero("negative power of zero");
            return e == 0 ? 1 : 0;
        }
        const long long l = detail::mod_norm(static_cast<long long>(log_[a]) * detail::mod_norm(e, n_ - 1), n_ - 1);
        return exp_[l];
    }
    // a^(p^k) for any integer k (the Frobenius has order m)
    std::uint32_t frob(std::uint32_t a, long long k) const {
        if (a == 0) return 0;
        const long long kk = detail::mod_norm(k, m_);
        return exp_[(static_cast<std::uint64_t>(log_[a]) * ppow_[kk]) % (n_ - 1)];
    }
    // a^(q^i)
    std::uint32_t twist(std::uint32_t a, long long i) const { return frob(a, i * static_cast<long long>(q_exp_)); }

    std::uint32_t from_int(long long v) const { return static_cast<std::uint32_t>(detail::mod_norm(v, p_)); }

    std::vector<std::uint32_t> digits(std::uint32_t a) const {
        std::vector<std::uint32_t> d(m_);
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_) d[i] = a % p_;
        return d;
    }
    std::uint32_t from_digits(const std::vector<std::uint32_t>& d) const {
        std::uint32_t r = 0, w = 1;
        for (std::uint32_t i = 0; i < m_; ++i, w *= p_) r += (d[i] % p_) * w;
        return r;
    }

    std::string render(std::uint32_t a) const {
        if (m_ == 1) return std::to_string(a);
        if (a == 0) return "0";
        const auto d = digits(a);
        std::string s;
        for (std::uint32_t i = m_; i-- > 0;) {
            if (d[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += std::to_string(d[i]);
                continue;
            }
            if (d[i] != 1) s += std::to_string(d[i]) + "*";
            s += i == 1 ? "g" : "g^" + std::to_string(i);
        }
        return s;
    }

    std::string header() const {
        std::string h = "GF(" + std::to_string(p_);
        if (m_ > 1) {
            h += "^" + std::to_string(m_) + "; mod=";
            std::string ms;
            for (std::uint32_t i = m_ + 1; i-- > 0;) {
                if (mod_[i] == 0) continue;
                if (!ms.empty()) ms += "+";
                if (i == 0 || mod_[i] != 1) ms += std::to_string(mod_[i]);
                if (i > 0 && mod_[i] != 1) ms += "*";
                if (i > 0) ms += i == 1 ? "g" : "g^" + std::to_string(i);
            }
            h += ms;
        }
        if (q_exp_ != 1) h += "; q=" + std::to_string(p_) + "^" + std::to_string(q_exp_);
        if (theta_ != gen_) h += "; th=" + render(theta_);
        return h + ")";
    }

   private:
    GFField(std::uint32_t p, std::uint32_t m, detail::FpPoly modulus, std::uint32_t q_exp,
            std::optional<std::uint32_t> theta)
        : p_(p), m_(m), q_exp_(q_exp) {
        if (!detail::is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw InvalidField("extension degree must be >= 1");
        const std::uint64_t n = detail::ipow(p, m);
        if (n > max_size) throw InvalidField("field too large for table arithmetic");
        n_ = static_cast<std::uint32_t>(n);
        if (q_exp < 1 || m % q_exp != 0) throw InvalidField("q = p^e needs e dividing the extension degree");
        if (modulus.empty()) {
            mod_ = default_modulus();
        } else {
            mod_ = std::move(modulus);
            for (auto& c : mod_) c %= p_;
            detail::fp_trim(mod_);
            if (mod_.size() != m + 1 || mod_.back() != 1) throw InvalidField("modulus must be monic of degree m");
            if (!detail::fp_irreducible(mod_, p_)) throw InvalidField("modulus is reducible");
        }
        // g is the class of x; for m == 1 that is the root -mod_[0]
        gen_ = m_ == 1 ? (p_ - mod_[0]) % p_ : p_;
        build_tables();
        theta_ = theta.value_or(gen_);
        if (theta_ >= n_) throw InvalidField("theta out of range");
    }

    std::uint32_t index_of(const detail::FpPoly& a) const {
        std::uint32_t r = 0, w = 1;
        for (std::size_t i = 0; i < a.size(); ++i, w *= p_) r += a[i] * w;
        return r;
    }
    detail::FpPoly poly_of(std::uint32_t a) const {
        detail::FpPoly r(m_);
        for (std::uint32_t i = 0; i < m_; ++i, a /= p_) r[i] = a % p_;
        detail::fp_trim(r);
        return r;
    }

    // order of element a (as a polynomial class) modulo mod, or 0 if it is zero
    std::uint64_t order_of(const detail::FpPoly& a, const detail::FpPoly& mod) const {
        if (a.empty()) return 0;
        detail::FpPoly x = a;
        std::uint64_t k = 1;
        while (!(x.size() == 1 && x[0] == 1)) {
            x = detail::fp_rem(detail::fp_mul(x, a, p_), mod, p_);
            if (x.empty()) return 0;
            ++k;
            if (k > n_) return 0;
        }
        return k;
    }

    detail::FpPoly default_modulus() const {
        // first monic irreducible (by coefficient index) whose root is primitive
        for (std::uint64_t c = 1; c < n_; ++c) {
            detail::FpPoly f(m_ + 1, 0);
            std::uint64_t x = c;
            for (std::uint32_t i = 0; i < m_; ++i, x /= p_) f[i] = static_cast<std::uint32_t>(x % p_);
            f[m_] = 1;
            if (f[0] == 0) continue;
            if (!detail::fp_irreducible(f, p_)) continue;
            detail::FpPoly g = m_ == 1 ? detail::FpPoly{(p_ - f[0]) % p_} : detail::FpPoly{0, 1};
            detail::fp_trim(g);
            if (order_of(g, f) == n_ - 1) return f;
        }
        throw InvalidField("no primitive modulus found");
    }

    void build_tables() {
        exp_.assign(n_, 0);
        log_.assign(n_, 0);
        detail::FpPoly prim;
        for (std::uint32_t c = 1; c < n_; ++c) {
            auto a = poly_of(c);
            if (order_of(a, mod_) == n_ - 1) {
                prim = a;
                break;
            }
        }
        detail::FpPoly x{1};
        for (std::uint32_t i = 0; i + 1 < n_; ++i) {
            const std::uint32_t idx = index_of(x);
            exp_[i] = idx;
            log_[idx] = i;
            x = detail::fp_rem(detail::fp_mul(x, prim, p_), mod_, p_);
        }
        exp_[n_ - 1] = exp_[0];
        ppow_.assign(m_, 1);
        for (std::uint32_t k = 1; k < m_; ++k) ppow_[k] = ppow_[k - 1] * p_ % (n_ - 1);
    }

    std::uint32_t p_, m_, n_ = 0, q_exp_;
    detail::FpPoly mod_;
    std::uint32_t gen_ = 0, theta_ = 0;
    std::vector<std::uint32_t> exp_, log_;
    std::vector<std::uint64_t> ppow_;
};

class GF {
   public:
    using field_type = GFField;
    using field_ptr = std::shared_ptr<const GFField>;
    static constexpr bool is_finite = true;

    GF() = default;
    GF(field_ptr f, std::uint32_t v) : f_(std::move(f)), v_(v) {}

    static GF zero(const field_ptr& f) { return GF(f, 0); }
    static GF one(const field_ptr& f) { return GF(f, 1); }
    static GF from_int(const field_ptr& f, long long v) { return GF(f, f->from_int(v)); }
    static GF theta(const field_ptr& f) { return GF(f, f->theta()); }
    static GF generator(const field_ptr& f) { return GF(f, f->generator()); }
    static GF from_index(const field_ptr& f, std::uint32_t v) { return GF(f, v); }
    template <class Rng>
    static GF random(const field_ptr& f, Rng& rng) {
        std::uniform_int_distribution<std::uint32_t> d(0, f->size() - 1);
        return GF(f, d(rng));
    }
    // F_p-basis g^0, ..., g^(m-1) of the field
    static std::vector<GF> fp_basis(const field_ptr& f) {
        std::vector<GF> b;
        std::uint32_t w = 1;
        for (std::uint32_t i = 0; i < f->m(); ++i, w *= f->p()) b.emplace_back(f, w);
        return b;
    }
    static std::optional<GF> symbol(const field_ptr& f, const std::string& name, std::optional<long long> idx) {
        if (idx && *idx != 0) return std::nullopt;
        if (name == "g") return generator(f);
        if (name == "th") return theta(f);
        return std::nullopt;
    }

    const field_ptr& field() const { return f_; }
    std::uint32_t index() const { return v_; }
    std::vector<std::uint32_t> digits() const { return f_->digits(v_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    GF operator+(const GF& o) const { return GF(f_, f_->add(v_, chk(o).v_)); }
    GF operator-(const GF& o) const { return GF(f_, f_->sub(v_, chk(o).v_)); }
    GF operator*(const GF& o) const { return GF(f_, f_->mul(v_, chk(o).v_)); }
    GF operator/(const GF& o) const { return GF(f_, f_->mul(v_, f_->inv(chk(o).v_))); }
    GF operator-() const { return GF(f_, f_->neg(v_)); }
    GF& operator+=(const GF& o) { return *this = *this + o; }
    GF& operator-=(const GF& o) { return *this = *this - o; }
    GF& operator*=(const GF& o) { return *this = *this * o; }
    bool operator==(const GF& o) const { return f_ == o.f_ && v_ == o.v_; }
    bool operator!=(const GF& o) const { return !(*this == o); }

    GF inv() const { return GF(f_, f_->inv(v_)); }
    GF pow(long long e) const { return GF(f_, f_->pow(v_, e)); }
    GF twist(long long i) const { return GF(f_, f_->twist(v_, i)); }
    std::string str() const { return f_->render(v_); }

   private:
    const GF& chk(const GF& o) const {
        if (f_ != o.f_) throw MixedFields("operands belong to different finite fields");
        return o;
    }
    field_ptr f_;
    std::uint32_t v_ = 0;
};

}  // namespace ftmod

#endif
