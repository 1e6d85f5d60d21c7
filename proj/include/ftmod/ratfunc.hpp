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

#ifndef FTMOD_RATFUNC_HPP
#define FTMOD_RATFUNC_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gf.hpp"

namespace ftmod {

// F_q(th) with F_q = GF(p^m).  The twist is th -> th^q and fixes F_q.
class RFField {
   public:
    static constexpr std::uint64_t max_degree = 1u << 22;

    static std::shared_ptr<const RFField> make(std::uint32_t p, std::uint32_t m = 1, detail::FpPoly modulus = {}) {
        return std::shared_ptr<const RFField>(new RFField(GFField::make(p, m, std::move(modulus), m)));
    }

    const std::shared_ptr<const GFField>& base() const { return base_; }
    std::uint64_t q() const { return base_->size(); }
    std::string header() const {
        std::string h = base_->header();
        // the base header carries q=p^m when m > 1; it is implied here
        if (base_->m() > 1) {
            const auto pos = h.find("; q=");
            if (pos != std::string::npos) h = h.substr(0, pos) + ")";
        }
        return h + "(th)";
    }

   private:
    explicit RFField(std::shared_ptr<const GFField> b) : base_(std::move(b)) {}
    std::shared_ptr<const GFField> base_;
};

class RF {
   public:
    using field_type = RFField;
    using field_ptr = std::shared_ptr<const RFField>;
    using Poly = std::vector<std::uint32_t>;  // base-field indices, low degree first
    static constexpr bool is_finite = false;

    RF() = default;

    static RF zero(const field_ptr& f) { return RF(f, {}, {1}); }
    static RF one(const field_ptr& f) { return RF(f, {1}, {1}); }
    static RF from_int(const field_ptr& f, long long v) {
        const auto c = f->base()->from_int(v);
        return RF(f, c ? Poly{c} : Poly{}, {1});
    }
    static RF theta(const field_ptr& f) { return RF(f, {0, 1}, {1}); }
    static RF constant(const field_ptr& f, std::uint32_t c) { return RF(f, c ? Poly{c} : Poly{}, {1}); }
    static RF fraction(const field_ptr& f, Poly num, Poly den) {
        RF r(f, std::move(num), std::move(den));
        r.canonicalize();
        return r;
    }
    static std::optional<RF> symbol(const field_ptr& f, const std::string& name, std::optional<long long> idx) {
        if (idx && *idx != 0) return std::nullopt;
        if (name == "th") return theta(f);
        if (name == "g" && f->base()->m() > 1) return constant(f, f->base()->generator());
        return std::nullopt;
    }

    const field_ptr& field() const { return f_; }
    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const { return num_.size() == 1 && num_[0] == 1 && den_.size() == 1; }

    RF operator+(const RF& o) const {
        chk(o);
        if (den_ == o.den_) return fraction(f_, padd(num_, o.num_), den_);
        return fraction(f_, padd(pmul(num_, o.den_), pmul(o.num_, den_)), pmul(den_, o.den_));
    }
    RF operator-() const { return RF(f_, pneg(num_), den_); }
    RF operator-(const RF& o) const { return *this + (-o); }
    RF operator*(const RF& o) const {
        chk(o);
        return fraction(f_, pmul(num_, o.num_), pmul(den_, o.den_));
    }
    RF operator/(const RF& o) const { return *this * o.inv(); }
    RF& operator+=(const RF& o) { return *this = *this + o; }
    RF& operator-=(const RF& o) { return *this = *this - o; }
    RF& operator*=(const RF& o) { return *this = *this * o; }
    bool operator==(const RF& o) const { return f_ == o.f_ && num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RF& o) const { return !(*this == o); }

    RF inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in " + f_->header());
        return fraction(f_, den_, num_);
    }
    RF pow(long long e) const {
        RF b = e < 0 ? inv() : *this, r = one(f_);
        for (unsigned long long k = e < 0 ? -e : e; k; k >>= 1) {
            if (k & 1) r *= b;
            b *= b;
        }
        return r;
    }

    RF twist(long long i) const {
        if (i == 0 || is_zero()) return *this;
        const std::uint64_t q = f_->q();
        std::uint64_t s = 1;
        for (long long k = 0; k < (i < 0 ? -i : i); ++k) {
            s *= q;
            if (s > RFField::max_degree) throw DegreeOverflow("twist exponent q^" + std::to_string(i) + " too large");
        }
        if (i > 0) {
            if ((num_.size() + den_.size()) * s > RFField::max_degree)
                throw DegreeOverflow("twisted degree exceeds limit");
            return RF(f_, spread(num_, s), spread(den_, s));
        }
        Poly n, d;
        if (!shrink(num_, s, n) || !shrink(den_, s, d))
            throw NotAQthPower(str() + " is not a q^" + std::to_string(-i) + "-th power in " + f_->header());
        return RF(f_, std::move(n), std::move(d));
    }

    std::string str() const {
        const std::string n = pstr(num_);
        if (den_.size() == 1) return n;
        const std::string d = pstr(den_);
        return (single_term(num_) ? n : "(" + n + ")") + "/" + (single_term(den_) && !has_coef(den_) ? d : "(" + d + ")");
    }

   private:
    RF(field_ptr f, Poly n, Poly d) : f_(std::move(f)), num_(std::move(n)), den_(std::move(d)) {}

    void chk(const RF& o) const {
        if (f_ != o.f_) throw MixedFields("operands belong to different rational function fields");
    }
    const GFField& B() const { return *f_->base(); }

    static void trim(Poly& a) {
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    Poly padd(const Poly& a, const Poly& b) const {
        Poly r(std::max(a.size(), b.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i)
            r[i] = B().add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
        trim(r);
        return r;
    }
    Poly pneg(const Poly& a) const {
        Poly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = B().neg(a[i]);
        return r;
    }
    Poly pmul(const Poly& a, const Poly& b) const {
        if (a.empty() || b.empty()) return {};
        Poly r(a.size() + b.size() - 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j]) r[i + j] = B().add(r[i + j], B().mul(a[i], b[j]));
        }
        trim(r);
        return r;
    }
    Poly pscale(const Poly& a, std::uint32_t c) const {
        Poly r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = B().mul(a[i], c);
        trim(r);
        return r;
    }
    // a = qt*b + r
    void pdivmod(Poly a, const Poly& b, Poly& qt, Poly& r) const {
        qt.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
        const std::uint32_t li = B().inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            const std::size_t sh = a.size() - b.size();
            const std::uint32_t c = B().mul(a.back(), li);
            qt[sh] = c;
            for (std::size_t i = 0; i < b.size(); ++i) a[sh + i] = B().sub(a[sh + i], B().mul(c, b[i]));
            trim(a);
        }
        trim(qt);
        r = std::move(a);
    }
    Poly pgcd(Poly a, Poly b) const {
        while (!b.empty()) {
            Poly qt, r;
            pdivmod(a, b, qt, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    void canonicalize() {
        if (den_.empty()) throw DivisionByZero("zero denominator in " + f_->header());
        if (num_.empty()) {
            den_ = {1};
            return;
        }
        Poly g = pgcd(num_, den_);
        if (g.size() > 1) {
            Poly qt, r;
            pdivmod(num_, g, qt, r);
            num_ = qt;
            pdivmod(den_, g, qt, r);
            den_ = qt;
        }
        const std::uint32_t li = B().inv(den_.back());
        num_ = pscale(num_, li);
        den_ = pscale(den_, li);
    }

    static Poly spread(const Poly& a, std::uint64_t s) {
        if (a.empty()) return {};
        Poly r((a.size() - 1) * s + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) r[i * s] = a[i];
        return r;
    }
    static bool shrink(const Poly& a, std::uint64_t s, Poly& out) {
        out.assign(a.empty() ? 0 : (a.size() - 1) / s + 1, 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            if (i % s) return false;
            out[i / s] = a[i];
        }
        return true;
    }

    static bool single_term(const Poly& a) {
        int n = 0;
        for (auto c : a) n += c != 0;
        return n <= 1;
    }
    bool has_coef(const Poly& a) const {
        for (auto c : a)
            if (c && c != 1) return true;
        return false;
    }
    std::string pstr(const Poly& a) const {
        if (a.empty()) return "0";
        std::string s;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (!a[i]) continue;
            if (!s.empty()) s += " + ";
            std::string c = B().render(a[i]);
            if (c.find(' ') != std::string::npos) c = "(" + c + ")";
            if (i == 0) {
                s += c;
                continue;
            }
            if (a[i] != 1) s += c + "*";
            s += i == 1 ? "th" : "th^" + std::to_string(i);
        }
        return s;
    }

    field_ptr f_;
    Poly num_, den_{1};
};

}  // namespace ftmod

#endif
