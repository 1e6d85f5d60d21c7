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

#ifndef FTMOD_FORMAL_HPP
#define FTMOD_FORMAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace ftmod {

// Formal twist field over F_p: rational expressions in symbols g[i] whose
// denominators are monomials in invertible generators; the twist shifts i.
class FTField {
   public:
    static std::shared_ptr<const FTField> make(std::uint32_t p, std::vector<std::string> gens,
                                               const std::vector<std::string>& invertible) {
        return std::shared_ptr<const FTField>(new FTField(p, std::move(gens), invertible));
    }

    std::uint32_t p() const { return p_; }
    std::uint64_t q() const { return p_; }
    const std::vector<std::string>& gens() const { return gens_; }
    bool invertible(int g) const { return inv_[g]; }
    int theta_gen() const { return theta_; }
    std::optional<int> gen_index(const std::string& name) const {
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (gens_[i] == name) return static_cast<int>(i);
        return std::nullopt;
    }
    std::string header() const {
        std::string h = "FTF(" + std::to_string(p_) + "; gens=";
        for (std::size_t i = 0; i < gens_.size(); ++i) h += (i ? "," : "") + gens_[i];
        std::string iv;
        for (std::size_t i = 0; i < gens_.size(); ++i)
            if (inv_[i]) iv += (iv.empty() ? "" : ",") + gens_[i];
        if (!iv.empty()) h += "; inv=" + iv;
        return h + ")";
    }

   private:
    FTField(std::uint32_t p, std::vector<std::string> gens, const std::vector<std::string>& invertible)
        : p_(p), gens_(std::move(gens)) {
        if (!detail::is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
        if (std::find(gens_.begin(), gens_.end(), "th") == gens_.end()) gens_.push_back("th");
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            const auto& g = gens_[i];
            if (g.empty() || g == "tau" || g == "sig" || g == "sigma" || g == "t" || g == "g")
                throw InvalidField("reserved or empty generator name '" + g + "'");
            if (std::find(gens_.begin(), gens_.begin() + i, g) != gens_.begin() + i)
                throw InvalidField("duplicate generator '" + g + "'");
        }
        inv_.assign(gens_.size(), false);
        for (const auto& n : invertible) {
            auto it = std::find(gens_.begin(), gens_.end(), n);
            if (it == gens_.end()) throw InvalidField("invertible symbol '" + n + "' is not a generator");
            inv_[it - gens_.begin()] = true;
        }
        theta_ = static_cast<int>(std::find(gens_.begin(), gens_.end(), "th") - gens_.begin());
    }

    std::uint32_t p_;
    std::vector<std::string> gens_;
    std::vector<bool> inv_;
    int theta_ = 0;
};

class FT {
   public:
    using field_type = FTField;
    using field_ptr = std::shared_ptr<const FTField>;
    using Sym = std::pair<int, long long>;               // (generator, twist index)
    using Mono = std::vector<std::pair<Sym, int>>;      // sorted by Sym, nonzero exponents
    using Terms = std::map<Mono, std::uint32_t>;        // nonzero coefficients in F_p
    static constexpr bool is_finite = false;

    FT() = default;

    static FT zero(const field_ptr& f) { return FT(f, {}); }
    static FT one(const field_ptr& f) { return FT(f, {{Mono{}, 1u}}); }
    static FT from_int(const field_ptr& f, long long v) {
        const auto c = static_cast<std::uint32_t>(detail::mod_norm(v, f->p()));
        return c ? FT(f, {{Mono{}, c}}) : zero(f);
    }
    static FT sym(const field_ptr& f, int gen, long long idx, int e = 1) {
        if (e < 0 && !f->invertible(gen)) throw NonMonomialDenominator(f->gens()[gen] + " is not invertible");
        if (e == 0) return one(f);
        return FT(f, {{Mono{{Sym{gen, idx}, e}}, 1u}});
    }
    static FT theta(const field_ptr& f) { return sym(f, f->theta_gen(), 0); }
    static std::optional<FT> symbol(const field_ptr& f, const std::string& name, std::optional<long long> idx) {
        auto g = f->gen_index(name);
        if (!g) return std::nullopt;
        return sym(f, *g, idx.value_or(0));
    }

    const field_ptr& field() const { return f_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_.begin()->first.empty() && t_.begin()->second == 1; }

    FT operator+(const FT& o) const {
        chk(o);
        Terms r = t_;
        const auto p = f_->p();
        for (const auto& [m, c] : o.t_) {
            auto& slot = r[m];
            slot = (slot + c) % p;
            if (!slot) r.erase(m);
        }
        return FT(f_, std::move(r));
    }
    FT operator-() const {
        Terms r;
        for (const auto& [m, c] : t_) r.emplace(m, (f_->p() - c) % f_->p());
        return FT(f_, std::move(r));
    }
    FT operator-(const FT& o) const { return *this + (-o); }
    FT operator*(const FT& o) const {
        chk(o);
        Terms r;
        const auto p = f_->p();
        for (const auto& [m1, c1] : t_)
            for (const auto& [m2, c2] : o.t_) {
                Mono m = mono_mul(m1, m2);
                auto& slot = r[m];
                slot = static_cast<std::uint32_t>((slot + std::uint64_t(c1) * c2) % p);
                if (!slot) r.erase(m);
            }
        return FT(f_, std::move(r));
    }
    FT operator/(const FT& o) const { return *this * o.inv(); }
    FT& operator+=(const FT& o) { return *this = *this + o; }
    FT& operator-=(const FT& o) { return *this = *this - o; }
    FT& operator*=(const FT& o) { return *this = *this * o; }
    bool operator==(const FT& o) const { return f_ == o.f_ && t_ == o.t_; }
    bool operator!=(const FT& o) const { return !(*this == o); }

    FT inv() const {
        if (is_zero()) throw DivisionByZero("inverse of zero in " + f_->header());
        if (t_.size() != 1) throw NonMonomialDenominator("cannot divide by " + str());
        const auto& [m, c] = *t_.begin();
        Mono r;
        for (const auto& [s, e] : m) {
            if (!f_->invertible(s.first)) throw NonMonomialDenominator("cannot divide by " + str());
            r.emplace_back(s, -e);
        }
        return FT(f_, {{r, detail::fp_inv(c, f_->p())}});
    }
    FT pow(long long e) const {
        FT b = e < 0 ? inv() : *this, r = one(f_);
        for (unsigned long long k = e < 0 ? -e : e; k; k >>= 1) {
            if (k & 1) r *= b;
            b *= b;
        }
        return r;
    }
    FT twist(long long i) const {
        if (i == 0) return *this;
        Terms r;
        for (const auto& [m, c] : t_) {
            Mono s = m;
            for (auto& [sy, e] : s) sy.second += i;
            r.emplace(std::move(s), c);
        }
        return FT(f_, std::move(r));
    }
    // index negation a[i] -> a[-i]; a field automorphism used by the sigma-side transport
    FT mirror() const {
        Terms r;
        for (const auto& [m, c] : t_) {
            Mono s = m;
            for (auto& [sy, e] : s) sy.second = -sy.second;
            std::sort(s.begin(), s.end());
            r.emplace(std::move(s), c);
        }
        return FT(f_, std::move(r));
    }

    std::string str() const {
        if (t_.empty()) return "0";
        // common denominator: most negative exponent of each symbol
        std::map<Sym, int> den;
        for (const auto& [m, c] : t_)
            for (const auto& [s, e] : m)
                if (e < 0) den[s] = std::max(den[s], -e);
        std::vector<std::pair<Mono, std::uint32_t>> num;
        Mono dm;
        for (const auto& [s, e] : den) dm.emplace_back(s, e);
        for (const auto& [m, c] : t_) num.emplace_back(mono_mul(m, dm), c);
        std::sort(num.begin(), num.end(), [](const auto& x, const auto& y) {
            const int dx = total(x.first), dy = total(y.first);
            if (dx != dy) return dx > dy;
            return x.first < y.first;
        });
        std::string n;
        for (const auto& [m, c] : num) {
            if (!n.empty()) n += " + ";
            const std::string ms = mono_str(m);
            if (ms.empty())
                n += std::to_string(c);
            else
                n += (c == 1 ? "" : std::to_string(c) + "*") + ms;
        }
        if (dm.empty()) return n;
        const std::string d = mono_str(dm);
        const bool dpar = dm.size() > 1;
        return (num.size() > 1 ? "(" + n + ")" : n) + "/" + (dpar ? "(" + d + ")" : d);
    }

   private:
    FT(field_ptr f, Terms t) : f_(std::move(f)), t_(std::move(t)) {}

    void chk(const FT& o) const {
        if (f_ != o.f_) throw MixedFields("operands belong to different formal twist fields");
    }
    static int total(const Mono& m) {
        int d = 0;
        for (const auto& [s, e] : m) d += e;
        return d;
    }
    static Mono mono_mul(const Mono& a, const Mono& b) {
        Mono r;
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
                r.push_back(a[i++]);
            } else if (i == a.size() || b[j].first < a[i].first) {
                r.push_back(b[j++]);
            } else {
                const int e = a[i].second + b[j].second;
                if (e) r.emplace_back(a[i].first, e);
                ++i;
                ++j;
            }
        }
        return r;
    }
    std::string mono_str(const Mono& m) const {
        std::string s;
        for (const auto& [sy, e] : m) {
            if (!s.empty()) s += "*";
            s += f_->gens()[sy.first];
            if (sy.second != 0) s += "[" + std::to_string(sy.second) + "]";
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

    field_ptr f_;
    Terms t_;
};

}  // namespace ftmod

#endif
