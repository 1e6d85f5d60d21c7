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

#ifndef FTMOD_SKEWPOLY_HPP
#define FTMOD_SKEWPOLY_HPP

#include <algorithm>
#include <climits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ftmod {

enum class Var { tau, sigma };

inline const char* var_name(Var v) { return v == Var::tau ? "tau" : "sig"; }
inline Var flip(Var v) { return v == Var::tau ? Var::sigma : Var::tau; }
// tau*c = c^(1)*tau and sig*c = c^(-1)*sig
inline int twist_sign(Var v) { return v == Var::tau ? 1 : -1; }

// Twisted polynomial sum a_i v^i, terms kept in increasing degree with nonzero coefficients.
template <class K>
class SkewPoly {
   public:
    using field_ptr = typename K::field_ptr;
    static constexpr int minus_infinity = INT_MIN;

    SkewPoly() = default;
    SkewPoly(field_ptr f, Var v) : f_(std::move(f)), v_(v) {}

    static SkewPoly constant(const K& c, Var v) { return monomial(c, 0, v); }
    static SkewPoly monomial(const K& c, int deg, Var v) {
        SkewPoly r(c.field(), v);
        if (deg < 0) throw DimensionMismatch("negative degree");
        if (!c.is_zero()) r.t_.emplace_back(deg, c);
        return r;
    }
    static SkewPoly var(const field_ptr& f, Var v, int deg = 1) { return monomial(K::one(f), deg, v); }
    static SkewPoly from_terms(const field_ptr& f, Var v, std::vector<std::pair<int, K>> terms) {
        SkewPoly r(f, v);
        for (auto& [d, c] : terms) r.add_term(d, c);
        return r;
    }

    const field_ptr& field() const { return f_; }
    Var variable() const { return v_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const { return t_.empty() ? minus_infinity : t_.back().first; }
    int low_degree() const { return t_.empty() ? minus_infinity : t_.front().first; }
    const std::vector<std::pair<int, K>>& terms() const { return t_; }

    K coeff(int d) const {
        auto it = std::lower_bound(t_.begin(), t_.end(), d, [](const auto& a, int x) { return a.first < x; });
        return it != t_.end() && it->first == d ? it->second : K::zero(f_);
    }
    K lead() const { return t_.empty() ? K::zero(f_) : t_.back().second; }

    void add_term(int d, const K& c) {
        if (c.is_zero()) return;
        auto it = std::lower_bound(t_.begin(), t_.end(), d, [](const auto& a, int x) { return a.first < x; });
        if (it != t_.end() && it->first == d) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        } else {
            t_.insert(it, {d, c});
        }
    }

    SkewPoly operator+(const SkewPoly& o) const {
        chk(o);
        SkewPoly r(f_, v_);
        std::size_t i = 0, j = 0;
        while (i < t_.size() || j < o.t_.size()) {
            if (j == o.t_.size() || (i < t_.size() && t_[i].first < o.t_[j].first)) {
                r.t_.push_back(t_[i++]);
            } else if (i == t_.size() || o.t_[j].first < t_[i].first) {
                r.t_.push_back(o.t_[j++]);
            } else {
                K c = t_[i].second + o.t_[j].second;
                if (!c.is_zero()) r.t_.emplace_back(t_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return r;
    }
    SkewPoly operator-() const {
        SkewPoly r(f_, v_);
        for (const auto& [d, c] : t_) r.t_.emplace_back(d, -c);
        return r;
    }
    SkewPoly operator-(const SkewPoly& o) const { return *this + (-o); }
    SkewPoly operator*(const SkewPoly& o) const {
        chk(o);
        SkewPoly r(f_, v_);
        const int s = twist_sign(v_);
        for (const auto& [i, a] : t_)
            for (const auto& [j, b] : o.t_) r.add_term(i + j, a * b.twist(s * static_cast<long long>(i)));
        return r;
    }
    SkewPoly& operator+=(const SkewPoly& o) { return *this = *this + o; }
    SkewPoly& operator-=(const SkewPoly& o) { return *this = *this - o; }
    SkewPoly& operator*=(const SkewPoly& o) { return *this = *this * o; }

    // left multiplication by a constant
    friend SkewPoly operator*(const K& c, const SkewPoly& w) {
        SkewPoly r(w.f_, w.v_);
        if (c.is_zero()) return r;
        for (const auto& [d, a] : w.t_) r.t_.emplace_back(d, c * a);
        return r;
    }

    bool operator==(const SkewPoly& o) const { return v_ == o.v_ && f_ == o.f_ && t_ == o.t_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    // ascending v-degree: "th + 2*tau + tau^3"
    std::string str() const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [d, c] : t_) {
            if (!s.empty()) s += " + ";
            std::string cs = c.str();
            if (d == 0) {
                s += cs;
                continue;
            }
            const std::string vs = d == 1 ? var_name(v_) : std::string(var_name(v_)) + "^" + std::to_string(d);
            if (c.is_one()) {
                s += vs;
                continue;
            }
            if (cs.find_first_of(" /") != std::string::npos) cs = "(" + cs + ")";
            s += cs + "*" + vs;
        }
        return s;
    }

   private:
    void chk(const SkewPoly& o) const {
        if (f_ != o.f_) throw MixedFields("skew polynomials over different fields");
        if (v_ != o.v_) throw MixedFields("skew polynomials in different variables");
    }

    field_ptr f_;
    Var v_ = Var::tau;
    std::vector<std::pair<int, K>> t_;
};

// eval_linear: sum a_i c^(i) for tau, sum a_i c^(-i) for sigma
template <class K>
K eval_linear(const SkewPoly<K>& w, const K& c) {
    K r = K::zero(w.field());
    const int s = twist_sign(w.variable());
    for (const auto& [d, a] : w.terms()) r += a * c.twist(s * static_cast<long long>(d));
    return r;
}

// (sum a_i tau^i)^sigma = sum a_i^(-i) sigma^i and the inverse map sigma -> tau
template <class K>
SkewPoly<K> adjoint_poly(const SkewPoly<K>& w) {
    const Var nv = flip(w.variable());
    SkewPoly<K> r(w.field(), nv);
    const int s = w.variable() == Var::tau ? -1 : 1;
    for (const auto& [d, a] : w.terms()) r.add_term(d, a.twist(s * static_cast<long long>(d)));
    return r;
}

// Dense matrix over K (no twisting variable).
template <class K>
class ConstMatrix {
   public:
    using field_ptr = typename K::field_ptr;

    ConstMatrix() = default;
    ConstMatrix(field_ptr f, int r, int c) : f_(f), r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, K::zero(f)) {}
    static ConstMatrix identity(const field_ptr& f, int n) {
        ConstMatrix m(f, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K::one(f);
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    const field_ptr& field() const { return f_; }
    K& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const K& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    ConstMatrix operator*(const ConstMatrix& o) const {
        if (c_ != o.r_) throw DimensionMismatch("constant matrix product");
        ConstMatrix m(f_, r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                if ((*this)(i, k).is_zero()) continue;
                for (int j = 0; j < o.c_; ++j) m(i, j) += (*this)(i, k) * o(k, j);
            }
        return m;
    }
    ConstMatrix operator-(const ConstMatrix& o) const {
        ConstMatrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }
    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const K& x) { return x.is_zero(); });
    }
    bool row_is_zero(int i) const {
        for (int j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero()) return false;
        return true;
    }
    bool operator==(const ConstMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }

    // Gauss-Jordan; empty optional when singular
    std::optional<ConstMatrix> inverse() const {
        if (r_ != c_) throw DimensionMismatch("inverse of a non-square matrix");
        const int n = r_;
        ConstMatrix a = *this, b = identity(f_, n);
        for (int col = 0; col < n; ++col) {
            int piv = -1;
            for (int i = col; i < n; ++i)
                if (!a(i, col).is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return std::nullopt;
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(b(col, j), b(piv, j));
            }
            const K inv = a(col, col).inv();
            for (int j = 0; j < n; ++j) {
                a(col, j) *= inv;
                b(col, j) *= inv;
            }
            for (int i = 0; i < n; ++i) {
                if (i == col || a(i, col).is_zero()) continue;
                const K f = a(i, col);
                for (int j = 0; j < n; ++j) {
                    a(i, j) -= f * a(col, j);
                    b(i, j) -= f * b(col, j);
                }
            }
        }
        return b;
    }

   private:
    field_ptr f_;
    int r_ = 0, c_ = 0;
    std::vector<K> a_;
};

template <class K>
class SkewMatrix {
   public:
    using field_ptr = typename K::field_ptr;
    using Poly = SkewPoly<K>;

    SkewMatrix() = default;
    SkewMatrix(field_ptr f, Var v, int r, int c)
        : f_(f), v_(v), r_(r), c_(c), a_(static_cast<std::size_t>(r) * c, Poly(f, v)) {
        if (r < 0 || c < 0) throw DimensionMismatch("negative matrix size");
    }
    static SkewMatrix identity(const field_ptr& f, Var v, int n) {
        SkewMatrix m(f, v, n, n);
        for (int i = 0; i < n; ++i) m(i, i) = Poly::constant(K::one(f), v);
        return m;
    }
    static SkewMatrix scalar(const Poly& p) {
        SkewMatrix m(p.field(), p.variable(), 1, 1);
        m(0, 0) = p;
        return m;
    }
    static SkewMatrix from_const(const ConstMatrix<K>& c, Var v) {
        SkewMatrix m(c.field(), v, c.rows(), c.cols());
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) m(i, j) = Poly::constant(c(i, j), v);
        return m;
    }
    static SkewMatrix from_rows(const field_ptr& f, Var v, const std::vector<std::vector<Poly>>& rows) {
        const int r = static_cast<int>(rows.size());
        const int c = r ? static_cast<int>(rows[0].size()) : 0;
        SkewMatrix m(f, v, r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[i].size()) != c) throw DimensionMismatch("ragged matrix rows");
            for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
        }
        return m;
    }
    // [[A, B], [C, D]]
    static SkewMatrix block(const SkewMatrix& A, const SkewMatrix& B, const SkewMatrix& C, const SkewMatrix& D) {
        if (A.r_ != B.r_ || C.r_ != D.r_ || A.c_ != C.c_ || B.c_ != D.c_)
            throw DimensionMismatch("block sizes do not fit");
        SkewMatrix m(A.f_, A.v_, A.r_ + C.r_, A.c_ + B.c_);
        m.set_block(0, 0, A);
        m.set_block(0, A.c_, B);
        m.set_block(A.r_, 0, C);
        m.set_block(A.r_, A.c_, D);
        return m;
    }

    const field_ptr& field() const { return f_; }
    Var variable() const { return v_; }
    int rows() const { return r_; }
    int cols() const { return c_; }
    Poly& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
    const Poly& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

    SkewMatrix operator+(const SkewMatrix& o) const {
        same_shape(o);
        SkewMatrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] += o.a_[i];
        return m;
    }
    SkewMatrix operator-(const SkewMatrix& o) const {
        same_shape(o);
        SkewMatrix m = *this;
        for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] -= o.a_[i];
        return m;
    }
    SkewMatrix operator-() const {
        SkewMatrix m = *this;
        for (auto& x : m.a_) x = -x;
        return m;
    }
    SkewMatrix operator*(const SkewMatrix& o) const {
        if (c_ != o.r_) throw DimensionMismatch("matrix product " + shape() + " * " + o.shape());
        if (v_ != o.v_) throw MixedFields("matrices in different variables");
        SkewMatrix m(f_, v_, r_, o.c_);
        for (int i = 0; i < r_; ++i)
            for (int k = 0; k < c_; ++k) {
                const Poly& x = (*this)(i, k);
                if (x.is_zero()) continue;
                for (int j = 0; j < o.c_; ++j)
                    if (!o(k, j).is_zero()) m(i, j) += x * o(k, j);
            }
        return m;
    }
    // entrywise left multiplication by a skew polynomial
    friend SkewMatrix operator*(const Poly& p, const SkewMatrix& M) {
        SkewMatrix m = M;
        for (auto& x : m.a_) x = p * x;
        return m;
    }
    SkewMatrix& operator+=(const SkewMatrix& o) { return *this = *this + o; }
    SkewMatrix& operator-=(const SkewMatrix& o) { return *this = *this - o; }

    bool operator==(const SkewMatrix& o) const {
        return r_ == o.r_ && c_ == o.c_ && v_ == o.v_ && a_ == o.a_;
    }
    bool operator!=(const SkewMatrix& o) const { return !(*this == o); }

    bool is_zero() const {
        return std::all_of(a_.begin(), a_.end(), [](const Poly& p) { return p.is_zero(); });
    }
    int degree() const {
        int d = Poly::minus_infinity;
        for (const auto& x : a_) d = std::max(d, x.degree());
        return d;
    }
    SkewMatrix transpose() const {
        SkewMatrix m(f_, v_, c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
        return m;
    }
    ConstMatrix<K> coeff(int d) const {
        ConstMatrix<K> m(f_, r_, c_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).coeff(d);
        return m;
    }
    SkewMatrix sub(int r0, int c0, int nr, int nc) const {
        if (r0 < 0 || c0 < 0 || r0 + nr > r_ || c0 + nc > c_) throw DimensionMismatch("submatrix out of range");
        SkewMatrix m(f_, v_, nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
        return m;
    }
    void set_block(int r0, int c0, const SkewMatrix& b) {
        if (r0 + b.r_ > r_ || c0 + b.c_ > c_) throw DimensionMismatch("block out of range");
        for (int i = 0; i < b.r_; ++i)
            for (int j = 0; j < b.c_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

    std::string shape() const { return std::to_string(r_) + "x" + std::to_string(c_); }
    // row-major "[[a, b], [c, d]]"
    std::string str() const {
        std::string s = "[";
        for (int i = 0; i < r_; ++i) {
            s += i ? ", [" : "[";
            for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).str();
            s += "]";
        }
        return s + "]";
    }

   private:
    void same_shape(const SkewMatrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw DimensionMismatch("shapes " + shape() + " and " + o.shape());
        if (v_ != o.v_) throw MixedFields("matrices in different variables");
    }

    field_ptr f_;
    Var v_ = Var::tau;
    int r_ = 0, c_ = 0;
    std::vector<Poly> a_;
};

// entry (i,j) of the result is (X_{j,i})^sigma (or ^tau for sigma input)
template <class K>
SkewMatrix<K> adjoint_matrix(const SkewMatrix<K>& X) {
    SkewMatrix<K> m(X.field(), flip(X.variable()), X.cols(), X.rows());
    for (int i = 0; i < X.rows(); ++i)
        for (int j = 0; j < X.cols(); ++j) m(j, i) = adjoint_poly(X(i, j));
    return m;
}

}  // namespace ftmod

#endif
