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

#ifndef FTMOD_TMODULE_HPP
#define FTMOD_TMODULE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "skewpoly.hpp"

namespace ftmod {

// Phi_t = (th*I + N) v^0 + sum M_i v^i, N nilpotent.  Points are column vectors and
// a morphism f : src -> dst is a dst.dim x src.dim matrix with f*src_t == dst_t*f.
template <class K>
class TModule {
   public:
    using field_ptr = typename K::field_ptr;
    using Poly = SkewPoly<K>;
    using Matrix = SkewMatrix<K>;

    TModule() = default;
    explicit TModule(Matrix phi_t) : t_(std::move(phi_t)) {
        if (t_.rows() != t_.cols()) throw DimensionMismatch("Phi_t must be square, got " + t_.shape());
        const int d = t_.rows();
        n_ = t_.coeff(0) - scalar_diag(K::theta(t_.field()), d);
        ConstMatrix<K> p = ConstMatrix<K>::identity(t_.field(), d);
        for (int i = 0; i < d; ++i) p = p * n_;
        if (!p.is_zero()) throw NotNilpotent("constant term minus th*I is not nilpotent");
        rank_ = d ? std::max(t_.degree(), 0) : 0;
    }

    const field_ptr& field() const { return t_.field(); }
    Var variable() const { return t_.variable(); }
    int dim() const { return t_.rows(); }
    int rank() const { return rank_; }
    const Matrix& phi_t() const { return t_; }
    const ConstMatrix<K>& nilpotent() const { return n_; }
    ConstMatrix<K> leading() const { return t_.coeff(rank_); }
    bool is_drinfeld() const { return dim() == 1 && rank_ >= 1 && n_.is_zero(); }

    // image of a = sum a_i t^i, coefficients low degree first; they must lie in F_q
    Matrix phi_a(const std::vector<K>& a) const {
        for (const auto& c : a)
            if (c.twist(1) != c) throw NotInConstantField(c.str() + " is not in F_q");
        Matrix r(field(), variable(), dim(), dim());
        for (auto it = a.rbegin(); it != a.rend(); ++it)
            r = r * t_ + Poly::constant(*it, variable()) * Matrix::identity(field(), variable(), dim());
        return r;
    }

    bool operator==(const TModule& o) const { return t_ == o.t_; }
    std::string str() const { return dim() == 1 ? t_(0, 0).str() : t_.str(); }

   private:
    static ConstMatrix<K> scalar_diag(const K& c, int d) {
        ConstMatrix<K> m(c.field(), d, d);
        for (int i = 0; i < d; ++i) m(i, i) = c;
        return m;
    }

    Matrix t_;
    ConstMatrix<K> n_;
    int rank_ = 0;
};

// th + sum coeffs[i-1] v^i
template <class K>
TModule<K> make_drinfeld(const typename K::field_ptr& f, const std::vector<K>& coeffs, Var v = Var::tau) {
    if (coeffs.empty()) throw RankZero("a Drinfeld module needs positive rank");
    if (coeffs.back().is_zero()) throw ZeroLeading("leading coefficient is zero");
    auto p = SkewPoly<K>::constant(K::theta(f), v);
    for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i) + 1, coeffs[i]);
    return TModule<K>(SkewMatrix<K>::scalar(p));
}

template <class K>
TModule<K> drinfeld_from_poly(const SkewPoly<K>& p) {
    if (p.coeff(0) != K::theta(p.field())) throw NotNilpotent("Drinfeld module constant term must be th");
    if (p.degree() < 1) throw RankZero("a Drinfeld module needs positive rank");
    return TModule<K>(SkewMatrix<K>::scalar(p));
}

// G_a^s with t acting by th
template <class K>
TModule<K> trivial_module(const typename K::field_ptr& f, int s, Var v = Var::tau) {
    return TModule<K>(SkewPoly<K>::constant(K::theta(f), v) * SkewMatrix<K>::identity(f, v, s));
}

// C^(e): th*I_e + N_e (superdiagonal) + E_{e,1} tau
template <class K>
TModule<K> carlitz_tensor(const typename K::field_ptr& f, int e, Var v = Var::tau) {
    if (e < 1) throw DimensionMismatch("tensor power must be positive");
    SkewMatrix<K> m(f, v, e, e);
    for (int i = 0; i < e; ++i) m(i, i) = SkewPoly<K>::constant(K::theta(f), v);
    for (int i = 0; i + 1 < e; ++i) m(i, i + 1) = SkewPoly<K>::constant(K::one(f), v);
    m(e - 1, 0) += SkewPoly<K>::var(f, v);
    return TModule<K>(m);
}

// (Phi^sigma)_t = [(Phi_t)^sigma]^T; applied to a sigma module this is the inverse map
template <class K>
TModule<K> adjoint_tmodule(const TModule<K>& M) {
    return TModule<K>(adjoint_matrix(M.phi_t()));
}

template <class K>
SkewMatrix<K> morphism_residual(const SkewMatrix<K>& f, const TModule<K>& src, const TModule<K>& dst) {
    if (f.rows() != dst.dim() || f.cols() != src.dim())
        throw DimensionMismatch("morphism " + f.shape() + " between dims " + std::to_string(src.dim()) + " and " +
                                std::to_string(dst.dim()));
    return f * src.phi_t() - dst.phi_t() * f;
}

template <class K>
struct TModMorphism {
    TModule<K> source, target;
    SkewMatrix<K> f;
};

template <class K>
TModMorphism<K> check_morphism(const SkewMatrix<K>& f, const TModule<K>& src, const TModule<K>& dst) {
    auto r = morphism_residual(f, src, dst);
    if (!r.is_zero()) throw NotAMorphism("f*src_t - dst_t*f = " + r.str());
    return {src, dst, f};
}

template <class K>
bool is_morphism(const SkewMatrix<K>& f, const TModule<K>& src, const TModule<K>& dst) {
    return morphism_residual(f, src, dst).is_zero();
}

}  // namespace ftmod

#endif
