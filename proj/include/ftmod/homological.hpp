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

#ifndef FTMOD_HOMOLOGICAL_HPP
#define FTMOD_HOMOLOGICAL_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ext_structure.hpp"
#include "fp_linalg.hpp"

namespace ftmod {

template <class K>
struct ExtClass {
    TModule<K> source, target;
    SkewMatrix<K> canonical;
};

template <class K>
ExtClass<K> make_class(const SkewMatrix<K>& delta, const ReductionPlan<K>& plan) {
    return {plan.source(), plan.target(), reduce_canonical(delta, plan).canonical};
}

template <class K>
ExtClass<K> baer_sum(const ExtClass<K>& a, const ExtClass<K>& b) {
    if (!(a.source == b.source) || !(a.target == b.target)) throw MixedPairs("classes of different Ext groups");
    return make_class(a.canonical + b.canonical, ReductionPlan<K>(a.source, a.target));
}

template <class K>
SkewMatrix<K> baer_sum(const SkewMatrix<K>& d1, const SkewMatrix<K>& d2, const ReductionPlan<K>& plan) {
    return reduce_canonical(d1 + d2, plan).canonical;
}

// a * delta = class of Psi_a * delta
template <class K>
SkewMatrix<K> t_action(const std::vector<K>& a, const SkewMatrix<K>& delta, const ReductionPlan<K>& plan) {
    return reduce_canonical(plan.target().phi_a(a) * delta, plan).canonical;
}

// g : G -> source, result is a biderivation G -> target
template <class K>
SkewMatrix<K> pullback(const SkewMatrix<K>& delta, const SkewMatrix<K>& g, const TModule<K>& G,
                       const TModule<K>& source) {
    check_morphism(g, G, source);
    return delta * g;
}

// f : target -> G, result is a biderivation source -> G
template <class K>
SkewMatrix<K> pushout(const SkewMatrix<K>& delta, const SkewMatrix<K>& f, const TModule<K>& target,
                      const TModule<K>& G) {
    check_morphism(f, target, G);
    return f * delta;
}

namespace detail {

// F_p coordinates of the coefficients of degree <= maxdeg of every entry
inline void flatten_into(const SkewMatrix<GF>& m, int maxdeg, FpVec& out) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            for (int d = 0; d <= maxdeg; ++d) {
                const auto dg = m(i, j).coeff(d).digits();
                out.insert(out.end(), dg.begin(), dg.end());
            }
}

// F_p-linear map U -> image(U) on rows x cols matrices of degree <= bound, as columns
struct FpUnknown {
    int row, col, deg;
    GF value;
};

inline std::vector<FpUnknown> fp_unknowns(const GF::field_ptr& f, int rows, int cols, int bound) {
    std::vector<FpUnknown> u;
    const auto basis = GF::fp_basis(f);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            for (int d = 0; d <= bound; ++d)
                for (const auto& b : basis) u.push_back({i, j, d, b});
    return u;
}

inline SkewMatrix<GF> fp_assemble(const std::vector<FpUnknown>& u, const FpVec& x, const GF::field_ptr& f, Var v,
                                  int rows, int cols) {
    SkewMatrix<GF> m(f, v, rows, cols);
    for (std::size_t k = 0; k < u.size(); ++k)
        if (x[k]) m(u[k].row, u[k].col).add_term(u[k].deg, u[k].value * GF::from_int(f, x[k]));
    return m;
}

}  // namespace detail

// some U of degree <= bound with delta == delta^(U), by an F_p-linear solve
inline std::optional<SkewMatrix<GF>> bounded_inner_solve(const SkewMatrix<GF>& delta, const TModule<GF>& src,
                                                         const TModule<GF>& dst, int bound) {
    const auto f = src.field();
    const int maxdeg = bound + std::max(src.rank(), dst.rank());
    if (delta.degree() > maxdeg) return std::nullopt;
    const auto unk = detail::fp_unknowns(f, dst.dim(), src.dim(), bound);
    detail::FpVec target;
    detail::flatten_into(delta, maxdeg, target);
    detail::FpColumns cols(f->p(), target.size());
    for (const auto& u : unk) {
        SkewMatrix<GF> U(f, src.variable(), dst.dim(), src.dim());
        U(u.row, u.col) = SkewPoly<GF>::monomial(u.value, u.deg, src.variable());
        detail::FpVec c;
        detail::flatten_into(inner_biderivation(U, src, dst), maxdeg, c);
        cols.add(std::move(c));
    }
    if (auto x = cols.solve(target)) return detail::fp_assemble(unk, *x, f, src.variable(), dst.dim(), src.dim());
    return std::nullopt;
}

enum class SplitVerdict { split, not_split, inconclusive };

inline const char* verdict_name(SplitVerdict v) {
    switch (v) {
        case SplitVerdict::split: return "split";
        case SplitVerdict::not_split: return "not_split";
        default: return "inconclusive";
    }
}

template <class K>
struct SplitResult {
    SplitVerdict verdict;
    std::optional<SkewMatrix<K>> witness;  // delta == delta^(witness) when split
    int bound = -1;                        // search bound when a bounded solve was used
    std::string method;
};

// Split iff delta is inner.  Exact when a canonical form exists on the tau side or, for
// rk source < rk target over a perfect domain, on the sigma side; else a bounded solve.
template <class K>
SplitResult<K> is_split(const SkewMatrix<K>& delta, const TModule<K>& src, const TModule<K>& dst,
                        std::optional<int> bound = {}) {
    try {
        ReductionPlan<K> plan(src, dst);
        auto r = reduce_canonical(delta, plan);
        if (r.canonical.is_zero()) return {SplitVerdict::split, r.witness, -1, "canonical"};
        return {SplitVerdict::not_split, std::nullopt, -1, "canonical"};
    } catch (const UnsupportedRegime&) {
    } catch (const SingularLeading&) {
    }
    if (src.rank() < dst.rank()) {
        try {
            ReductionPlan<K> splan(adjoint_tmodule(dst), adjoint_tmodule(src));
            auto r = reduce_canonical(dual_class(delta), splan);
            if (!r.canonical.is_zero()) return {SplitVerdict::not_split, std::nullopt, -1, "dual canonical"};
            auto W = dual_witness(r.witness);
            if (inner_biderivation(W, src, dst) == delta) return {SplitVerdict::split, W, -1, "dual canonical"};
        } catch (const NotAQthPower&) {
        } catch (const UnsupportedRegime&) {
        } catch (const SingularLeading&) {
        }
    }
    const int B = bound.value_or(std::max(delta.degree(), 0) + std::max(src.rank(), dst.rank()));
    if constexpr (K::is_finite) {
        if (auto W = bounded_inner_solve(delta, src, dst, B)) return {SplitVerdict::split, *W, B, "bounded solve"};
    }
    return {SplitVerdict::inconclusive, std::nullopt, B, "bounded solve"};
}

template <class K>
struct HomSpace {
    TModule<K> source, target;
    int bound = 0;
    std::vector<SkewMatrix<K>> basis;  // F_p-basis
    bool complete = false;
};

// f : src -> dst with f*src_t == dst_t*f and deg f <= bound
template <class K>
HomSpace<K> hom_space(const TModule<K>& src, const TModule<K>& dst, int bound) {
    if (bound < 0) throw DimensionMismatch("bound must be nonnegative");
    HomSpace<K> h{src, dst, bound, {}, false};
    // top terms of f*src_t and dst_t*f cannot cancel when the larger rank side has invertible lead
    if ((src.rank() > dst.rank() && src.leading().inverse()) || (dst.rank() > src.rank() && dst.leading().inverse())) {
        h.complete = true;
        return h;
    }
    if constexpr (K::is_finite) {
        const auto f = src.field();
        const int maxdeg = bound + std::max(src.rank(), dst.rank());
        const auto unk = detail::fp_unknowns(f, dst.dim(), src.dim(), bound);
        std::vector<detail::FpVec> images;
        for (const auto& u : unk) {
            SkewMatrix<K> F(f, src.variable(), dst.dim(), src.dim());
            F(u.row, u.col) = SkewPoly<K>::monomial(u.value, u.deg, src.variable());
            detail::FpVec c;
            detail::flatten_into(morphism_residual(F, src, dst), maxdeg, c);
            images.push_back(std::move(c));
        }
        detail::FpColumns cols(f->p(), images.empty() ? 0 : images[0].size());
        for (auto& c : images) cols.add(std::move(c));
        for (const auto& x : cols.kernel())
            h.basis.push_back(detail::fp_assemble(unk, x, f, src.variable(), dst.dim(), src.dim()));
        return h;
    } else {
        throw UnboundedSearch("Hom search needs a finite coefficient field unless ranks force zero");
    }
}

// Maps of the six-term sequence attached to 0 -> F -> X -> E -> 0 (X = [[E,0],[delta,F]]) and G.
//   contravariant: Hom(E,G) -> Hom(X,G) -> Hom(F,G) -> Ext(E,G) -> Ext(X,G) -> Ext(F,G) -> 0
//   covariant:     Hom(G,F) -> Hom(G,X) -> Hom(G,E) -> Ext(G,F) -> Ext(G,X) -> Ext(G,E) -> 0
enum class SixTermVariant { contravariant, covariant };

template <class K>
class SixTerm {
   public:
    using Matrix = SkewMatrix<K>;
    using Map = std::function<Matrix(const Matrix&)>;

    SixTerm(const TModule<K>& E, const TModule<K>& F, const Matrix& delta, const TModule<K>& G, SixTermVariant v)
        : E_(E), F_(F), G_(G), delta_(delta), X_(assemble_extension(delta, E, F)), v_(v) {
        const auto f = E.field();
        const Var var = E.variable();
        pi_ = Matrix(f, var, E.dim(), X_.dim());
        incl_ = Matrix(f, var, X_.dim(), F.dim());
        pi_.set_block(0, 0, Matrix::identity(f, var, E.dim()));
        incl_.set_block(E.dim(), 0, Matrix::identity(f, var, F.dim()));
    }

    SixTermVariant variant() const { return v_; }
    const TModule<K>& middle() const { return X_; }
    const Matrix& pi() const { return pi_; }
    const Matrix& inclusion() const { return incl_; }

    // modules of the six nodes, in sequence order, as (source, target) pairs
    std::pair<TModule<K>, TModule<K>> node(int k) const {
        const bool co = v_ == SixTermVariant::contravariant;
        const TModule<K>* ord[3] = {&E_, &X_, &F_};
        if (!co) std::swap(ord[0], ord[2]);
        const TModule<K>& m = *ord[k % 3];
        return co ? std::make_pair(m, G_) : std::make_pair(G_, m);
    }

    // biderivation-level maps; Ext-level results are canonicalized in the node's group
    Matrix hom1(const Matrix& h) const { return co() ? h * pi_ : incl_ * h; }
    Matrix hom2(const Matrix& h) const { return co() ? h * incl_ : pi_ * h; }
    Matrix connecting(const Matrix& h) const { return canon(3, co() ? h * delta_ : delta_ * h); }
    Matrix ext1(const Matrix& x) const { return canon(4, co() ? -(x * pi_) : -(incl_ * x)); }
    Matrix ext2(const Matrix& x) const { return canon(5, co() ? -(x * incl_) : -(pi_ * x)); }

    BasisOrder order(int k) const {
        return co() && k % 3 == 1 ? BasisOrder::columns_descending : BasisOrder::column_major;
    }
    ExtStructure<K> ext_node(int k) const {
        auto [s, t] = node(k);
        return ext_structure(s, t, order(k));
    }

    // off-diagonal block of the middle Ext node's Pi_t (contravariant): rows of the first
    // Ext node against columns of the last one
    Matrix delta_block() const {
        if (!co()) throw UnsupportedRegime("delta block is defined for the contravariant sequence");
        const auto mid = ext_node(4);
        const int nl = ext_node(5).dim(), nf = ext_node(3).dim();
        return mid.pi_t.sub(nl, 0, nf, nl);
    }

   private:
    bool co() const { return v_ == SixTermVariant::contravariant; }
    Matrix canon(int k, const Matrix& m) const {
        auto [s, t] = node(k);
        return reduce_canonical(m, ReductionPlan<K>(s, t)).canonical;
    }

    TModule<K> E_, F_, G_;
    Matrix delta_;
    TModule<K> X_;
    SixTermVariant v_;
    Matrix pi_, incl_;
};

}  // namespace ftmod

#endif
