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

#ifndef FTMOD_BIDERIVATION_HPP
#define FTMOD_BIDERIVATION_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "tmodule.hpp"

namespace ftmod {

// delta^(U)(t) = U*Phi_t - Psi_t*U for U : src -> dst (dst.dim x src.dim)
template <class K>
SkewMatrix<K> inner_biderivation(const SkewMatrix<K>& U, const TModule<K>& src, const TModule<K>& dst) {
    if (U.rows() != dst.dim() || U.cols() != src.dim())
        throw DimensionMismatch("U is " + U.shape() + ", expected " + std::to_string(dst.dim()) + "x" +
                                std::to_string(src.dim()));
    return U * src.phi_t() - dst.phi_t() * U;
}

// Gamma_t = [[Phi_t, 0], [delta, Psi_t]]
template <class K>
TModule<K> assemble_extension(const SkewMatrix<K>& delta, const TModule<K>& src, const TModule<K>& dst) {
    if (delta.rows() != dst.dim() || delta.cols() != src.dim()) throw DimensionMismatch("delta is " + delta.shape());
    SkewMatrix<K> zero(src.field(), src.variable(), src.dim(), dst.dim());
    return TModule<K>(SkewMatrix<K>::block(src.phi_t(), zero, delta, dst.phi_t()));
}

enum class Regime { leading, triangular };

// Which inner biderivations are subtracted and in what order.
//   leading:    A_n invertible, B = A_n^-1, every column bounded by n, all columns reduced together
//   triangular: Phi_t lower triangular, B = diag(1/lead Phi_jj), column j bounded by deg Phi_jj,
//               columns reduced one at a time from the last to the first
// Killing entry (i,j) at degree D subtracts delta^(U) with U = x v^k E_ij B, k = D - bound_j.
template <class K>
class ReductionPlan {
   public:
    using Poly = SkewPoly<K>;
    using Matrix = SkewMatrix<K>;

    ReductionPlan() = default;
    ReductionPlan(TModule<K> src, TModule<K> dst) : src_(std::move(src)), dst_(std::move(dst)) {
        if (src_.field() != dst_.field()) throw MixedFields("source and target over different fields");
        if (src_.variable() != dst_.variable()) throw MixedFields("source and target in different variables");
        const int d = src_.dim();
        const auto f = src_.field();
        if (d == 0 || dst_.dim() == 0) {
            regime_ = Regime::leading;
            B_ = ConstMatrix<K>::identity(f, d);
            bound_.assign(d, src_.rank());
            H_ = src_.phi_t();
            return;
        }
        if (dst_.rank() >= src_.rank())
            throw UnsupportedRegime("need rk source > rk target (got " + std::to_string(src_.rank()) +
                                    " <= " + std::to_string(dst_.rank()) +
                                    "); for rk source < rk target use the dual structure (ext-dual)");
        if (auto inv = src_.leading().inverse()) {
            regime_ = Regime::leading;
            B_ = *inv;
            bound_.assign(d, src_.rank());
        } else if (lower_triangular()) {
            regime_ = Regime::triangular;
            B_ = ConstMatrix<K>(f, d, d);
            int lo = src_.rank();
            for (int j = 0; j < d; ++j) {
                const auto& p = src_.phi_t()(j, j);
                bound_.push_back(p.degree());
                lo = std::min(lo, p.degree());
                B_(j, j) = p.lead().inv();
            }
            if (lo < 1 || dst_.rank() >= lo)
                throw UnsupportedRegime("triangular source needs every diagonal rank above rk target");
        } else {
            throw SingularLeading("leading matrix of the source is not invertible");
        }
        H_ = Matrix::from_const(B_, src_.variable()) * src_.phi_t();
    }

    const TModule<K>& source() const { return src_; }
    const TModule<K>& target() const { return dst_; }
    Regime regime() const { return regime_; }
    const std::vector<int>& bounds() const { return bound_; }
    const ConstMatrix<K>& B() const { return B_; }
    // B*Phi_t
    const Matrix& H() const { return H_; }

    // groups of columns reduced together, in processing order
    std::vector<std::vector<int>> column_groups() const {
        std::vector<std::vector<int>> g;
        const int d = src_.dim();
        if (regime_ == Regime::leading) {
            std::vector<int> all(d);
            for (int j = 0; j < d; ++j) all[j] = j;
            g.push_back(all);
        } else {
            for (int j = d - 1; j >= 0; --j) g.push_back({j});
        }
        return g;
    }

    // U = x v^k E_ij B
    Matrix killer(int i, int j, int k, const K& x) const {
        const Var v = src_.variable();
        Matrix U(src_.field(), v, dst_.dim(), src_.dim());
        const long long s = twist_sign(v) * static_cast<long long>(k);
        for (int l = 0; l < src_.dim(); ++l)
            if (!B_(j, l).is_zero()) U(i, l) = Poly::monomial(x * B_(j, l).twist(s), k, v);
        return U;
    }

   private:
    bool lower_triangular() const {
        const auto& m = src_.phi_t();
        for (int i = 0; i < m.rows(); ++i)
            for (int j = i + 1; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) return false;
        return true;
    }

    TModule<K> src_, dst_;
    Regime regime_ = Regime::leading;
    ConstMatrix<K> B_;
    std::vector<int> bound_;
    Matrix H_;
};

template <class K>
struct Reduction {
    SkewMatrix<K> canonical;
    SkewMatrix<K> witness;  // delta - delta^(witness) == canonical
};

template <class K>
Reduction<K> reduce_canonical(const SkewMatrix<K>& delta, const ReductionPlan<K>& plan) {
    const auto& src = plan.source();
    const auto& dst = plan.target();
    if (delta.rows() != dst.dim() || delta.cols() != src.dim())
        throw DimensionMismatch("delta is " + delta.shape() + ", expected " + std::to_string(dst.dim()) + "x" +
                                std::to_string(src.dim()));
    Reduction<K> r{delta, SkewMatrix<K>(src.field(), src.variable(), dst.dim(), src.dim())};
    for (const auto& group : plan.column_groups()) {
        if (group.empty()) continue;
        for (;;) {
            int D = SkewPoly<K>::minus_infinity;
            for (int j : group)
                for (int i = 0; i < dst.dim(); ++i) D = std::max(D, r.canonical(i, j).degree());
            const int bound = plan.bounds()[group.front()];
            if (D < bound) break;
            for (int j : group)
                for (int i = 0; i < dst.dim(); ++i) {
                    const K x = r.canonical(i, j).coeff(D);
                    if (x.is_zero()) continue;
                    const auto U = plan.killer(i, j, D - bound, x);
                    r.canonical -= inner_biderivation(U, src, dst);
                    r.witness += U;
                }
        }
    }
    return r;
}

template <class K>
Reduction<K> reduce_canonical(const SkewMatrix<K>& delta, const TModule<K>& src, const TModule<K>& dst) {
    return reduce_canonical(delta, ReductionPlan<K>(src, dst));
}

// Generator c*v^deg*E_{row,col}.
struct Label {
    int row = 0, col = 0, deg = 0;
    auto operator<=>(const Label&) const = default;
    std::string str() const {
        return "(" + std::to_string(row) + "," + std::to_string(col) + "," + std::to_string(deg) + ")";
    }
};

// Coefficient of the reduced Psi_t*(c v^l E_ij) at each position, as a skew polynomial
// evaluated at the symbolic scalar c.  steps lists the subtracted U = x v^k E_ij B with
// x given by its tracker.
template <class K>
struct TrackedVector {
    struct Step {
        int row, col, k;
        SkewPoly<K> x;
    };
    std::map<Label, SkewPoly<K>> slots;
    std::vector<Step> steps;

    SkewPoly<K> at(const Label& a, const typename K::field_ptr& f, Var v) const {
        auto it = slots.find(a);
        return it == slots.end() ? SkewPoly<K>(f, v) : it->second;
    }
};

template <class K>
TrackedVector<K> tracked_reduce(const Label& gen, const ReductionPlan<K>& plan) {
    using Poly = SkewPoly<K>;
    const auto& src = plan.source();
    const auto& dst = plan.target();
    const auto f = src.field();
    const Var v = src.variable();
    const int e = dst.dim(), d = src.dim();
    const int sg = twist_sign(v);
    if (gen.row < 0 || gen.row >= e || gen.col < 0 || gen.col >= d || gen.deg < 0 ||
        gen.deg >= plan.bounds()[gen.col])
        throw DimensionMismatch("generator " + gen.str() + " outside the canonical range");

    TrackedVector<K> tv;
    auto add = [&](const Label& a, const Poly& w) {
        if (w.is_zero()) return;
        auto it = tv.slots.find(a);
        if (it == tv.slots.end()) {
            tv.slots.emplace(a, w);
        } else {
            it->second += w;
            if (it->second.is_zero()) tv.slots.erase(it);
        }
    };

    // Psi_t * c v^l: coefficient p_m c^(m) at v^(m+l)
    for (int r = 0; r < e; ++r)
        for (const auto& [m, p] : dst.phi_t()(r, gen.row).terms()) add({r, gen.col, m + gen.deg}, Poly::monomial(p, m, v));

    for (const auto& group : plan.column_groups()) {
        if (group.empty()) continue;
        const int bound = plan.bounds()[group.front()];
        for (;;) {
            int D = Poly::minus_infinity;
            for (const auto& [a, w] : tv.slots)
                if (std::find(group.begin(), group.end(), a.col) != group.end()) D = std::max(D, a.deg);
            if (D < bound) break;
            for (int j : group)
                for (int i = 0; i < e; ++i) {
                    auto it = tv.slots.find({i, j, D});
                    if (it == tv.slots.end()) continue;
                    const Poly w = it->second;
                    const int k = D - bound;
                    tv.steps.push_back({i, j, k, w});
                    // - U*Phi_t: row i gets x * (row j of H) shifted by v^k
                    for (int l = 0; l < d; ++l)
                        for (const auto& [m, h] : plan.H()(j, l).terms())
                            add({i, l, k + m}, -(h.twist(sg * static_cast<long long>(k)) * w));
                    // + Psi_t*U: position (r,l) gets p_m x^(m) B_jl^(m+k) v^(m+k)
                    for (int r = 0; r < e; ++r)
                        for (const auto& [m, p] : dst.phi_t()(r, i).terms())
                            for (int l = 0; l < d; ++l) {
                                const K& b = plan.B()(j, l);
                                if (b.is_zero()) continue;
                                const K c = p * b.twist(sg * static_cast<long long>(m + k));
                                add({r, l, m + k}, c * (Poly::var(f, v, m) * w));
                            }
                }
        }
    }
    return tv;
}

// evaluate every tracker at c and place it in a dst.dim x src.dim matrix
template <class K>
SkewMatrix<K> specialize(const TrackedVector<K>& tv, const K& c, const ReductionPlan<K>& plan) {
    const auto& src = plan.source();
    SkewMatrix<K> m(src.field(), src.variable(), plan.target().dim(), src.dim());
    for (const auto& [a, w] : tv.slots) m(a.row, a.col).add_term(a.deg, eval_linear(w, c));
    return m;
}

template <class K>
SkewMatrix<K> specialize_witness(const TrackedVector<K>& tv, const K& c, const ReductionPlan<K>& plan) {
    SkewMatrix<K> W(plan.source().field(), plan.source().variable(), plan.target().dim(), plan.source().dim());
    for (const auto& s : tv.steps) W += plan.killer(s.row, s.col, s.k, eval_linear(s.x, c));
    return W;
}

}  // namespace ftmod

#endif
