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

#ifndef FTMOD_EXT_STRUCTURE_HPP
#define FTMOD_EXT_STRUCTURE_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "biderivation.hpp"

namespace ftmod {

// column_major:       (col, row, deg)  products and t-module sources
// row_major:          (row, col, deg)  Carlitz tensor targets
// columns_descending: (last col first, row, deg)  triangular sources built as extensions
enum class BasisOrder { column_major, row_major, columns_descending };

inline const char* order_name(BasisOrder o) {
    switch (o) {
        case BasisOrder::column_major: return "column_major";
        case BasisOrder::row_major: return "row_major";
        default: return "columns_descending";
    }
}

template <class K>
struct ExtStructure {
    using Poly = SkewPoly<K>;
    using Matrix = SkewMatrix<K>;

    ReductionPlan<K> plan;
    BasisOrder order = BasisOrder::column_major;
    std::vector<Label> basis;
    Matrix pi_t;
    std::vector<TrackedVector<K>> tracked;  // one per basis element, same order
    std::vector<int> ga_coords;             // basis positions projected onto G_a^s

    const TModule<K>& source() const { return plan.source(); }
    const TModule<K>& target() const { return plan.target(); }
    Var variable() const { return plan.source().variable(); }
    const typename K::field_ptr& field() const { return plan.source().field(); }
    int dim() const { return static_cast<int>(basis.size()); }
    int ga_rank() const { return static_cast<int>(ga_coords.size()); }
    TModule<K> as_tmodule() const { return TModule<K>(pi_t); }

    int index(const Label& a) const {
        auto it = std::find(basis.begin(), basis.end(), a);
        if (it == basis.end()) throw DimensionMismatch("label " + a.str() + " not in basis");
        return static_cast<int>(it - basis.begin());
    }

    // coordinates of a canonical representative
    std::vector<K> coords(const Matrix& canonical) const {
        std::vector<K> x;
        x.reserve(basis.size());
        for (const auto& a : basis) x.push_back(canonical(a.row, a.col).coeff(a.deg));
        for (int i = 0; i < canonical.rows(); ++i)
            for (int j = 0; j < canonical.cols(); ++j)
                if (canonical(i, j).degree() >= plan.bounds()[j])
                    throw DimensionMismatch("matrix is not in canonical form");
        return x;
    }
    Matrix from_coords(const std::vector<K>& x) const {
        if (x.size() != basis.size()) throw DimensionMismatch("coordinate vector length");
        Matrix m(field(), variable(), target().dim(), source().dim());
        for (std::size_t b = 0; b < basis.size(); ++b) m(basis[b].row, basis[b].col).add_term(basis[b].deg, x[b]);
        return m;
    }
};

// out_a = sum_b eval(M_ab, x_b): the action of an operator matrix on points
template <class K>
std::vector<K> apply_matrix(const SkewMatrix<K>& M, const std::vector<K>& x) {
    if (static_cast<int>(x.size()) != M.cols()) throw DimensionMismatch("point length vs matrix columns");
    std::vector<K> out;
    out.reserve(M.rows());
    for (int a = 0; a < M.rows(); ++a) {
        K s = K::zero(M.field());
        for (int b = 0; b < M.cols(); ++b)
            if (!M(a, b).is_zero()) s += eval_linear(M(a, b), x[b]);
        out.push_back(s);
    }
    return out;
}

template <class K>
std::vector<Label> make_basis(const ReductionPlan<K>& plan, BasisOrder order) {
    std::vector<Label> b;
    const int e = plan.target().dim(), d = plan.source().dim();
    auto push = [&](int i, int j) {
        for (int l = 0; l < plan.bounds()[j]; ++l) b.push_back({i, j, l});
    };
    switch (order) {
        case BasisOrder::column_major:
            for (int j = 0; j < d; ++j)
                for (int i = 0; i < e; ++i) push(i, j);
            break;
        case BasisOrder::row_major:
            for (int i = 0; i < e; ++i)
                for (int j = 0; j < d; ++j) push(i, j);
            break;
        case BasisOrder::columns_descending:
            for (int j = d - 1; j >= 0; --j)
                for (int i = 0; i < e; ++i) push(i, j);
            break;
    }
    return b;
}

template <class K>
ExtStructure<K> ext_structure(const TModule<K>& src, const TModule<K>& dst, BasisOrder order) {
    ExtStructure<K> E;
    E.plan = ReductionPlan<K>(src, dst);
    E.order = order;
    E.basis = make_basis(E.plan, order);
    const int n = E.dim();
    const auto f = src.field();
    const Var v = src.variable();
    E.pi_t = SkewMatrix<K>(f, v, n, n);
    for (int b = 0; b < n; ++b) {
        E.tracked.push_back(tracked_reduce(E.basis[b], E.plan));
        for (const auto& [a, w] : E.tracked.back().slots) E.pi_t(E.index(a), b) = w;
    }
    const auto th = SkewPoly<K>::constant(K::theta(f), v);
    for (int a = 0; a < n; ++a) {
        if (E.basis[a].deg != 0) continue;
        bool trivial = E.pi_t(a, a) == th;
        for (int b = 0; b < n && trivial; ++b)
            if (b != a && !E.pi_t(a, b).is_zero()) trivial = false;
        if (trivial) E.ga_coords.push_back(a);
    }
    return E;
}

template <class K>
ExtStructure<K> ext_drinfeld_structure(const TModule<K>& phi, const TModule<K>& psi) {
    if (!phi.is_drinfeld() || !psi.is_drinfeld()) throw DimensionMismatch("both modules must be Drinfeld modules");
    return ext_structure(phi, psi, BasisOrder::column_major);
}

template <class K>
ExtStructure<K> ext_tmodule_source(const TModule<K>& Phi, const TModule<K>& psi) {
    if (!psi.is_drinfeld()) throw DimensionMismatch("target must be a Drinfeld module");
    if (!Phi.leading().inverse()) throw SingularLeading("leading matrix of the source is not invertible");
    return ext_structure(Phi, psi, BasisOrder::column_major);
}

template <class K>
ExtStructure<K> ext_carlitz_target(const TModule<K>& Phi, int e) {
    if (Phi.rank() < 2) throw UnsupportedRegime("Carlitz tensor target needs rk source >= 2");
    return ext_structure(Phi, carlitz_tensor<K>(Phi.field(), e, Phi.variable()), BasisOrder::row_major);
}

template <class K>
TModule<K> block_diagonal(const std::vector<TModule<K>>& ms) {
    if (ms.empty()) throw DimensionMismatch("empty module list");
    int n = 0;
    for (const auto& m : ms) n += m.dim();
    SkewMatrix<K> M(ms[0].field(), ms[0].variable(), n, n);
    int o = 0;
    for (const auto& m : ms) {
        M.set_block(o, o, m.phi_t());
        o += m.dim();
    }
    return TModule<K>(M);
}

template <class K>
ExtStructure<K> ext_product_structure(const std::vector<TModule<K>>& sources, const std::vector<TModule<K>>& targets) {
    for (const auto& p : sources)
        for (const auto& q : targets) {
            if (!p.is_drinfeld() || !q.is_drinfeld()) throw DimensionMismatch("products take Drinfeld modules");
            if (p.rank() <= q.rank())
                throw UnsupportedRegime("pair (" + p.str() + ", " + q.str() + ") has rk source <= rk target");
        }
    return ext_structure(block_diagonal(sources), block_diagonal(targets), BasisOrder::column_major);
}

template <class K>
ExtStructure<K> sigma_ext_structure(const TModule<K>& phi, const TModule<K>& psi) {
    if (phi.variable() != Var::sigma || psi.variable() != Var::sigma)
        throw MixedFields("sigma structure needs modules over K{sig}");
    return ext_structure(phi, psi, BasisOrder::column_major);
}

// sigma-side structure on Ext_tau(phi, psi) = Ext_sig(psi^sig, phi^sig) for rk phi < rk psi
template <class K>
ExtStructure<K> duality_transport(const TModule<K>& phi, const TModule<K>& psi) {
    if (phi.variable() != Var::tau || psi.variable() != Var::tau) throw MixedFields("duality expects tau modules");
    if (phi.rank() >= psi.rank())
        throw UnsupportedRegime("duality transport is for rk source < rk target; use ext directly");
    return sigma_ext_structure(adjoint_tmodule(psi), adjoint_tmodule(phi));
}

// delta -> delta^sig, and the matching inner witness: (delta^(U))^sig = delta_sig^(-U^sig)
template <class K>
SkewMatrix<K> dual_class(const SkewMatrix<K>& delta) {
    return adjoint_matrix(delta);
}
template <class K>
SkewMatrix<K> dual_witness(const SkewMatrix<K>& U) {
    return -adjoint_matrix(U);
}

// Ext_0 as the complement of the G_a coordinates
template <class K>
struct ExtSub {
    std::vector<int> coords;       // positions in the parent basis
    SkewMatrix<K> pi0;             // Pi_t restricted to coords
    SkewMatrix<K> inclusion;       // parent.dim x coords.size, 0/1
    SkewMatrix<K> projection;      // ga_rank x parent.dim, 0/1
};

template <class K>
ExtSub<K> ext0_structure(const ExtStructure<K>& E) {
    ExtSub<K> s;
    const int n = E.dim();
    for (int a = 0; a < n; ++a)
        if (std::find(E.ga_coords.begin(), E.ga_coords.end(), a) == E.ga_coords.end()) s.coords.push_back(a);
    const int m = static_cast<int>(s.coords.size());
    const auto f = E.field();
    const Var v = E.variable();
    const auto one = SkewPoly<K>::constant(K::one(f), v);
    s.pi0 = SkewMatrix<K>(f, v, m, m);
    s.inclusion = SkewMatrix<K>(f, v, n, m);
    for (int x = 0; x < m; ++x) {
        s.inclusion(s.coords[x], x) = one;
        for (int y = 0; y < m; ++y) s.pi0(x, y) = E.pi_t(s.coords[x], s.coords[y]);
    }
    s.projection = SkewMatrix<K>(f, v, E.ga_rank(), n);
    for (int x = 0; x < E.ga_rank(); ++x) s.projection(x, E.ga_coords[x]) = one;
    return s;
}

// 0 -> Ext_0 -> Ext -> G_a^s -> 0 as checked morphisms
template <class K>
std::pair<TModMorphism<K>, TModMorphism<K>> ga_sequence(const ExtStructure<K>& E) {
    const auto s = ext0_structure(E);
    const auto ext = E.as_tmodule();
    auto incl = check_morphism(s.inclusion, TModule<K>(s.pi0), ext);
    auto proj = check_morphism(s.projection, ext, trivial_module<K>(E.field(), E.ga_rank(), E.variable()));
    return {incl, proj};
}

}  // namespace ftmod

#endif
