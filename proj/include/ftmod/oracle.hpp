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

#ifndef FTMOD_ORACLE_HPP
#define FTMOD_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "homological.hpp"

namespace ftmod {

// Brute-force checks over finite fields.  Only reduce_canonical and direct skew arithmetic
// are used here; the tracked reducer never is.

enum class OracleMode { sample, enumerate };

struct Report {
    bool pass = true;
    std::string check;
    std::string mode;
    std::uint64_t seed = 0;
    long long checked = 0;
    std::string counterexample;

    void fail(const std::string& what) {
        if (pass) counterexample = what;
        pass = false;
    }
};

constexpr std::uint64_t carrier_ceiling = 1u << 20;

namespace detail {

inline std::uint64_t carrier_size(const GF::field_ptr& f, int n) {
    std::uint64_t s = 1;
    for (int i = 0; i < n; ++i) {
        s *= f->size();
        if (s > carrier_ceiling) throw CarrierTooLarge("carrier exceeds 2^20 elements");
    }
    return s;
}

// k-th point of K^n in base |K|
inline std::vector<GF> point(const GF::field_ptr& f, int n, std::uint64_t k) {
    std::vector<GF> x;
    for (int i = 0; i < n; ++i, k /= f->size()) x.push_back(GF::from_index(f, static_cast<std::uint32_t>(k % f->size())));
    return x;
}

inline std::uint64_t key(const std::vector<GF>& x) {
    std::uint64_t k = 0;
    for (auto it = x.rbegin(); it != x.rend(); ++it) k = k * it->field()->size() + it->index();
    return k;
}

template <class Rng>
std::vector<GF> random_point(const GF::field_ptr& f, int n, Rng& rng) {
    std::vector<GF> x;
    for (int i = 0; i < n; ++i) x.push_back(GF::random(f, rng));
    return x;
}

template <class Rng>
SkewMatrix<GF> random_matrix(const GF::field_ptr& f, Var v, int r, int c, int maxdeg, Rng& rng) {
    SkewMatrix<GF> m(f, v, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            for (int d = 0; d <= maxdeg; ++d) m(i, j).add_term(d, GF::random(f, rng));
    return m;
}

// every F_p-combination of the given rows x cols matrices
inline std::vector<SkewMatrix<GF>> fp_span(const HomSpace<GF>& h) {
    const auto& gens = h.basis;
    const auto f = h.source.field();
    const Var v = h.source.variable();
    std::uint64_t combos = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        combos *= f->p();
        if (combos > carrier_ceiling) throw CarrierTooLarge("Hom span too large to enumerate");
    }
    std::vector<SkewMatrix<GF>> out;
    for (std::uint64_t c = 0; c < combos; ++c) {
        SkewMatrix<GF> m(f, v, h.target.dim(), h.source.dim());
        std::uint64_t cc = c;
        for (const auto& g : gens) {
            const auto a = static_cast<long long>(cc % f->p());
            cc /= f->p();
            if (a) m = m + SkewPoly<GF>::constant(GF::from_int(f, a), v) * g;
        }
        out.push_back(std::move(m));
    }
    return out;
}

inline std::string point_str(const std::vector<GF>& x) {
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + x[i].str();
    return s + "]";
}

}  // namespace detail

inline const std::vector<std::vector<long long>>& oracle_polys() {
    static const std::vector<std::vector<long long>> a = {{0, 1}, {0, 0, 1}, {1, 1}, {0, 1, 0, 1}};
    return a;
}

inline std::string tpoly_str(const std::vector<long long>& a) {
    std::string s;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (!a[i]) continue;
        if (!s.empty()) s += " + ";
        const std::string c = a[i] == 1 && i ? "" : std::to_string(a[i]) + (i ? "*" : "");
        s += c + (i == 0 ? "" : i == 1 ? "t" : "t^" + std::to_string(i));
    }
    return s.empty() ? "0" : s;
}

// canonical(Psi_a * w) == Pi_a(coords(w)) for sampled or enumerated canonical w
inline Report verify_structure(const ExtStructure<GF>& E, long long samples, std::uint64_t seed,
                               OracleMode mode = OracleMode::sample) {
    Report rep{true, "structure", mode == OracleMode::sample ? "sample" : "enumerate", seed, 0, {}};
    const auto f = E.field();
    std::vector<std::pair<SkewMatrix<GF>, SkewMatrix<GF>>> acts;  // (Psi_a, Pi_a)
    try {
        const TModule<GF> pm(E.pi_t);
        for (const auto& a : oracle_polys()) {
            std::vector<GF> c;
            for (long long v : a) c.push_back(GF::from_int(f, v));
            acts.emplace_back(E.target().phi_a(c), pm.phi_a(c));
        }
    } catch (const Error& e) {
        rep.fail(std::string("Pi_t is not a t-module: ") + e.what());
        return rep;
    }
    const ReductionPlan<GF> plan(E.source(), E.target());
    std::mt19937_64 rng(seed);
    const int n = E.dim();
    const std::uint64_t total = mode == OracleMode::enumerate ? detail::carrier_size(f, n) : samples;
    for (std::uint64_t s = 0; s < total && rep.pass; ++s) {
        const auto x = mode == OracleMode::enumerate ? detail::point(f, n, s) : detail::random_point(f, n, rng);
        const auto w = E.from_coords(x);
        for (std::size_t k = 0; k < acts.size(); ++k) {
            const auto lhs = E.coords(reduce_canonical(acts[k].first * w, plan).canonical);
            const auto rhs = apply_matrix(acts[k].second, x);
            ++rep.checked;
            if (lhs != rhs) {
                rep.fail("a = " + tpoly_str(oracle_polys()[k]) + ", x = " + detail::point_str(x) + ": reduced " +
                         detail::point_str(lhs) + " vs Pi_a " + detail::point_str(rhs));
                break;
            }
        }
    }
    return rep;
}

// 0 -> Ext_0 -> Ext -> G_a^s -> 0 on points
inline Report verify_ga_exactness(const ExtStructure<GF>& E) {
    Report rep{true, "ga_sequence", "enumerate", 0, 0, {}};
    const auto f = E.field();
    const auto sub = ext0_structure(E);
    try {
        ga_sequence(E);
    } catch (const Error& e) {
        rep.fail(e.what());
        return rep;
    }
    const int n = E.dim(), m = static_cast<int>(sub.coords.size()), s = E.ga_rank();
    std::set<std::uint64_t> image, kernel, quotient;
    const std::uint64_t nm = detail::carrier_size(f, m), nn = detail::carrier_size(f, n);
    for (std::uint64_t k = 0; k < nm; ++k) image.insert(detail::key(apply_matrix(sub.inclusion, detail::point(f, m, k))));
    if (image.size() != nm) rep.fail("inclusion is not injective");
    for (std::uint64_t k = 0; k < nn; ++k) {
        const auto x = detail::point(f, n, k);
        const auto g = apply_matrix(sub.projection, x);
        quotient.insert(detail::key(g));
        if (std::all_of(g.begin(), g.end(), [](const GF& c) { return c.is_zero(); })) kernel.insert(detail::key(x));
        ++rep.checked;
    }
    if (kernel != image) rep.fail("image of the inclusion differs from the kernel of the projection");
    if (quotient.size() != detail::carrier_size(f, s)) rep.fail("projection onto G_a^s is not surjective");
    return rep;
}

// exactness of the six-term sequence; Hom nodes use a bounded search, Ext nodes enumeration
inline Report verify_sixterm_exactness(const SixTerm<GF>& st, int hom_bound = 2) {
    Report rep{true, "sixterm", "enumerate", 0, 0, {}};
    std::vector<HomSpace<GF>> H;
    for (int k = 0; k < 3; ++k) {
        auto [s, t] = st.node(k);
        H.push_back(hom_space(s, t, hom_bound));
    }
    auto zero = [](const SkewMatrix<GF>& m) { return m.is_zero(); };
    // composites vanish on Hom generators
    for (const auto& h : H[0].basis) {
        if (!zero(st.hom2(st.hom1(h)))) rep.fail("hom2 o hom1 != 0");
        if (zero(st.hom1(h))) rep.fail("hom1 is not injective");
    }
    for (const auto& h : H[1].basis)
        if (!zero(st.connecting(st.hom2(h)))) rep.fail("connecting o hom2 != 0");
    for (const auto& h : H[2].basis)
        if (!zero(st.ext1(st.connecting(h)))) rep.fail("ext1 o connecting != 0");

    // kernel == image at the two interior Hom nodes, inside the bounded Hom spaces
    {
        std::set<std::string> im_h1, ker_h2, im_h2, ker_conn;
        for (const auto& h : detail::fp_span(H[0])) im_h1.insert(st.hom1(h).str());
        for (const auto& h : detail::fp_span(H[1])) {
            const auto g = st.hom2(h);
            if (zero(g)) ker_h2.insert(h.str());
            im_h2.insert(g.str());
            ++rep.checked;
        }
        for (const auto& h : detail::fp_span(H[2])) {
            if (zero(st.connecting(h))) ker_conn.insert(h.str());
            ++rep.checked;
        }
        if (ker_h2 != im_h1) rep.fail("at Hom node 1: kernel of hom2 differs from image of hom1");
        for (const auto& k : ker_conn)
            if (!im_h2.count(k)) {
                rep.fail("at Hom node 2: " + k + " is killed by the connecting map but has no preimage");
                break;
            }
    }

    std::vector<ExtStructure<GF>> X;
    for (int k = 3; k < 6; ++k) X.push_back(st.ext_node(k));
    const auto f = X[0].field();
    // image of the connecting map: F_p-span of the images of a Hom basis
    std::set<std::uint64_t> im_conn;
    {
        std::vector<std::vector<GF>> gens;
        for (const auto& h : H[2].basis) gens.push_back(X[0].coords(st.connecting(h)));
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < gens.size(); ++i) combos *= f->p();
        for (std::uint64_t c = 0; c < combos; ++c) {
            std::vector<GF> v(X[0].dim(), GF::zero(f));
            std::uint64_t cc = c;
            for (const auto& g : gens) {
                const GF a = GF::from_int(f, static_cast<long long>(cc % f->p()));
                cc /= f->p();
                for (std::size_t i = 0; i < v.size(); ++i) v[i] += a * g[i];
            }
            im_conn.insert(detail::key(v));
        }
    }
    const auto zero_key = detail::key(std::vector<GF>(X[1].dim(), GF::zero(f)));
    std::set<std::uint64_t> ker1, im1, ker2, im2;
    const std::uint64_t n0 = detail::carrier_size(f, X[0].dim());
    for (std::uint64_t k = 0; k < n0; ++k) {
        const auto x = detail::point(f, X[0].dim(), k);
        const auto y = X[1].coords(st.ext1(X[0].from_coords(x)));
        if (detail::key(y) == zero_key) ker1.insert(detail::key(x));
        im1.insert(detail::key(y));
        ++rep.checked;
    }
    if (ker1 != im_conn) rep.fail("at Ext node 1: kernel of ext1 differs from image of the connecting map");
    const std::uint64_t n1 = detail::carrier_size(f, X[1].dim());
    const auto zero2 = detail::key(std::vector<GF>(X[2].dim(), GF::zero(f)));
    for (std::uint64_t k = 0; k < n1; ++k) {
        const auto x = detail::point(f, X[1].dim(), k);
        const auto y = X[2].coords(st.ext2(X[1].from_coords(x)));
        if (detail::key(y) == zero2) ker2.insert(detail::key(x));
        im2.insert(detail::key(y));
        ++rep.checked;
    }
    if (ker2 != im1) rep.fail("at Ext node 2: kernel of ext2 differs from image of ext1");
    const std::uint64_t n2 = detail::carrier_size(f, X[2].dim());
    for (std::uint64_t k = 0; k < n2; ++k)
        if (!im2.count(detail::key(detail::point(f, X[2].dim(), k)))) {
            rep.fail("no preimage for " + detail::point_str(detail::point(f, X[2].dim(), k)) + " in the last map");
            break;
        }
    return rep;
}

using ClassMap = std::function<SkewMatrix<GF>(const SkewMatrix<GF>&)>;

// (-)^sig : Ext_tau(phi, psi) -> Ext_sig(psi^sig, phi^sig) for rk phi > rk psi
inline Report verify_duality(const TModule<GF>& phi, const TModule<GF>& psi, long long samples, std::uint64_t seed,
                             const ClassMap& to_sigma = dual_class<GF>, const ClassMap& to_tau = dual_class<GF>) {
    Report rep{true, "duality", "sample", seed, 0, {}};
    const auto f = phi.field();
    const ReductionPlan<GF> plan(phi, psi);
    const auto src_s = adjoint_tmodule(psi), dst_s = adjoint_tmodule(phi);
    std::mt19937_64 rng(seed);
    const auto E = ext_structure(phi, psi, BasisOrder::column_major);
    const int slack = std::max(phi.rank(), psi.rank());
    for (long long s = 0; s < samples && rep.pass; ++s) {
        // inner goes to inner, with the transported witness
        const auto U = detail::random_matrix(f, Var::tau, psi.dim(), phi.dim(), 2, rng);
        const auto dU = inner_biderivation(U, phi, psi);
        if (to_sigma(dU) != inner_biderivation(dual_witness(U), src_s, dst_s)) {
            rep.fail("inner biderivation of U = " + U.str() + " is not sent to the inner one of -U^sig");
            break;
        }
        // round trip on a random class
        const auto x = detail::random_point(f, E.dim(), rng);
        const auto delta = E.from_coords(x);
        const auto ds = to_sigma(delta);
        if (to_tau(ds) != delta) {
            rep.fail("(delta^sig)^tau != delta for delta = " + delta.str());
            break;
        }
        // nonzero classes stay outside the sigma-side inner biderivations (searched up to a bound)
        if (!delta.is_zero() && bounded_inner_solve(ds, src_s, dst_s, std::max(ds.degree(), 0) + slack)) {
            rep.fail("nonzero class " + delta.str() + " becomes inner on the sigma side");
            break;
        }
        // (t*delta)^sig == t*(delta^sig): the difference is sigma-inner, found by a bounded solve
        const auto lhs = to_sigma(reduce_canonical(psi.phi_t() * delta, plan).canonical);
        const auto rhs = dst_s.phi_t() * ds;
        const auto diff = lhs - rhs;
        if (!bounded_inner_solve(diff, src_s, dst_s, std::max(diff.degree(), 0) + slack)) {
            rep.fail("t-action does not commute with (-)^sig on delta = " + delta.str());
            break;
        }
        rep.checked += 4;
    }
    return rep;
}

// replace the first coefficient c of entry (i,j) moved by the twist with c^(1); if there is
// none, raise the degree of its first term by one
template <class K>
SkewMatrix<K> mutate_entry(const SkewMatrix<K>& M, int i, int j) {
    SkewMatrix<K> m = M;
    const auto& p = M(i, j);
    const Var v = M.variable();
    SkewPoly<K> q(M.field(), v);
    bool done = false;
    for (const auto& [d, c] : p.terms()) {
        if (!done && c.twist(1) != c) {
            q.add_term(d, c.twist(1));
            done = true;
        } else {
            q.add_term(d, c);
        }
    }
    if (!done) {
        q = SkewPoly<K>(M.field(), v);
        bool first = true;
        for (const auto& [d, c] : p.terms()) {
            q.add_term(first ? d + 1 : d, c);
            first = false;
        }
        if (p.is_zero()) q = SkewPoly<K>::var(M.field(), v);
    }
    m(i, j) = q;
    return m;
}

}  // namespace ftmod

#endif
