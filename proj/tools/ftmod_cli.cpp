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

// ftmod command line front end.
// exit codes: 0 ok, 1 domain error, 2 usage or parse error, 3 verification failure

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ftmod/ftmod.hpp"
#include "ftmod/json_io.hpp"

using namespace ftmod;
using nlohmann::json;

namespace {

struct Options {
    std::string command;
    std::string field = "GF(3)(th)";
    std::string phi, psi, a = "t", g, f, xi, variant = "contravariant", mode = "sample", check = "structure", out;
    std::vector<std::string> delta;
    int e = 1;
    int bound = -1;
    long long samples = 100;
    std::uint64_t seed = 1;
    bool json = false;
};

struct VerificationFailed {
    std::string text;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> r;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) r.push_back(item);
    return r;
}

void need(const std::string& value, const char* flag) {
    if (value.empty()) throw CLI::ValidationError(std::string(flag), "is required for this command");
}

template <class K>
class Runner {
   public:
    using F = typename K::field_ptr;
    using Matrix = SkewMatrix<K>;

    Runner(F f, const Options& o) : f_(std::move(f)), o_(o) {}

    // returns the rendered output
    std::string run() {
        const auto& c = o_.command;
        if (c == "ext") return ext();
        if (c == "ext0") return ext0();
        if (c == "ext-seq") return ext_seq();
        if (c == "ext-prod") return show(ext_product_structure(modules(o_.phi, "--phi"), modules(o_.psi, "--psi")));
        if (c == "ext-tmod") return show(ext_tmodule_source(module(o_.phi, "--phi"), module(o_.psi, "--psi")));
        if (c == "ext-carlitz") return show(ext_carlitz_target(module(o_.phi, "--phi"), o_.e));
        if (c == "ext-dual") return show(duality_transport(module(o_.phi, "--phi"), module(o_.psi, "--psi")));
        if (c == "adjoint") return adjoint();
        if (c == "reduce") return reduce();
        if (c == "assemble") return assemble();
        if (c == "baer") return baer();
        if (c == "act") return act();
        if (c == "pullback") return pullback_cmd();
        if (c == "pushout") return pushout_cmd();
        if (c == "split") return split();
        if (c == "hom") return hom();
        if (c == "sixterm") return sixterm();
        if (c == "verify") return verify();
        throw CLI::ValidationError("command", "unknown command " + c);
    }

   private:
    TModule<K> module(const std::string& text, const char* flag) const {
        need(text, flag);
        return TModule<K>(parse_matrix<K>(f_, text, detect_var(text)));
    }
    std::vector<TModule<K>> modules(const std::string& text, const char* flag) const {
        need(text, flag);
        std::vector<TModule<K>> r;
        for (const auto& s : split_list(text)) r.push_back(module(s, flag));
        return r;
    }
    Matrix matrix(const std::string& text, const char* flag, Var v) const {
        need(text, flag);
        return parse_matrix<K>(f_, text, v);
    }
    Matrix delta(std::size_t k, Var v) const {
        if (o_.delta.size() <= k) throw CLI::ValidationError("--delta", "is required for this command");
        return parse_matrix<K>(f_, o_.delta[k], v);
    }

    static std::string rows(const Matrix& m, const std::string& indent = "  ") {
        std::string s;
        for (int i = 0; i < m.rows(); ++i) {
            s += indent + "[";
            for (int j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + m(i, j).str();
            s += "]\n";
        }
        return s;
    }
    std::string head() const { return "field: " + f_->header() + "\n"; }

    std::string show(const ExtStructure<K>& E) const {
        if (o_.json) return structure_json(E).dump(2) + "\n";
        std::string s = head() + "basis (row,col,deg) " + order_name(E.order) + ":";
        for (const auto& a : E.basis) s += " " + a.str();
        s += "\npi_t:\n" + rows(E.pi_t) + "ga_rank: " + std::to_string(E.ga_rank()) + "\n";
        return s;
    }

    ExtStructure<K> pair_structure() const {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        if (phi.is_drinfeld() && psi.is_drinfeld()) return ext_drinfeld_structure(phi, psi);
        return ext_structure(phi, psi, BasisOrder::column_major);
    }

    std::string ext() { return show(pair_structure()); }

    std::string ext0() {
        const auto E = pair_structure();
        const auto s = ext0_structure(E);
        if (o_.json)
            return json{{"pi0", matrix_json(s.pi0)}, {"inclusion", matrix_json(s.inclusion)}}.dump(2) + "\n";
        return head() + "pi0_t:\n" + rows(s.pi0) + "inclusion:\n" + rows(s.inclusion);
    }

    std::string ext_seq() {
        const auto E = pair_structure();
        const auto [incl, proj] = ga_sequence(E);
        if (o_.json)
            return json{{"ext", structure_json(E)},
                        {"inclusion", matrix_json(incl.f)},
                        {"projection", matrix_json(proj.f)},
                        {"ga_rank", E.ga_rank()}}
                       .dump(2) +
                   "\n";
        return show(E) + "ext0 pi0_t:\n" + rows(incl.source.phi_t()) + "inclusion:\n" + rows(incl.f) +
               "projection to G_a^" + std::to_string(E.ga_rank()) + ":\n" + rows(proj.f) +
               "morphisms: checked\n";
    }

    std::string adjoint() {
        const auto M = module(o_.phi, "--phi");
        const auto A = adjoint_tmodule(M);
        if (o_.json) return matrix_json(A.phi_t()).dump(2) + "\n";
        return head() + "adjoint:\n" + rows(A.phi_t());
    }

    std::string reduce() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const auto r = reduce_canonical(delta(0, phi.variable()), phi, psi);
        if (o_.json)
            return json{{"canonical", matrix_json(r.canonical)}, {"witness", matrix_json(r.witness)}}.dump(2) + "\n";
        return head() + "canonical:\n" + rows(r.canonical) + "witness U:\n" + rows(r.witness);
    }

    std::string assemble() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const auto G = assemble_extension(delta(0, phi.variable()), phi, psi);
        if (o_.json) return matrix_json(G.phi_t()).dump(2) + "\n";
        return head() + "gamma_t:\n" + rows(G.phi_t());
    }

    std::string class_out(const std::string& label, const Matrix& m) const {
        if (o_.json) return json{{label, matrix_json(m)}}.dump(2) + "\n";
        return head() + label + ":\n" + rows(m);
    }

    std::string baer() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const ReductionPlan<K> plan(phi, psi);
        if (o_.delta.size() < 2) throw CLI::ValidationError("--delta", "baer needs two --delta values");
        Matrix sum = reduce_canonical(delta(0, phi.variable()), plan).canonical;
        for (std::size_t k = 1; k < o_.delta.size(); ++k) sum = baer_sum(sum, delta(k, phi.variable()), plan);
        return class_out("sum", sum);
    }

    std::string act() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const auto a = parse_tpoly<K>(f_, o_.a);
        return class_out("class", t_action(a, delta(0, phi.variable()), ReductionPlan<K>(phi, psi)));
    }

    std::string with_canonical(const Matrix& d, const TModule<K>& s, const TModule<K>& t) const {
        std::string out = head() + "biderivation:\n" + rows(d);
        json j{{"biderivation", matrix_json(d)}};
        try {
            const auto c = reduce_canonical(d, s, t).canonical;
            out += "canonical:\n" + rows(c);
            j["canonical"] = matrix_json(c);
        } catch (const UnsupportedRegime&) {
        } catch (const SingularLeading&) {
        }
        return o_.json ? j.dump(2) + "\n" : out;
    }

    std::string pullback_cmd() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const auto G = o_.xi.empty() ? phi : module(o_.xi, "--xi");
        const auto d = pullback(delta(0, phi.variable()), matrix(o_.g, "--g", phi.variable()), G, phi);
        return with_canonical(d, G, psi);
    }

    std::string pushout_cmd() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const auto G = o_.xi.empty() ? psi : module(o_.xi, "--xi");
        const auto d = pushout(delta(0, phi.variable()), matrix(o_.f, "--f", phi.variable()), psi, G);
        return with_canonical(d, phi, G);
    }

    std::string split() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        std::optional<int> b;
        if (o_.bound >= 0) b = o_.bound;
        const auto r = is_split(delta(0, phi.variable()), phi, psi, b);
        json j{{"verdict", verdict_name(r.verdict)}, {"method", r.method}};
        std::string s = head() + "verdict: " + verdict_name(r.verdict) + " (" + r.method + ")\n";
        if (r.witness) {
            j["witness"] = matrix_json(*r.witness);
            s += "witness U:\n" + rows(*r.witness);
        }
        if (r.bound >= 0) {
            j["bound"] = r.bound;
            s += "bound: " + std::to_string(r.bound) + "\n";
        }
        return o_.json ? j.dump(2) + "\n" : s;
    }

    std::string hom() {
        const auto phi = module(o_.phi, "--phi"), psi = module(o_.psi, "--psi");
        const int b = o_.bound >= 0 ? o_.bound : 2 * std::max(phi.dim(), psi.dim());
        const auto h = hom_space(phi, psi, b);
        json basis = json::array();
        std::string s = head() + "bound: " + std::to_string(b) + "\ncomplete: " + (h.complete ? "yes" : "no") +
                        "\ndimension over F_p: " + std::to_string(h.basis.size()) + "\n";
        for (const auto& m : h.basis) {
            basis.push_back(matrix_json(m));
            s += rows(m, "  ") + (m.rows() > 1 ? "\n" : "");
        }
        if (o_.json) return json{{"bound", b}, {"complete", h.complete}, {"basis", basis}}.dump(2) + "\n";
        return s;
    }

    std::string sixterm() {
        const auto E = module(o_.phi, "--phi"), F = module(o_.psi, "--psi"), G = module(o_.xi, "--xi");
        SixTermVariant v;
        if (o_.variant == "contravariant" || o_.variant == "ii")
            v = SixTermVariant::contravariant;
        else if (o_.variant == "covariant" || o_.variant == "i")
            v = SixTermVariant::covariant;
        else
            throw CLI::ValidationError("--variant", "must be contravariant or covariant");
        const SixTerm<K> st(E, F, delta(0, E.variable()), G, v);
        const auto mid = st.ext_node(4);
        const auto first = st.ext_node(3), last = st.ext_node(5);
        const bool co = v == SixTermVariant::contravariant;
        const Matrix Delta = co ? st.delta_block() : Matrix();
        if (o_.json) {
            json j{{"middle", structure_json(mid)}, {"first", structure_json(first)}, {"last", structure_json(last)}};
            if (co) j["delta_block"] = matrix_json(Delta);
            return j.dump(2) + "\n";
        }
        std::string s = head() + "middle module X:\n" + rows(st.middle().phi_t()) + "Ext node 1 pi_t:\n" +
                        rows(first.pi_t) + "Ext node 2 (middle) pi_t:\n" + rows(mid.pi_t) + "Ext node 3 pi_t:\n" +
                        rows(last.pi_t);
        if (co) s += "Delta_t:\n" + rows(Delta);
        return s;
    }

    std::string verify() {
        if constexpr (!K::is_finite) {
            throw InvalidField("verify needs a finite coefficient field");
        } else {
            Report r;
            if (o_.check == "structure") {
                const auto E = pair_structure();
                r = verify_structure(E, o_.samples, o_.seed,
                                     o_.mode == "enumerate" ? OracleMode::enumerate : OracleMode::sample);
            } else if (o_.check == "ga") {
                r = verify_ga_exactness(pair_structure());
            } else if (o_.check == "duality") {
                r = verify_duality(module(o_.phi, "--phi"), module(o_.psi, "--psi"), o_.samples, o_.seed);
            } else if (o_.check == "sixterm") {
                const auto v = o_.variant == "covariant" || o_.variant == "i" ? SixTermVariant::covariant
                                                                               : SixTermVariant::contravariant;
                const SixTerm<K> st(module(o_.phi, "--phi"), module(o_.psi, "--psi"), delta(0, Var::tau),
                                    module(o_.xi, "--xi"), v);
                r = verify_sixterm_exactness(st, o_.bound >= 0 ? o_.bound : 2);
            } else {
                throw CLI::ValidationError("--check", "must be structure, ga, duality or sixterm");
            }
            std::string s;
            if (o_.json)
                s = json{{"check", r.check},       {"mode", r.mode},    {"seed", r.seed},
                         {"checked", r.checked},   {"pass", r.pass},    {"counterexample", r.counterexample}}
                        .dump(2) +
                    "\n";
            else
                s = head() + "check: " + r.check + " (" + r.mode + ", seed " + std::to_string(r.seed) + ")\n" +
                    "checked: " + std::to_string(r.checked) + "\n" + (r.pass ? "PASS\n" : "FAIL: " + r.counterexample + "\n");
            if (!r.pass) throw VerificationFailed{s};
            return s;
        }
    }

    F f_;
    const Options& o_;
};

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(o.out);
    if (!os) throw std::runtime_error("cannot write " + o.out);
    os << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ftmod: Ext^1 t-module structures for Drinfeld and t-modules"};
    app.require_subcommand(1, 1);
    Options o;
    const std::vector<std::pair<std::string, std::string>> commands = {
        {"ext", "t-module structure on Ext^1(phi, psi)"},
        {"ext0", "the Ext^1_0 sub-structure and its inclusion"},
        {"ext-seq", "0 -> Ext^1_0 -> Ext^1 -> G_a^s -> 0"},
        {"ext-prod", "products: --phi and --psi take ';'-separated lists"},
        {"ext-tmod", "t-module source with invertible leading matrix"},
        {"ext-carlitz", "target the Carlitz tensor power C^(e)"},
        {"ext-dual", "sigma-side structure for rk phi < rk psi"},
        {"adjoint", "adjoint module of --phi"},
        {"reduce", "canonical form of --delta with witness"},
        {"assemble", "middle term [[phi, 0], [delta, psi]]"},
        {"baer", "Baer sum of repeated --delta"},
        {"act", "a * delta for --a in F_q[t]"},
        {"pullback", "delta * g for g : xi -> phi"},
        {"pushout", "f * delta for f : psi -> xi"},
        {"split", "decide whether --delta is inner"},
        {"hom", "morphisms phi -> psi up to --bound"},
        {"sixterm", "six-term sequence maps; --phi E, --psi F, --delta, --xi G"},
        {"verify", "finite-field oracle (--check structure|ga|duality|sixterm)"},
    };
    for (const auto& [name, help] : commands) {
        auto* sc = app.add_subcommand(name, help);
        sc->add_option("--field", o.field, "coefficient field, e.g. GF(3)(th), GF(3^2), FTF(3; gens=a,b; inv=a)");
        sc->add_option("--phi", o.phi, "source module (or E for sixterm)");
        sc->add_option("--psi", o.psi, "target module (or F for sixterm)");
        sc->add_option("--delta", o.delta, "biderivation delta_t (repeatable for baer)");
        sc->add_option("--a", o.a, "polynomial in t");
        sc->add_option("--e", o.e, "Carlitz tensor power")->check(CLI::PositiveNumber);
        sc->add_option("--g", o.g, "morphism g : xi -> phi");
        sc->add_option("--f", o.f, "morphism f : psi -> xi");
        sc->add_option("--xi", o.xi, "auxiliary module (G)");
        sc->add_option("--bound", o.bound, "degree bound")->check(CLI::NonNegativeNumber);
        sc->add_option("--variant", o.variant, "sixterm variant: contravariant (ii) or covariant (i)");
        sc->add_option("--samples", o.samples, "oracle samples")->check(CLI::PositiveNumber);
        sc->add_option("--seed", o.seed, "oracle seed");
        sc->add_option("--mode", o.mode, "sample or enumerate")->check(CLI::IsMember({"sample", "enumerate"}));
        sc->add_option("--check", o.check, "verify target");
        sc->add_flag("--json", o.json, "JSON output");
        sc->add_option("--out", o.out, "write output to FILE");
        sc->callback([&o, name = name] { o.command = name; });
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        const auto field = parse_field(o.field);
        const std::string text = std::visit(
            [&](const auto& f) {
                using K = std::conditional_t<
                    std::is_same_v<std::decay_t<decltype(f)>, GF::field_ptr>, GF,
                    std::conditional_t<std::is_same_v<std::decay_t<decltype(f)>, RF::field_ptr>, RF, FT>>;
                return Runner<K>(f, o).run();
            },
            field);
        emit(o, text);
        return 0;
    } catch (const VerificationFailed& v) {
        emit(o, v.text);
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
