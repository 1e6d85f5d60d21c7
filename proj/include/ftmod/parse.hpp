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

#ifndef FTMOD_PARSE_HPP
#define FTMOD_PARSE_HPP

#include <cctype>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "formal.hpp"
#include "ratfunc.hpp"
#include "skewpoly.hpp"

namespace ftmod {

namespace detail {

struct Token {
    enum Kind { num, ident, sym, end } kind;
    std::string text;
    long long value = 0;
    std::size_t pos = 0;
};

class Lexer {
   public:
    explicit Lexer(std::string s) : s_(std::move(s)) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    bool accept(char c) {
        if (tok_.kind == Token::sym && tok_.text[0] == c) {
            advance();
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) error(std::string("expected '") + c + "'");
    }
    [[noreturn]] void error(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(tok_.pos) + " in \"" + s_ + "\"");
    }
    const std::string& source() const { return s_; }

   private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        tok_.pos = i_;
        if (i_ == s_.size()) {
            tok_ = {Token::end, "", 0, i_};
            return;
        }
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            const std::string t = s_.substr(i_, j - i_);
            if (t.size() > 15) error("integer literal too long");
            tok_ = {Token::num, t, std::stoll(t), i_};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            tok_ = {Token::ident, s_.substr(i_, j - i_), 0, i_};
            i_ = j;
            return;
        }
        if (std::string("+-*/^()[],;=").find(c) == std::string::npos)
            error(std::string("unexpected character '") + c + "'");
        tok_ = {Token::sym, std::string(1, c), 0, i_};
        ++i_;
    }

    std::string s_;
    std::size_t i_ = 0;
    Token tok_{Token::end, "", 0, 0};
};

inline long long parse_signed(Lexer& lx) {
    const bool neg = lx.accept('-');
    if (lx.peek().kind != Token::num) lx.error("expected an integer");
    const long long v = lx.take().value;
    return neg ? -v : v;
}

// polynomials over F_p in one named variable, for moduli and theta choices
class FpPolyParser {
   public:
    FpPolyParser(Lexer& lx, std::uint32_t p, std::string var) : lx_(lx), p_(p), var_(std::move(var)) {}

    FpPoly expr() {
        FpPoly r = term();
        for (;;) {
            if (lx_.accept('+'))
                r = add(r, term());
            else if (lx_.accept('-'))
                r = add(r, neg(term()));
            else
                return r;
        }
    }

   private:
    FpPoly term() {
        FpPoly r = factor();
        while (lx_.accept('*')) r = fp_mul(r, factor(), p_);
        return r;
    }
    FpPoly factor() {
        if (lx_.accept('-')) return neg(factor());
        FpPoly b;
        if (lx_.accept('(')) {
            b = expr();
            lx_.expect(')');
        } else if (lx_.peek().kind == Token::num) {
            b = {static_cast<std::uint32_t>(lx_.take().value % p_)};
            fp_trim(b);
        } else if (lx_.peek().kind == Token::ident && lx_.peek().text == var_) {
            lx_.take();
            b = {0, 1};
        } else {
            lx_.error("expected a polynomial in " + var_);
        }
        if (lx_.accept('^')) {
            const long long e = parse_signed(lx_);
            if (e < 0 || e > 64) lx_.error("exponent out of range");
            FpPoly r{1};
            for (long long i = 0; i < e; ++i) r = fp_mul(r, b, p_);
            return r;
        }
        return b;
    }
    FpPoly add(FpPoly a, const FpPoly& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + b[i]) % p_;
        fp_trim(a);
        return a;
    }
    FpPoly neg(FpPoly a) const {
        for (auto& c : a) c = (p_ - c) % p_;
        return a;
    }

    Lexer& lx_;
    std::uint32_t p_;
    std::string var_;
};

inline std::pair<std::uint32_t, std::uint32_t> parse_prime_power(Lexer& lx) {
    const long long p = parse_signed(lx);
    long long m = 1;
    if (lx.accept('^')) m = parse_signed(lx);
    if (p < 2 || p > (1 << 20) || m < 1 || m > 64) lx.error("bad prime power");
    return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(m)};
}

}  // namespace detail

using AnyField = std::variant<GF::field_ptr, RF::field_ptr, FT::field_ptr>;

// GF(p^m; mod=...; q=p^e; th=...), GF(p^m; mod=...)(th), FTF(p; gens=a,b; inv=a)
inline AnyField parse_field(const std::string& text) {
    detail::Lexer lx(text);
    if (lx.peek().kind != detail::Token::ident) lx.error("expected GF or FTF");
    const std::string kind = lx.take().text;
    lx.expect('(');
    const auto [p, m] = detail::parse_prime_power(lx);
    if (kind == "FTF") {
        if (m != 1) lx.error("formal twist fields are supported over prime fields only");
        std::vector<std::string> gens, inv;
        while (lx.accept(';')) {
            if (lx.peek().kind != detail::Token::ident) lx.error("expected gens or inv");
            const std::string key = lx.take().text;
            lx.expect('=');
            auto& list = key == "gens" ? gens : key == "inv" ? inv : (lx.error("unknown option " + key), gens);
            do {
                if (lx.peek().kind != detail::Token::ident) lx.error("expected a symbol name");
                list.push_back(lx.take().text);
            } while (lx.accept(','));
        }
        lx.expect(')');
        if (lx.peek().kind != detail::Token::end) lx.error("trailing input");
        return FTField::make(p, gens, inv);
    }
    if (kind != "GF") lx.error("expected GF or FTF");
    detail::FpPoly mod;
    std::uint32_t q_exp = 1;
    std::optional<std::string> theta_text;
    while (lx.accept(';')) {
        if (lx.peek().kind != detail::Token::ident) lx.error("expected mod, q or th");
        const std::string key = lx.take().text;
        lx.expect('=');
        if (key == "mod") {
            mod = detail::FpPolyParser(lx, p, "g").expr();
        } else if (key == "q") {
            const auto [qp, qe] = detail::parse_prime_power(lx);
            if (qp != p) lx.error("q must be a power of the characteristic");
            q_exp = qe;
        } else if (key == "th") {
            const std::size_t start = lx.peek().pos;
            detail::FpPolyParser(lx, p, "g").expr();
            theta_text = text.substr(start, lx.peek().pos - start);
        } else {
            lx.error("unknown option " + key);
        }
    }
    lx.expect(')');
    if (lx.accept('(')) {
        if (lx.peek().kind != detail::Token::ident || lx.peek().text != "th") lx.error("expected th");
        lx.take();
        lx.expect(')');
        if (lx.peek().kind != detail::Token::end) lx.error("trailing input");
        if (theta_text || q_exp != 1) lx.error("q and th options do not apply to F_q(th)");
        return RFField::make(p, m, mod);
    }
    if (lx.peek().kind != detail::Token::end) lx.error("trailing input");
    auto f = GFField::make(p, m, mod, q_exp);
    if (theta_text) {
        detail::Lexer tl(*theta_text);
        const auto poly = detail::FpPolyParser(tl, p, "g").expr();
        // evaluate at g in the field
        GF v = GF::zero(f), gp = GF::one(f);
        const GF g = GF::generator(f);
        for (auto c : poly) {
            v += GF::from_int(f, c) * gp;
            gp *= g;
        }
        f = GFField::make(p, m, f->modulus(), q_exp, v.index());
    }
    return f;
}

inline std::string field_header(const AnyField& f) {
    return std::visit([](const auto& p) { return p->header(); }, f);
}

// '+', '-', '*', '/', '^' over scalars, skew polynomials and matrices
template <class K>
class ExprParser {
   public:
    using Poly = SkewPoly<K>;
    using Matrix = SkewMatrix<K>;
    using field_ptr = typename K::field_ptr;

    struct Value {
        std::optional<Matrix> m;
        Poly p;
    };

    // var_name: the spelling of the variable ("tau", "sig", or "t" for F_q[t])
    ExprParser(field_ptr f, Var v, std::string text, std::string var_name = {})
        : f_(std::move(f)), v_(v), lx_(std::move(text)), name_(std::move(var_name)) {}

    Value parse() {
        Value r = expr();
        if (lx_.peek().kind != detail::Token::end) lx_.error("trailing input");
        return r;
    }

   private:
    Value scalar(const Poly& p) const { return {std::nullopt, p}; }

    Value expr() {
        Value r = term();
        for (;;) {
            if (lx_.accept('+'))
                r = add(r, term());
            else if (lx_.accept('-'))
                r = add(r, neg(term()));
            else
                return r;
        }
    }
    Value term() {
        Value r = unary();
        for (;;) {
            if (lx_.accept('*')) {
                r = mul(r, unary());
            } else if (lx_.accept('/')) {
                const Value d = unary();
                if (d.m || d.p.degree() > 0) lx_.error("can only divide by a scalar");
                if (d.p.is_zero()) throw DivisionByZero("division by zero in \"" + lx_.source() + "\"");
                r = mul(r, scalar(Poly::constant(d.p.coeff(0).inv(), v_)));
            } else {
                return r;
            }
        }
    }
    Value unary() {
        if (lx_.accept('-')) return neg(unary());
        if (lx_.accept('+')) return unary();
        return power();
    }
    Value power() {
        Value b = atom();
        if (!lx_.accept('^')) return b;
        const long long e = detail::parse_signed(lx_);
        if (!b.m && b.p.degree() <= 0) {
            if (b.p.is_zero()) {
                if (e < 0) throw DivisionByZero("negative power of zero");
                return e == 0 ? scalar(Poly::constant(K::one(f_), v_)) : b;
            }
            return scalar(Poly::constant(b.p.coeff(0).pow(e), v_));
        }
        if (e < 0) lx_.error("negative power of a non-scalar");
        if (e > 4096) lx_.error("exponent too large");
        if (b.m) {
            if (b.m->rows() != b.m->cols()) lx_.error("power of a non-square matrix");
            Matrix r = Matrix::identity(f_, v_, b.m->rows());
            for (long long i = 0; i < e; ++i) r = r * *b.m;
            return {r, Poly(f_, v_)};
        }
        Poly r = Poly::constant(K::one(f_), v_);
        for (long long i = 0; i < e; ++i) r *= b.p;
        return scalar(r);
    }
    Value atom() {
        const auto& t = lx_.peek();
        if (t.kind == detail::Token::num) return scalar(Poly::constant(K::from_int(f_, lx_.take().value), v_));
        if (lx_.accept('(')) {
            Value r = expr();
            lx_.expect(')');
            return r;
        }
        if (lx_.accept('[')) return matrix();
        if (t.kind == detail::Token::ident) {
            const std::string name = lx_.take().text;
            if (name == var_spelling() || (v_ == Var::sigma && name == "sigma" && name_.empty()))
                return scalar(Poly::var(f_, v_));
            if (name == "tau" || name == "sig" || name == "sigma" || name == "t")
                lx_.error("variable '" + name + "' does not belong here");
            std::optional<long long> idx;
            if (lx_.accept('[')) {
                idx = detail::parse_signed(lx_);
                lx_.expect(']');
            }
            auto c = K::symbol(f_, name, idx);
            if (!c) lx_.error("unknown symbol '" + name + (idx ? "[" + std::to_string(*idx) + "]" : "") + "'");
            return scalar(Poly::constant(*c, v_));
        }
        lx_.error("expected an expression");
    }
    // after the opening '['
    Value matrix() {
        std::vector<std::vector<Poly>> rows;
        do {
            lx_.expect('[');
            std::vector<Poly> row;
            do {
                Value x = expr();
                if (x.m) lx_.error("nested matrix entry");
                row.push_back(x.p);
            } while (lx_.accept(','));
            lx_.expect(']');
            if (!rows.empty() && row.size() != rows[0].size()) lx_.error("ragged matrix rows");
            rows.push_back(std::move(row));
        } while (lx_.accept(','));
        lx_.expect(']');
        return {Matrix::from_rows(f_, v_, rows), Poly(f_, v_)};
    }

    Value neg(const Value& a) const { return a.m ? Value{-*a.m, a.p} : scalar(-a.p); }
    Value add(const Value& a, const Value& b) {
        if (!a.m && !b.m) return scalar(a.p + b.p);
        if (a.m && b.m) {
            if (a.m->rows() != b.m->rows() || a.m->cols() != b.m->cols()) lx_.error("matrix shapes differ");
            return {*a.m + *b.m, a.p};
        }
        const Matrix& M = a.m ? *a.m : *b.m;
        const Poly& s = a.m ? b.p : a.p;
        if (M.rows() != M.cols()) lx_.error("scalar plus non-square matrix");
        return {M + s * Matrix::identity(f_, v_, M.rows()), Poly(f_, v_)};
    }
    Value mul(const Value& a, const Value& b) {
        if (!a.m && !b.m) return scalar(a.p * b.p);
        if (a.m && b.m) {
            if (a.m->cols() != b.m->rows()) lx_.error("matrix shapes do not multiply");
            return {*a.m * *b.m, a.p};
        }
        if (a.m) {
            Matrix r = *a.m;
            for (int i = 0; i < r.rows(); ++i)
                for (int j = 0; j < r.cols(); ++j) r(i, j) = r(i, j) * b.p;
            return {r, a.p};
        }
        return {a.p * *b.m, b.p};
    }
    std::string var_spelling() const {
        if (!name_.empty()) return name_;
        return v_ == Var::tau ? "tau" : "sig";
    }

    field_ptr f_;
    Var v_;
    detail::Lexer lx_;
    std::string name_;
};

// tau unless the text mentions sig or sigma
inline Var detect_var(const std::string& text) {
    detail::Lexer lx(text);
    while (lx.peek().kind != detail::Token::end) {
        const auto t = lx.take();
        if (t.kind == detail::Token::ident && (t.text == "sig" || t.text == "sigma")) return Var::sigma;
    }
    return Var::tau;
}

template <class K>
SkewMatrix<K> parse_matrix(const typename K::field_ptr& f, const std::string& text, Var v) {
    auto r = ExprParser<K>(f, v, text).parse();
    return r.m ? *r.m : SkewMatrix<K>::scalar(r.p);
}

template <class K>
SkewPoly<K> parse_poly(const typename K::field_ptr& f, const std::string& text, Var v = Var::tau) {
    auto r = ExprParser<K>(f, v, text).parse();
    if (r.m) throw ParseError("expected a polynomial, got a matrix in \"" + text + "\"");
    return r.p;
}

template <class K>
K parse_element(const typename K::field_ptr& f, const std::string& text) {
    auto p = parse_poly<K>(f, text, Var::tau);
    if (p.degree() > 0) throw ParseError("expected a field element in \"" + text + "\"");
    return p.coeff(0);
}

// a in F_q[t], coefficients low degree first
template <class K>
std::vector<K> parse_tpoly(const typename K::field_ptr& f, const std::string& text) {
    auto r = ExprParser<K>(f, Var::tau, text, "t").parse();
    if (r.m) throw ParseError("expected a polynomial in t");
    std::vector<K> a;
    for (int d = 0; d <= std::max(r.p.degree(), 0); ++d) a.push_back(r.p.coeff(d));
    return a;
}

}  // namespace ftmod

#endif
