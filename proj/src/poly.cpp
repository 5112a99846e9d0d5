/*
   Copyright 2026 The gorext authors

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

#include "gorext/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gorext {

namespace {

// ---------------------------------------------------------------- term maps

using detail::TermGreater;
using detail::TermMap;

TermMap make_map(const RingPtr& ring) { return TermMap(TermGreater{ring}); }

void map_add(TermMap& m, const Monomial& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = m.find(mono);
    if (it == m.end()) {
        m.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

void map_add_all(TermMap& dst, const TermMap& src, bool negate) {
    for (const auto& [mono, c] : src) map_add(dst, mono, negate ? -c : c);
}

std::optional<int> map_homogeneous_degree(const RingPtr& ring, const TermMap& m) {
    std::optional<int> d;
    for (const auto& [mono, c] : m) {
        int e = ring->weighted_degree(mono);
        if (!d) {
            d = e;
        } else if (*d != e) {
            return std::nullopt;
        }
    }
    return d;
}

int map_degree(const RingPtr& ring, const TermMap& m) {
    int d = -1;
    for (const auto& [mono, c] : m) d = std::max(d, ring->weighted_degree(mono));
    return d;
}

// binom(i+j, j) per variable; integral, so valid in any characteristic
Scalar divided_structure_constant(const FieldSpec& f, const Monomial& a, const Monomial& b) {
    mpz_class prod = 1;
    for (size_t i = 0; i < a.exps.size(); ++i) {
        if (a.exps[i] == 0 || b.exps[i] == 0) continue;
        mpz_class bin;
        mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(a.exps[i] + b.exps[i]),
                     static_cast<unsigned long>(b.exps[i]));
        prod *= bin;
    }
    return Scalar(f, prod);
}

// ------------------------------------------------------------------- parser

struct Token {
    enum Kind { number, name, plus, minus, star, caret, slash, lbracket, rbracket, end } kind;
    std::string text;
    size_t pos;
};

class Lexer {
   public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }
    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

   private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        size_t start = i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::end, "", start};
            return;
        }
        char c = s_[i_];
        auto single = [&](Token::Kind k) {
            ++i_;
            tok_ = {k, std::string(1, c), start};
        };
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            tok_ = {Token::number, std::string(s_.substr(i_, j - i_)), start};
            i_ = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) ||
                                     s_[j] == '_')) {
                ++j;
            }
            tok_ = {Token::name, std::string(s_.substr(i_, j - i_)), start};
            i_ = j;
        } else {
            switch (c) {
                case '+': single(Token::plus); break;
                case '-': single(Token::minus); break;
                case '*': single(Token::star); break;
                case '^': single(Token::caret); break;
                case '/': single(Token::slash); break;
                case '[': single(Token::lbracket); break;
                case ']': single(Token::rbracket); break;
                default:
                    throw std::invalid_argument("parse error at position " +
                                                std::to_string(start) + ": unexpected '" +
                                                std::string(1, c) + "'");
            }
        }
    }

    std::string_view s_;
    size_t i_ = 0;
    Token tok_;
};

[[noreturn]] void parse_fail(const Token& t, const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(t.pos) + ": " + what);
}

// One grammar serves both rings; `dual` switches the variable namespace and
// makes ^k mean the divided power ^[k].
TermMap parse_terms(const RingPtr& ring, std::string_view text, bool dual) {
    Lexer lx(text);
    TermMap out = make_map(ring);
    const FieldSpec& f = ring->field();

    auto parse_exponent = [&]() -> int {
        Token t = lx.take();
        bool bracket = false;
        if (t.kind == Token::lbracket) {
            bracket = true;
            t = lx.take();
        }
        if (t.kind != Token::number) parse_fail(t, "expected exponent");
        long e = std::stol(t.text);
        if (bracket) {
            Token rb = lx.take();
            if (rb.kind != Token::rbracket) parse_fail(rb, "expected ']'");
        }
        return static_cast<int>(e);
    };

    bool first = true;
    while (true) {
        Token t = lx.peek();
        if (t.kind == Token::end) {
            if (first) parse_fail(t, "empty polynomial");
            break;
        }
        bool negate = false;
        if (t.kind == Token::plus || t.kind == Token::minus) {
            negate = (t.kind == Token::minus);
            lx.take();
        } else if (!first) {
            parse_fail(t, "expected '+' or '-' between terms");
        }
        first = false;

        Scalar coef = Scalar::one(f);
        Monomial mono(ring->var_count());
        bool any_factor = false;
        while (true) {
            Token ft = lx.take();
            if (ft.kind == Token::number) {
                mpz_class num(ft.text);
                if (lx.peek().kind == Token::slash) {
                    lx.take();
                    Token dt = lx.take();
                    if (dt.kind != Token::number) parse_fail(dt, "expected denominator");
                    mpz_class den(dt.text);
                    if (den == 0) parse_fail(dt, "zero denominator");
                    coef *= Scalar(f, mpq_class(num, den));
                } else {
                    coef *= Scalar(f, num);
                }
            } else if (ft.kind == Token::name) {
                int idx = dual ? ring->dual_index_of(ft.text) : ring->index_of(ft.text);
                if (idx < 0) {
                    parse_fail(ft, "unknown " + std::string(dual ? "dual " : "") + "variable '" +
                                       ft.text + "' in " + ring->to_string());
                }
                int e = 1;
                if (lx.peek().kind == Token::caret) {
                    lx.take();
                    e = parse_exponent();
                }
                if (e < 0) parse_fail(ft, "negative exponent");
                if (dual && mono.exps[idx] != 0) {
                    parse_fail(ft, "variable '" + ft.text +
                                       "' repeated in one divided-power term; write X^[k]");
                }
                mono.exps[idx] += e;
            } else {
                parse_fail(ft, "expected a coefficient or a variable");
            }
            any_factor = true;
            if (lx.peek().kind == Token::star) {
                lx.take();
                continue;
            }
            break;
        }
        if (!any_factor) parse_fail(lx.peek(), "empty term");
        map_add(out, mono, negate ? -coef : coef);
    }
    return out;
}

// ------------------------------------------------------------------ printer

std::string print_terms(const RingPtr& ring, const TermMap& terms, bool dual) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms) {
        bool neg = !ring->field().is_prime_field() && sgn(c.value()) < 0;
        Scalar mag = neg ? -c : c;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::ostringstream factors;
        bool any = false;
        for (size_t i = 0; i < mono.exps.size(); ++i) {
            int e = mono.exps[i];
            if (e == 0) continue;
            if (any) factors << "*";
            factors << (dual ? ring->dual_name(i) : ring->var_name(i));
            if (e != 1) {
                if (dual) {
                    factors << "^[" << e << "]";
                } else {
                    factors << "^" << e;
                }
            }
            any = true;
        }
        if (!any) {
            os << mag.to_string();
        } else if (mag.is_one()) {
            os << factors.str();
        } else {
            os << mag.to_string() << "*" << factors.str();
        }
    }
    return os.str();
}

mpz_class factorial_product(const Monomial& m) {
    mpz_class prod = 1;
    for (int e : m.exps) {
        if (e > 1) {
            mpz_class f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
            prod *= f;
        }
    }
    return prod;
}

void require_derivative_basis_ok(const RingPtr& ring, int deg) {
    const FieldSpec& f = ring->field();
    if (!f.is_prime_field()) return;
    if (f.characteristic() > static_cast<unsigned long>(deg)) return;
    throw std::domain_error("derivative basis needs char 0 or p > deg = " + std::to_string(deg) +
                            "; over " + f.to_string() + " the factorial " +
                            std::to_string(f.characteristic()) + "! vanishes");
}

}  // namespace

// --------------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring) : ring_(std::move(ring)), terms_(make_map(ring_)) {}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
    Poly p(std::move(ring));
    p.add_term(Monomial(p.ring_->var_count()), c);
    return p;
}

Poly Poly::variable(RingPtr ring, size_t i) {
    Poly p(std::move(ring));
    Monomial m(p.ring_->var_count());
    m.exps.at(i) = 1;
    p.add_term(m, Scalar::one(p.ring_->field()));
    return p;
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
    Poly p(std::move(ring));
    if (m.exps.size() != p.ring_->var_count()) throw std::invalid_argument("monomial arity");
    p.add_term(m, c);
    return p;
}

Poly Poly::parse(RingPtr ring, std::string_view text) {
    Poly p(ring);
    p.terms_ = parse_terms(ring, text, false);
    return p;
}

Scalar Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_->field()) : it->second;
}

bool Poly::is_homogeneous() const { return is_zero() || map_homogeneous_degree(ring_, terms_).has_value(); }

std::optional<int> Poly::homogeneous_degree() const { return map_homogeneous_degree(ring_, terms_); }

int Poly::degree() const { return map_degree(ring_, terms_); }

Poly Poly::operator-() const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    map_add_all(terms_, rhs.terms_, false);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    map_add_all(terms_, rhs.terms_, true);
    return *this;
}

Poly Poly::operator+(const Poly& rhs) const {
    Poly r(*this);
    r += rhs;
    return r;
}

Poly Poly::operator-(const Poly& rhs) const {
    Poly r(*this);
    r -= rhs;
    return r;
}

Poly Poly::operator*(const Poly& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    Poly r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m(ring_->var_count());
            for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool Poly::operator==(const Poly& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    }
    return true;
}

Scalar Poly::evaluate(std::span<const Scalar> point) const {
    if (point.size() != ring_->var_count()) throw std::invalid_argument("point arity");
    Scalar acc = Scalar::zero(ring_->field());
    for (const auto& [m, c] : terms_) {
        Scalar term = c;
        for (size_t i = 0; i < m.exps.size(); ++i) {
            for (int e = 0; e < m.exps[i]; ++e) term *= point[i];
        }
        acc += term;
    }
    return acc;
}

Poly Poly::substitute_zero(size_t var) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (m.exps.at(var) == 0) r.terms_.emplace(m, c);
    }
    return r;
}

Poly Poly::graded_part(int d) const {
    Poly r(ring_);
    for (const auto& [m, c] : terms_) {
        if (ring_->weighted_degree(m) == d) r.terms_.emplace(m, c);
    }
    return r;
}

Poly Poly::lift_to(RingPtr bigger) const {
    std::vector<int> where(ring_->var_count());
    for (size_t i = 0; i < ring_->var_count(); ++i) {
        int j = bigger->index_of(ring_->var_name(i));
        if (j < 0 || bigger->weight(j) != ring_->weight(i)) {
            throw std::invalid_argument("target ring does not contain variable " +
                                        ring_->var_name(i));
        }
        where[i] = j;
    }
    Poly r(bigger);
    for (const auto& [m, c] : terms_) {
        Monomial big(bigger->var_count());
        for (size_t i = 0; i < m.exps.size(); ++i) big.exps[where[i]] = m.exps[i];
        r.add_term(big, c);
    }
    return r;
}

std::string Poly::to_string() const { return print_terms(ring_, terms_, false); }

void Poly::add_term(const Monomial& m, const Scalar& c) { map_add(terms_, m, c); }

// ----------------------------------------------------------------- DualPoly

DualPoly::DualPoly(RingPtr ring) : ring_(std::move(ring)), terms_(make_map(ring_)) {}

DualPoly DualPoly::constant(RingPtr ring, const Scalar& c) {
    DualPoly p(std::move(ring));
    p.add_term(Monomial(p.ring_->var_count()), c);
    return p;
}

DualPoly DualPoly::variable(RingPtr ring, size_t i) {
    DualPoly p(std::move(ring));
    Monomial m(p.ring_->var_count());
    m.exps.at(i) = 1;
    p.add_term(m, Scalar::one(p.ring_->field()));
    return p;
}

DualPoly DualPoly::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
    DualPoly p(std::move(ring));
    if (m.exps.size() != p.ring_->var_count()) throw std::invalid_argument("monomial arity");
    p.add_term(m, c);
    return p;
}

DualPoly DualPoly::parse(RingPtr ring, std::string_view text) {
    DualPoly p(ring);
    p.terms_ = parse_terms(ring, text, true);
    return p;
}

Scalar DualPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar::zero(ring_->field()) : it->second;
}

bool DualPoly::is_homogeneous() const {
    return is_zero() || map_homogeneous_degree(ring_, terms_).has_value();
}

std::optional<int> DualPoly::homogeneous_degree() const {
    return map_homogeneous_degree(ring_, terms_);
}

int DualPoly::degree() const { return map_degree(ring_, terms_); }

DualPoly DualPoly::operator-() const {
    DualPoly r(ring_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

DualPoly& DualPoly::operator+=(const DualPoly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    map_add_all(terms_, rhs.terms_, false);
    return *this;
}

DualPoly& DualPoly::operator-=(const DualPoly& rhs) {
    require_same_ring(ring_, rhs.ring_);
    map_add_all(terms_, rhs.terms_, true);
    return *this;
}

DualPoly DualPoly::operator+(const DualPoly& rhs) const {
    DualPoly r(*this);
    r += rhs;
    return r;
}

DualPoly DualPoly::operator-(const DualPoly& rhs) const {
    DualPoly r(*this);
    r -= rhs;
    return r;
}

DualPoly DualPoly::operator*(const DualPoly& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    DualPoly r(ring_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m(ring_->var_count());
            for (size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = ma.exps[i] + mb.exps[i];
            r.add_term(m, ca * cb * divided_structure_constant(ring_->field(), ma, mb));
        }
    }
    return r;
}

DualPoly DualPoly::operator*(const Scalar& c) const {
    DualPoly r(ring_);
    if (c.is_zero()) return r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

bool DualPoly::operator==(const DualPoly& rhs) const {
    require_same_ring(ring_, rhs.ring_);
    if (terms_.size() != rhs.terms_.size()) return false;
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    for (; it != terms_.end(); ++it, ++jt) {
        if (!(it->first == jt->first) || it->second != jt->second) return false;
    }
    return true;
}

DualPoly DualPoly::lift_to(RingPtr bigger) const {
    std::vector<int> where(ring_->var_count());
    for (size_t i = 0; i < ring_->var_count(); ++i) {
        int j = bigger->index_of(ring_->var_name(i));
        if (j < 0 || bigger->weight(j) != ring_->weight(i)) {
            throw std::invalid_argument("target ring does not contain variable " +
                                        ring_->var_name(i));
        }
        where[i] = j;
    }
    DualPoly r(bigger);
    for (const auto& [m, c] : terms_) {
        Monomial big(bigger->var_count());
        for (size_t i = 0; i < m.exps.size(); ++i) big.exps[where[i]] = m.exps[i];
        r.add_term(big, c);
    }
    return r;
}

DualPoly DualPoly::t_coefficient(int k) const {
    size_t ti = ring_->t_index();
    RingPtr sub = ring_->without_t();
    DualPoly r(sub);
    for (const auto& [m, c] : terms_) {
        if (m.exps[ti] != k) continue;
        Monomial small(sub->var_count());
        for (size_t i = 0; i < sub->var_count(); ++i) small.exps[i] = m.exps[i];
        r.add_term(small, c);
    }
    return r;
}

int DualPoly::t_degree() const {
    size_t ti = ring_->t_index();
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exps[ti]);
    return d;
}

DualPoly DualPoly::to_derivative_basis() const {
    require_derivative_basis_ok(ring_, degree());
    DualPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        r.terms_.emplace(m, c / Scalar(ring_->field(), factorial_product(m)));
    }
    return r;
}

DualPoly DualPoly::from_derivative_basis() const {
    require_derivative_basis_ok(ring_, degree());
    DualPoly r(ring_);
    for (const auto& [m, c] : terms_) {
        r.terms_.emplace(m, c * Scalar(ring_->field(), factorial_product(m)));
    }
    return r;
}

std::string DualPoly::to_string() const { return print_terms(ring_, terms_, true); }

void DualPoly::add_term(const Monomial& m, const Scalar& c) { map_add(terms_, m, c); }

// -------------------------------------------------------------- contraction

DualPoly contract(const Poly& g, const DualPoly& F) {
    require_same_ring(g.ring(), F.ring());
    DualPoly r(F.ring());
    for (const auto& [mg, cg] : g.terms()) {
        for (const auto& [mf, cf] : F.terms()) {
            Monomial m(mf.exps.size());
            bool ok = true;
            for (size_t i = 0; i < m.exps.size(); ++i) {
                m.exps[i] = mf.exps[i] - mg.exps[i];
                if (m.exps[i] < 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) r.add_term(m, cg * cf);
        }
    }
    return r;
}

DualPoly contract_derivative(const Poly& g, const DualPoly& F_ordinary) {
    require_same_ring(g.ring(), F_ordinary.ring());
    const FieldSpec& field = g.ring()->field();
    DualPoly r(F_ordinary.ring());
    for (const auto& [mg, cg] : g.terms()) {
        for (const auto& [mf, cf] : F_ordinary.terms()) {
            Monomial m(mf.exps.size());
            bool ok = true;
            mpz_class falling = 1;
            for (size_t i = 0; i < m.exps.size(); ++i) {
                m.exps[i] = mf.exps[i] - mg.exps[i];
                if (m.exps[i] < 0) {
                    ok = false;
                    break;
                }
                for (int a = mf.exps[i]; a > m.exps[i]; --a) falling *= a;
            }
            if (ok) r.add_term(m, cg * cf * Scalar(field, falling));
        }
    }
    return r;
}

// -------------------------------------------------------------- coordinates

namespace {

template <class P>
std::vector<Scalar> coords_impl(const P& p, std::span<const Monomial> basis) {
    const FieldSpec& f = p.ring()->field();
    std::vector<Scalar> v(basis.size(), Scalar::zero(f));
    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i].exps, i);
    for (const auto& [m, c] : p.terms()) {
        auto it = index.find(m.exps);
        if (it == index.end()) {
            throw std::invalid_argument("term outside the coordinate basis");
        }
        v[it->second] = c;
    }
    return v;
}

}  // namespace

std::vector<Scalar> coordinates(const Poly& p, std::span<const Monomial> basis) {
    return coords_impl(p, basis);
}

std::vector<Scalar> coordinates(const DualPoly& p, std::span<const Monomial> basis) {
    return coords_impl(p, basis);
}

Poly poly_from_coordinates(RingPtr ring, std::span<const Monomial> basis,
                           std::span<const Scalar> coords) {
    if (basis.size() != coords.size()) throw std::invalid_argument("basis/coords size mismatch");
    Poly p(std::move(ring));
    for (size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
}

DualPoly dual_from_coordinates(RingPtr ring, std::span<const Monomial> basis,
                               std::span<const Scalar> coords) {
    if (basis.size() != coords.size()) throw std::invalid_argument("basis/coords size mismatch");
    DualPoly p(std::move(ring));
    for (size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
    return p;
}

Poly normalized(const Poly& p) {
    if (p.is_zero()) return p;
    const FieldSpec& f = p.ring()->field();
    if (f.is_prime_field()) {
        return p * p.terms().begin()->second.inverse();
    }
    mpz_class den_lcm = 1, num_gcd = 0;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    }
    mpq_class scale(den_lcm, num_gcd);
    scale.canonicalize();
    Poly r = p * Scalar(f, scale);
    if (sgn(r.terms().begin()->second.value()) < 0) r = -r;
    return r;
}

}  // namespace gorext
