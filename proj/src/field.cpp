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

#include "gorext/field.hpp"

#include <cctype>
#include <ostream>

namespace gorext {

FieldSpec FieldSpec::prime_field(unsigned long p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
        throw std::invalid_argument("prime field modulus " + std::to_string(p) + " is not prime");
    }
    FieldSpec f;
    f.kind_ = FieldKind::prime_field;
    f.p_ = p;
    return f;
}

std::string FieldSpec::to_string() const {
    return is_prime_field() ? "GF(" + std::to_string(p_) + ")" : "QQ";
}

Scalar::Scalar(const FieldSpec& f, long n) : v_(n), f_(f) { reduce(); }

Scalar::Scalar(const FieldSpec& f, const mpz_class& n) : v_(n), f_(f) { reduce(); }

Scalar::Scalar(const FieldSpec& f, const mpq_class& q) : v_(q), f_(f) {
    v_.canonicalize();
    if (f_.is_prime_field() && v_.get_den() != 1) {
        // a/b -> a * b^{-1} mod p
        Scalar den(f_, v_.get_den());
        v_ = v_.get_num();
        reduce();
        *this *= den.inverse();
    } else {
        reduce();
    }
}

void Scalar::reduce() {
    if (!f_.is_prime_field()) return;
    mpz_class p(f_.characteristic());
    mpz_class r;
    mpz_mod(r.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t());  // mpz_mod is non-negative
    v_ = r;
}

void Scalar::require_same_field(const Scalar& other) const {
    if (!(f_ == other.f_)) {
        throw std::invalid_argument("mixed-field operands: " + f_.to_string() + " vs " +
                                    other.f_.to_string());
    }
}

Scalar Scalar::operator-() const {
    Scalar r(*this);
    r.v_ = -r.v_;
    r.reduce();
    return r;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
    require_same_field(rhs);
    v_ += rhs.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
    require_same_field(rhs);
    v_ -= rhs.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
    require_same_field(rhs);
    v_ *= rhs.v_;
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
    require_same_field(rhs);
    if (rhs.is_zero()) throw std::domain_error("division by zero in " + f_.to_string());
    if (f_.is_prime_field()) {
        *this *= rhs.inverse();
    } else {
        v_ /= rhs.v_;
    }
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in " + f_.to_string());
    Scalar r(f_);
    if (f_.is_prime_field()) {
        mpz_class p(f_.characteristic()), inv;
        if (mpz_invert(inv.get_mpz_t(), v_.get_num().get_mpz_t(), p.get_mpz_t()) == 0) {
            throw std::domain_error("non-invertible residue in " + f_.to_string());
        }
        r.v_ = inv;
        r.reduce();
    } else {
        r.v_ = mpq_class(1) / v_;
    }
    return r;
}

bool Scalar::operator==(const Scalar& rhs) const {
    require_same_field(rhs);
    return v_ == rhs.v_;
}

std::string Scalar::to_string() const {
    return v_.get_str();  // "a", "-a" or "a/b" in lowest terms
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
    // strip whitespace
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty scalar literal");
    auto is_int = [](std::string_view s) {
        if (s.empty()) return false;
        size_t i = (s[0] == '-') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    auto slash = t.find('/');
    if (slash == std::string::npos) {
        if (!is_int(t)) throw std::invalid_argument("bad scalar literal '" + t + "'");
        return Scalar(f, mpz_class(t));
    }
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-') {
        throw std::invalid_argument("bad scalar literal '" + t + "'");
    }
    if (mpz_class(den) == 0) throw std::domain_error("zero denominator in scalar literal");
    return Scalar(f, mpq_class(mpz_class(num), mpz_class(den)));
}

std::optional<std::string> small_char_warning(const FieldSpec& f, int socle_degree) {
    if (!f.is_prime_field()) return std::nullopt;
    if (socle_degree < 0 || f.characteristic() > static_cast<unsigned long>(socle_degree)) {
        return std::nullopt;
    }
    return "characteristic " + std::to_string(f.characteristic()) +
           " is <= socle degree " + std::to_string(socle_degree) +
           "; divided-power contraction remains valid, derivative-basis comparisons are disabled";
}

}  // namespace gorext
