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

#ifndef GOREXT_FIELD_HPP
#define GOREXT_FIELD_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gorext {

enum class FieldKind { rationals, prime_field };

/// The base field k: the rationals, or F_p for a prime p.
class FieldSpec {
   public:
    FieldSpec() : kind_(FieldKind::rationals), p_(0) {}

    static FieldSpec rationals() { return FieldSpec(); }
    static FieldSpec prime_field(unsigned long p);  // throws if p is not prime

    FieldKind kind() const { return kind_; }
    bool is_prime_field() const { return kind_ == FieldKind::prime_field; }
    // 0 for the rationals, p for F_p
    unsigned long characteristic() const { return p_; }

    bool operator==(const FieldSpec& other) const = default;

    std::string to_string() const;

   private:
    FieldKind kind_;
    unsigned long p_;
};

/// An exact element of a FieldSpec: a canonical rational (gcd(num,den)=1,
/// den>0, which mpq_class maintains) or a residue in [0,p).
class Scalar {
   public:
    Scalar() : v_(0) {}  // rational zero
    explicit Scalar(const FieldSpec& f) : v_(0), f_(f) {}
    Scalar(const FieldSpec& f, long n);
    Scalar(const FieldSpec& f, const mpz_class& n);
    Scalar(const FieldSpec& f, const mpq_class& q);  // reduces mod p as needed

    static Scalar zero(const FieldSpec& f) { return Scalar(f); }
    static Scalar one(const FieldSpec& f) { return Scalar(f, 1); }
    // Text syntax: `a`, `-a`, `a/b` with decimal integer literals.
    static Scalar parse(const FieldSpec& f, std::string_view text);

    const FieldSpec& field() const { return f_; }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);  // throws on division by zero

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar inverse() const;

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

   private:
    void require_same_field(const Scalar& other) const;
    void reduce();  // prime field: canonical residue

    mpq_class v_;
    FieldSpec f_;
};

// Warning text for finite characteristic at or below a socle degree j
// (divided powers stay valid, but derivative-basis comparisons are off).
std::optional<std::string> small_char_warning(const FieldSpec& f, int socle_degree);

}  // namespace gorext

#endif
