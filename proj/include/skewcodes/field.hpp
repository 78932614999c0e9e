/*
 * Copyright 2026 The skewcodes Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/// Finite fields GF(p^s) in polynomial basis, their Frobenius automorphisms,
/// inner θ-derivations and extension fields.
///
/// An element is stored as the base-p integer c_0 + c_1 p + ... + c_{s-1} p^{s-1}
/// of its coefficient vector in the basis 1, x, ..., x^{s-1}. Arithmetic goes
/// through log/antilog tables built once per field.

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skewcodes {

/// Canonical integer encoding of a field element; only meaningful together
/// with the Field it came from.
struct Elem {
    std::uint32_t raw = 0;

    constexpr Elem() = default;
    constexpr explicit Elem(std::uint32_t r) : raw(r) {}

    constexpr bool is_zero() const { return raw == 0; }
    friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr Elem kZero{0};
inline constexpr Elem kOne{1};

namespace detail {
struct FieldData;
}

class Field {
public:
    /// GF(p^s). Without a modulus the bundled Conway polynomial is used.
    /// `modulus` lists the s+1 coefficients in ascending degree and must be monic.
    static Field create(std::uint32_t p, std::uint32_t s,
                        std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// GF(q) for a prime power q, with the default modulus.
    static Field from_order(std::uint32_t q);

    std::uint32_t p() const;
    std::uint32_t s() const;
    std::uint32_t q() const;
    bool is_prime_field() const { return s() == 1; }
    const std::vector<std::uint32_t>& modulus() const;

    /// Distinguished primitive element w (class of x, or the smallest primitive root).
    Elem primitive() const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^e; negative e requires a != 0. 0^0 = 1.
    Elem pow(Elem a, std::int64_t e) const;
    /// a^{p^t}.
    Elem frobenius(Elem a, std::uint32_t t) const;

    /// Discrete log to base w; a must be nonzero.
    std::uint32_t log(Elem a) const;
    /// w^k for any integer k.
    Elem exp(std::int64_t k) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order(Elem a) const;

    /// Image of the integer n in the prime subfield.
    Elem from_int(std::int64_t n) const;
    /// Coefficient vector (length s) of a.
    std::vector<std::uint32_t> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const std::uint32_t> c) const;
    /// Coefficient of x^j in a.
    std::uint32_t coeff(Elem a, std::uint32_t j) const;
    /// True when a lies in GF(p).
    bool in_prime_subfield(Elem a) const { return a.raw < p(); }

    bool contains(Elem a) const { return a.raw < q(); }

    /// The prime subfield GF(p) as a field of its own. Elements of GF(p) have the
    /// same encoding in both fields.
    Field prime_subfield() const;

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b);

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
};

/// Bundled Conway polynomial for (p, s), ascending coefficients.
std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t s);

/// Irreducibility of a monic polynomial over GF(p) by trial division.
bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p);

bool is_prime(std::uint64_t n);

/// Element bound to its field, for API boundaries where mixing fields must be caught.
class FieldElem {
public:
    FieldElem(Field f, Elem e);

    const Field& field() const { return field_; }
    Elem value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator/(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem pow(std::int64_t e) const;
    FieldElem inverse() const;

    bool operator==(const FieldElem& o) const;

private:
    void check_same(const FieldElem& o) const;
    Field field_;
    Elem value_;
};

/// θ(a) = a^{p^t}, 0 <= t < s.
class Automorphism {
public:
    Automorphism(Field f, std::uint32_t t);
    static Automorphism identity(Field f) { return Automorphism(std::move(f), 0); }

    const Field& field() const { return field_; }
    std::uint32_t t() const { return t_; }
    bool is_identity() const { return t_ == 0; }
    /// s / gcd(s, t).
    std::uint32_t order() const;
    Automorphism inverse() const;
    /// θ^j for any integer j.
    Automorphism power(std::int64_t j) const;

    Elem operator()(Elem a) const { return field_.frobenius(a, t_); }
    FieldElem operator()(const FieldElem& a) const;

    /// Elements fixed by θ.
    bool fixes(Elem a) const { return (*this)(a) == a; }

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.t_ == b.t_ && a.field_ == b.field_;
    }

private:
    Field field_;
    std::uint32_t t_;
};

/// δ(a) = β(θ(a) − a).
class Derivation {
public:
    Derivation(Automorphism theta, Elem beta);

    const Automorphism& theta() const { return theta_; }
    Elem beta() const { return beta_; }
    bool is_zero() const { return beta_.is_zero() || theta_.is_identity(); }

    Elem operator()(Elem a) const;
    FieldElem operator()(const FieldElem& a) const;

private:
    Automorphism theta_;
    Elem beta_;
};

FieldElem apply_automorphism(const Automorphism& theta, const FieldElem& a);
FieldElem apply_derivation(const Derivation& delta, const FieldElem& a);
std::uint64_t element_order(const FieldElem& a);

/// Injective ring homomorphism GF(p^s) -> GF(p^{sm}).
class Embedding {
public:
    Embedding(Field base, Field ext, std::vector<Elem> image);

    const Field& base() const { return base_; }
    const Field& extension() const { return ext_; }
    Elem operator()(Elem a) const { return image_.at(a.raw); }
    FieldElem operator()(const FieldElem& a) const;

private:
    Field base_;
    Field ext_;
    std::vector<Elem> image_;
};

struct Extension {
    Field field;
    Embedding embed;
};

/// GF(p^{sm}) together with the embedding of `base`. The Frobenius power
/// x -> x^{p^t} on the base extends by the same formula.
Extension extend_field(const Field& base, std::uint32_t m);

}  // namespace skewcodes
