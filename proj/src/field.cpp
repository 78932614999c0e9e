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

#include "skewcodes/field.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "skewcodes/error.hpp"

namespace skewcodes {

namespace detail {

struct FieldData {
    std::uint32_t p = 0;
    std::uint32_t s = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::uint32_t primitive = 0;
    std::vector<std::uint32_t> log;    // log[a] for a != 0
    std::vector<std::uint32_t> exp;    // exp[k], k in [0, 2(q-1))
    std::vector<std::uint32_t> frob;   // a^p
    std::vector<std::uint32_t> neg;
    std::vector<std::uint16_t> add;    // q*q table when q is small and p odd
};

}  // namespace detail

namespace {

// Fields up to this order get a full addition table when p is odd.
constexpr std::uint32_t kAddTableLimit = 1024;
constexpr std::uint32_t kMaxOrder = 1u << 16;

using Poly = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Conway polynomials, ascending coefficients, monic.
const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly>& conway_table() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Poly> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
        {{2, 7}, {1, 1, 0, 0, 0, 0, 0, 1}},
        {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
        {{2, 9}, {1, 0, 0, 0, 1, 0, 0, 0, 0, 1}},
        {{2, 10}, {1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1}},
        {{2, 11}, {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 12}, {1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1}},
        {{2, 13}, {1, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 14}, {1, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 15}, {1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{2, 16}, {1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
    };
    return table;
}

// r := a mod m over GF(p), m monic.
void poly_mod(Poly& a, const Poly& m, std::uint32_t p) {
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - dm;
            for (std::size_t i = 0; i < dm; ++i) {
                a[shift + i] = (a[shift + i] + (p - lead) * m[i]) % p;
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t encode(const Poly& c, std::uint32_t p, std::uint32_t s) {
    std::uint32_t v = 0;
    for (std::uint32_t i = s; i-- > 0;) v = v * p + (i < c.size() ? c[i] : 0);
    return v;
}

Poly decode(std::uint32_t v, std::uint32_t p, std::uint32_t s) {
    Poly c(s);
    for (std::uint32_t i = 0; i < s; ++i) {
        c[i] = v % p;
        v /= p;
    }
    return c;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    poly_mod(r, m, p);
    return r;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
    if (p == 2) return 1;
    std::vector<std::uint32_t> factors;
    std::uint32_t n = p - 1;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            factors.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) factors.push_back(n);
    auto powmod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (std::uint32_t g = 2; g < p; ++g) {
        if (std::all_of(factors.begin(), factors.end(),
                        [&](std::uint32_t f) { return powmod(g, (p - 1) / f) != 1; })) {
            return g;
        }
    }
    return 1;
}

// Fills log/exp tables from a generator given as an encoded element.
// Returns false if the element does not have order q-1.
bool build_tables(detail::FieldData& d, std::uint32_t gen) {
    const std::uint32_t n = d.q - 1;
    d.exp.assign(2 * static_cast<std::size_t>(n), 0);
    d.log.assign(d.q, 0);
    std::vector<bool> seen(d.q, false);
    const Poly g = decode(gen, d.p, d.s);
    Poly cur = {1};
    for (std::uint32_t k = 0; k < n; ++k) {
        const std::uint32_t v = encode(cur, d.p, d.s);
        if (v == 0 || seen[v]) return false;
        seen[v] = true;
        d.exp[k] = v;
        d.log[v] = k;
        cur = poly_mul_mod(cur, g, d.modulus, d.p);
    }
    for (std::uint32_t k = 0; k < n; ++k) d.exp[n + k] = d.exp[k];
    return true;
}

std::uint32_t add_digits(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint32_t r = 0;
    std::uint32_t scale = 1;
    while (a || b) {
        r += ((a % p + b % p) % p) * scale;
        a /= p;
        b /= p;
        scale *= p;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible_mod_p(std::span<const std::uint32_t> poly, std::uint32_t p) {
    Poly f(poly.begin(), poly.end());
    while (!f.empty() && f.back() == 0) f.pop_back();
    if (f.size() < 2) return false;
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Try every monic divisor of degree 1..deg/2.
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        const std::uint64_t count = ipow(p, static_cast<std::uint32_t>(d));
        for (std::uint64_t code = 0; code < count; ++code) {
            Poly m(d + 1);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i) {
                m[i] = static_cast<std::uint32_t>(c % p);
                c /= p;
            }
            m[d] = 1;
            Poly r = f;
            poly_mod(r, m, p);
            if (r.empty()) return false;
        }
    }
    return true;
}

std::optional<Poly> conway_polynomial(std::uint32_t p, std::uint32_t s) {
    if (!is_prime(p) || s == 0) return std::nullopt;
    if (s == 1) return Poly{(p - smallest_primitive_root(p)) % p, 1};
    const auto& t = conway_table();
    auto it = t.find({p, s});
    if (it == t.end()) return std::nullopt;
    return it->second;
}

Field Field::create(std::uint32_t p, std::uint32_t s, std::optional<Poly> modulus) {
    if (!is_prime(p)) fail("field characteristic " + std::to_string(p) + " is not prime");
    if (s == 0) fail("field extension degree must be at least 1");
    const std::uint64_t q = ipow(p, s);
    if (q > kMaxOrder) fail("fields with more than 2^16 elements are not supported");

    auto d = std::make_shared<detail::FieldData>();
    d->p = p;
    d->s = s;
    d->q = static_cast<std::uint32_t>(q);
    if (modulus) {
        Poly m = *modulus;
        for (auto& c : m) c %= p;
        while (!m.empty() && m.back() == 0) m.pop_back();
        if (m.size() != s + 1) fail("modulus must have degree " + std::to_string(s));
        if (m.back() != 1) fail("modulus must be monic");
        if (!is_irreducible_mod_p(m, p)) fail("modulus is reducible over GF(" + std::to_string(p) + ")");
        d->modulus = std::move(m);
    } else {
        auto m = conway_polynomial(p, s);
        if (!m) {
            fail("no bundled modulus for GF(" + std::to_string(p) + "^" + std::to_string(s) +
                 "); pass one explicitly");
        }
        d->modulus = *m;
    }

    // Primitive element: the class of x when it generates, else the smallest
    // primitive element by encoding. For s = 1 the class of x is the root of
    // x - g, i.e. g itself.
    std::uint32_t gen = s == 1 ? (p - d->modulus[0]) % p : p;
    if (q == 2) gen = 1;
    if (!build_tables(*d, gen)) {
        bool found = false;
        for (std::uint32_t cand = 2; cand < q && !found; ++cand) found = build_tables(*d, gen = cand);
        if (!found) fail("modulus does not define a field");
    }
    d->primitive = gen;

    d->frob.resize(q);
    d->neg.resize(q);
    for (std::uint32_t a = 0; a < q; ++a) {
        Poly c = decode(a, p, s);
        for (auto& x : c) x = (p - x) % p;
        d->neg[a] = encode(c, p, s);
        d->frob[a] = a == 0 ? 0 : d->exp[(static_cast<std::uint64_t>(d->log[a]) * p) % (q - 1)];
    }
    if (p != 2 && q <= kAddTableLimit) {
        d->add.resize(static_cast<std::size_t>(q) * q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                d->add[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(add_digits(a, b, p));
            }
        }
    }
    return Field(std::move(d));
}

Field Field::from_order(std::uint32_t q) {
    if (q < 2) fail("field order must be a prime power >= 2");
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t s = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
        r /= p;
        ++s;
    }
    if (r != 1) fail(std::to_string(q) + " is not a prime power");
    return create(p, s);
}

std::uint32_t Field::p() const { return d_->p; }
std::uint32_t Field::s() const { return d_->s; }
std::uint32_t Field::q() const { return d_->q; }
const Poly& Field::modulus() const { return d_->modulus; }
Elem Field::primitive() const { return Elem(d_->primitive); }

Elem Field::add(Elem a, Elem b) const {
    if (d_->p == 2) return Elem(a.raw ^ b.raw);
    if (!d_->add.empty()) return Elem(d_->add[static_cast<std::size_t>(a.raw) * d_->q + b.raw]);
    return Elem(add_digits(a.raw, b.raw, d_->p));
}

Elem Field::neg(Elem a) const { return Elem(d_->neg[a.raw]); }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
    if (a.is_zero() || b.is_zero()) return kZero;
    return Elem(d_->exp[d_->log[a.raw] + d_->log[b.raw]]);
}

Elem Field::inv(Elem a) const {
    if (a.is_zero()) fail("inverse of zero");
    const std::uint32_t n = d_->q - 1;
    return Elem(d_->exp[(n - d_->log[a.raw]) % n]);
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (e == 0) return kOne;
    if (a.is_zero()) {
        if (e < 0) fail("negative power of zero");
        return kZero;
    }
    const std::int64_t n = d_->q - 1;
    std::int64_t k = (static_cast<std::int64_t>(d_->log[a.raw]) * (e % n)) % n;
    if (k < 0) k += n;
    return Elem(d_->exp[static_cast<std::size_t>(k)]);
}

Elem Field::frobenius(Elem a, std::uint32_t t) const {
    for (std::uint32_t i = 0; i < t % d_->s; ++i) a = Elem(d_->frob[a.raw]);
    return a;
}

std::uint32_t Field::log(Elem a) const {
    if (a.is_zero()) fail("logarithm of zero");
    return d_->log[a.raw];
}

Elem Field::exp(std::int64_t k) const {
    const std::int64_t n = d_->q - 1;
    k %= n;
    if (k < 0) k += n;
    return Elem(d_->exp[static_cast<std::size_t>(k)]);
}

std::uint64_t Field::order(Elem a) const {
    if (a.is_zero()) fail("zero has no multiplicative order");
    const std::uint64_t n = d_->q - 1;
    return n / std::gcd<std::uint64_t, std::uint64_t>(n, d_->log[a.raw]);
}

Elem Field::from_int(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(d_->p);
    if (r < 0) r += d_->p;
    return Elem(static_cast<std::uint32_t>(r));
}

Poly Field::coeffs(Elem a) const { return decode(a.raw, d_->p, d_->s); }

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
    if (c.size() > d_->s) fail("coefficient vector longer than the extension degree");
    Poly v(c.begin(), c.end());
    for (auto x : v) {
        if (x >= d_->p) fail("coefficient out of range [0, p)");
    }
    return Elem(encode(v, d_->p, d_->s));
}

std::uint32_t Field::coeff(Elem a, std::uint32_t j) const {
    std::uint32_t v = a.raw;
    for (std::uint32_t i = 0; i < j; ++i) v /= d_->p;
    return v % d_->p;
}

Field Field::prime_subfield() const {
    if (d_->s == 1) return *this;
    return create(d_->p, 1);
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << d_->q << ")";
    if (d_->s > 1) {
        os << " mod ";
        bool first = true;
        for (std::size_t i = d_->modulus.size(); i-- > 0;) {
            const auto c = d_->modulus[i];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i > 0) os << (c != 1 ? "*" : "") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        }
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    return a.d_->p == b.d_->p && a.d_->s == b.d_->s && a.d_->modulus == b.d_->modulus &&
           a.d_->primitive == b.d_->primitive;
}

// FieldElem

FieldElem::FieldElem(Field f, Elem e) : field_(std::move(f)), value_(e) {
    if (!field_.contains(e)) fail("element encoding out of range for " + field_.describe());
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!(field_ == o.field_)) fail("field mismatch: " + field_.describe() + " vs " + o.field_.describe());
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    return {field_, field_.add(value_, o.value_)};
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    return {field_, field_.sub(value_, o.value_)};
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    return {field_, field_.mul(value_, o.value_)};
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
    check_same(o);
    return {field_, field_.div(value_, o.value_)};
}

FieldElem FieldElem::operator-() const { return {field_, field_.neg(value_)}; }

FieldElem FieldElem::pow(std::int64_t e) const { return {field_, field_.pow(value_, e)}; }

FieldElem FieldElem::inverse() const { return {field_, field_.inv(value_)}; }

bool FieldElem::operator==(const FieldElem& o) const { return value_ == o.value_ && field_ == o.field_; }

// Automorphism / Derivation

Automorphism::Automorphism(Field f, std::uint32_t t) : field_(std::move(f)), t_(t % field_.s()) {}

std::uint32_t Automorphism::order() const { return field_.s() / std::gcd(field_.s(), t_); }

Automorphism Automorphism::inverse() const { return Automorphism(field_, (field_.s() - t_) % field_.s()); }

Automorphism Automorphism::power(std::int64_t j) const {
    const std::int64_t s = field_.s();
    std::int64_t t = (static_cast<std::int64_t>(t_) * (j % s)) % s;
    if (t < 0) t += s;
    return Automorphism(field_, static_cast<std::uint32_t>(t));
}

FieldElem Automorphism::operator()(const FieldElem& a) const {
    if (!(a.field() == field_)) fail("automorphism applied to an element of another field");
    return {field_, (*this)(a.value())};
}

Derivation::Derivation(Automorphism theta, Elem beta) : theta_(std::move(theta)), beta_(beta) {
    if (!theta_.field().contains(beta)) fail("derivation parameter outside the field");
}

Elem Derivation::operator()(Elem a) const {
    const Field& f = theta_.field();
    return f.mul(beta_, f.sub(theta_(a), a));
}

FieldElem Derivation::operator()(const FieldElem& a) const {
    if (!(a.field() == theta_.field())) fail("derivation applied to an element of another field");
    return {theta_.field(), (*this)(a.value())};
}

FieldElem apply_automorphism(const Automorphism& theta, const FieldElem& a) { return theta(a); }

FieldElem apply_derivation(const Derivation& delta, const FieldElem& a) { return delta(a); }

std::uint64_t element_order(const FieldElem& a) { return a.field().order(a.value()); }

// Extensions

Embedding::Embedding(Field base, Field ext, std::vector<Elem> image)
    : base_(std::move(base)), ext_(std::move(ext)), image_(std::move(image)) {}

FieldElem Embedding::operator()(const FieldElem& a) const {
    if (!(a.field() == base_)) fail("embedding applied to an element outside its base field");
    return {ext_, (*this)(a.value())};
}

Extension extend_field(const Field& base, std::uint32_t m) {
    if (m == 0) fail("extension degree must be at least 1");
    if (m == 1) {
        std::vector<Elem> id(base.q());
        for (std::uint32_t a = 0; a < base.q(); ++a) id[a] = Elem(a);
        return {base, Embedding(base, base, std::move(id))};
    }
    Field ext = Field::create(base.p(), base.s() * m);

    // Image of the base generator x: a root of the base modulus in ext. The
    // norm-compatible power of w is tried first (it is the root for Conway
    // moduli), then all elements in order.
    const auto& mod = base.modulus();
    auto is_root = [&](Elem r) {
        Elem acc = kZero;
        for (std::size_t i = mod.size(); i-- > 0;) acc = ext.add(ext.mul(acc, r), ext.from_int(mod[i]));
        return acc.is_zero();
    };
    Elem root = ext.exp((static_cast<std::int64_t>(ext.q()) - 1) / (base.q() - 1));
    if (base.s() == 1) {
        // Prime base field: the generator x of the polynomial basis is 1.
        root = kOne;
    } else if (!is_root(root)) {
        bool found = false;
        for (std::uint32_t r = 0; r < ext.q() && !found; ++r) {
            if (is_root(Elem(r))) {
                root = Elem(r);
                found = true;
            }
        }
        if (!found) fail("base modulus has no root in the extension");
    }
    std::vector<Elem> image(base.q());
    for (std::uint32_t a = 0; a < base.q(); ++a) {
        Elem acc = kZero;
        Elem pw = kOne;
        for (std::uint32_t j = 0; j < base.s(); ++j) {
            acc = ext.add(acc, ext.mul(ext.from_int(base.coeff(Elem(a), j)), pw));
            pw = ext.mul(pw, root);
        }
        image[a] = acc;
    }
    return {ext, Embedding(base, std::move(ext), std::move(image))};
}

}  // namespace skewcodes
