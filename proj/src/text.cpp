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

#include "skewcodes/text.hpp"

#include <cctype>
#include <charconv>

#include "skewcodes/error.hpp"

namespace skewcodes {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::int64_t parse_int(std::string_view s) {
    s = trim(s);
    std::int64_t v = 0;
    const char* b = s.data();
    const char* e = b + s.size();
    if (!s.empty() && s.front() == '+') ++b;
    auto [ptr, ec] = std::from_chars(b, e, v);
    if (ec != std::errc() || ptr != e || b == e) fail("not an integer: '" + std::string(s) + "'");
    return v;
}

// Splits "a,b,[c,d]" at top-level commas.
std::vector<std::string_view> split_top(std::string_view s) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '[' || s[i] == '(') ++depth;
        if (s[i] == ']' || s[i] == ')') --depth;
        if (s[i] == ',' && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    const auto last = trim(s.substr(start));
    if (!last.empty() || !out.empty()) out.push_back(last);
    return out;
}

std::string_view strip_brackets(std::string_view s, char open, char close) {
    s = trim(s);
    if (s.size() < 2 || s.front() != open || s.back() != close)
        fail("expected " + std::string(1, open) + "..." + std::string(1, close) + ": '" + std::string(s) + "'");
    return s.substr(1, s.size() - 2);
}

// Recursive-descent parser for polynomial expressions.
class PolyParser {
public:
    PolyParser(const RingCtx& ctx, std::string_view s) : ctx_(ctx), s_(s) {}

    SkewPoly parse() {
        SkewPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) error("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& msg) const {
        fail("polynomial syntax error at position " + std::to_string(pos_) + " in '" + std::string(s_) + "': " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_primary() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || c == 'w' || c == 'X' || c == 'x' || c == '(' || c == '[';
    }

    SkewPoly expr() {
        SkewPoly acc = SkewPoly::zero(ctx_);
        bool first = true;
        for (;;) {
            char c = peek();
            bool negate = false;
            if (c == '+' || c == '-') {
                negate = (c == '-');
                ++pos_;
            } else if (!first) {
                break;
            }
            SkewPoly t = term();
            acc = negate ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }

    SkewPoly term() {
        SkewPoly acc = power();
        for (;;) {
            if (peek() == '*') {
                ++pos_;
                acc = acc * power();
            } else if (starts_primary()) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    SkewPoly power() {
        SkewPoly base = primary();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected a nonnegative exponent");
            const auto e = parse_int(s_.substr(start, pos_ - start));
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    SkewPoly primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            SkewPoly p = expr();
            if (peek() != ')') error("expected ')'");
            ++pos_;
            return p;
        }
        if (c == 'X' || c == 'x') {
            ++pos_;
            return SkewPoly::x(ctx_);
        }
        if (c == 'w') {
            ++pos_;
            return SkewPoly::constant(ctx_, ctx_.field().primitive());
        }
        if (c == '[') {
            int depth = 0;
            const std::size_t start = pos_;
            for (; pos_ < s_.size(); ++pos_) {
                if (s_[pos_] == '[') ++depth;
                if (s_[pos_] == ']' && --depth == 0) break;
            }
            if (pos_ == s_.size()) error("unbalanced '['");
            ++pos_;
            return parse_poly(ctx_, s_.substr(start, pos_ - start));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return SkewPoly::constant(ctx_, ctx_.field().from_int(parse_int(s_.substr(start, pos_ - start))));
        }
        error(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
    }

    const RingCtx& ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Elem parse_elem(const Field& f, std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty()) fail("empty field element");
    bool negate = false;
    if (s.front() == '-' && s.size() > 1 && !std::isdigit(static_cast<unsigned char>(s[1]))) {
        negate = true;
        s = trim(s.substr(1));
    }
    Elem r;
    if (s.front() == '[') {
        std::vector<std::uint32_t> c;
        for (auto part : split_top(strip_brackets(s, '[', ']'))) {
            const std::int64_t v = parse_int(part);
            const std::int64_t p = f.p();
            c.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
        }
        if (c.size() > f.s()) fail("coefficient vector longer than the field degree");
        c.resize(f.s(), 0);
        r = f.from_coeffs(c);
    } else if (s.front() == 'w') {
        std::string_view rest = trim(s.substr(1));
        std::int64_t k = 1;
        if (!rest.empty()) {
            if (rest.front() != '^') fail("bad element '" + std::string(text) + "'");
            k = parse_int(rest.substr(1));
        }
        r = f.exp(k);
    } else {
        r = f.from_int(parse_int(s));
    }
    return negate ? f.neg(r) : r;
}

std::string format_elem(const Field& f, Elem a) {
    if (!f.contains(a)) fail("element outside the field");
    if (f.is_prime_field() || a.raw < 2) return std::to_string(a.raw);
    const std::uint32_t k = f.log(a);
    return k == 1 ? "w" : "w^" + std::to_string(k);
}

SkewPoly parse_poly(const RingCtx& ctx, std::string_view text) {
    const std::string_view s = trim(text);
    if (s.empty()) fail("empty polynomial");
    // A bare list is a coefficient vector; "[1,2]*X" is still an expression.
    if (s.front() == '[') {
        int depth = 0;
        std::size_t close = 0;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '[') ++depth;
            if (s[i] == ']' && --depth == 0) {
                close = i;
                break;
            }
        }
        if (close + 1 == s.size()) {
            std::vector<Elem> c;
            for (auto part : split_top(strip_brackets(s, '[', ']'))) c.push_back(parse_elem(ctx.field(), part));
            return SkewPoly(ctx, std::move(c));
        }
    }
    return PolyParser(ctx, s).parse();
}

std::vector<std::string> coeff_strings(const SkewPoly& p) {
    std::vector<std::string> out;
    for (Elem c : p.coeffs()) out.push_back(format_elem(p.field(), c));
    return out;
}

std::string format_coeffs(const SkewPoly& p) {
    std::string out = "[";
    const auto cs = coeff_strings(p);
    for (std::size_t i = 0; i < cs.size(); ++i) out += (i ? "," : "") + cs[i];
    return out + "]";
}

std::string format_poly(const SkewPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int i = p.degree(); i >= 0; --i) {
        const Elem c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string mono;
        if (i >= 1) mono = std::string(var) + (i > 1 ? "^" + std::to_string(i) : "");
        if (i == 0)
            out += format_elem(p.field(), c);
        else if (c == kOne)
            out += mono;
        else
            out += format_elem(p.field(), c) + "*" + mono;
    }
    return out;
}

Matrix parse_matrix(const Field& f, std::string_view text) {
    const std::string_view s = trim(text);
    if (s.size() >= 2 && (s.front() == 'I' || s.front() == '0') && s[1] != ',' && s.front() != '[') {
        const std::int64_t n = parse_int(s.substr(1));
        if (n <= 0) fail("matrix size must be positive");
        const auto un = static_cast<std::size_t>(n);
        return s.front() == 'I' ? Matrix::identity(f, un) : Matrix(f, un, un);
    }
    std::vector<Vec> rows;
    for (auto row : split_top(strip_brackets(s, '[', ']'))) {
        Vec r;
        for (auto e : split_top(strip_brackets(row, '[', ']'))) r.push_back(parse_elem(f, e));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) fail("empty matrix");
    for (const auto& r : rows)
        if (r.size() != rows.front().size()) fail("ragged matrix rows");
    return Matrix::from_rows(f, rows.front().size(), rows);
}

std::string format_vec(const Field& f, std::span<const Elem> v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + format_elem(f, v[i]);
    return out + "]";
}

std::string format_matrix(const Matrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) out += (r ? "," : "") + format_vec(m.field(), m.row(r));
    return out + "]";
}

}  // namespace skewcodes
