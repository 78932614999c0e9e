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

/// BCH-type distance bounds for skew GC codes with δ = 0, the MDS generator
/// construction and the MDS table search.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewcodes/codes.hpp"

namespace skewcodes {

/// Element β of an extension E ⊇ F_q used as an evaluation base.
struct BetaSpec {
    Elem beta;            // element of embed.extension()
    Embedding embed;      // F_q -> E
    /// β taken from F_q itself.
    static BetaSpec in_base(const Field& f, Elem b);
};

struct BoundCertificate {
    Elem beta;
    Field beta_field;
    std::int64_t l;
    std::vector<std::int64_t> cs;
    std::vector<std::int64_t> ss;
    int delta;
    int claimed_bound;  // δ + Σ s_k
};

struct BoundFailure {
    enum class Condition { root, norm };
    Condition condition;
    std::int64_t exponent = 0;        // root: grid exponent e with g(β^e) != 0
    std::vector<std::int64_t> index;  // root: (i_1, ..., i_r)
    std::uint64_t norm_i = 0;         // norm: N_i(β^{c_j}) = 1
    std::size_t norm_j = 0;           // 1-based direction
    std::string message;
};

struct BoundResult {
    std::optional<BoundCertificate> certificate;
    std::optional<BoundFailure> failure;
    bool ok() const { return certificate.has_value(); }
};

BoundResult verify_bound1(const SkewGCCode& c, const BetaSpec& beta, std::int64_t l, std::int64_t cstep, int delta);
BoundResult verify_bound_general(const SkewGCCode& c, const BetaSpec& beta, std::int64_t l,
                                 const std::vector<std::int64_t>& cs, const std::vector<std::int64_t>& ss, int delta);

/// θ = id shortcut: ord(β) >= n and gcd(ord β, c) = 1 imply β^{ic} != 1 for 1 <= i <= n-1.
bool order_gcd_predicate(const Field& f, Elem beta, std::int64_t c, std::size_t n);

/// g = lclm{X − β^{l + Σ i_k c_k}} over the index grid, β ∈ F_q.
SkewPoly mds_generator(const RingCtx& ctx, Elem beta, std::int64_t l, const std::vector<std::int64_t>& cs,
                       const std::vector<std::int64_t>& ss, std::size_t n, int delta);

/// All a ∈ F_q^* with g right-dividing X^n − a, in encoding order.
std::vector<Elem> constacyclic_moduli(const SkewPoly& g, std::size_t n);

enum class GeneratorConvention {
    field_generator,  // w = generator of F_q over F_p in the polynomial basis (1 for prime fields)
    primitive,  // always the primitive element
};

struct MdsRow {
    std::size_t n;
    std::size_t k;
    std::size_t d;
    SkewPoly g;
    std::vector<Elem> constacyclic;
    bool mds;
    std::int64_t c = 0;  // first sweep parameters producing g
    std::int64_t l = 0;
    Elem w = kOne;
};

struct MdsSearchOptions {
    GeneratorConvention convention = GeneratorConvention::field_generator;
    bool include_non_mds = false;
    unsigned jobs = 1;
    std::uint64_t budget = kDefaultBudget;
};

/// Rows sorted by (k, canonical g).
std::vector<MdsRow> mds_search(const RingCtx& ctx, std::size_t n, const MdsSearchOptions& opts = {});

}  // namespace skewcodes
