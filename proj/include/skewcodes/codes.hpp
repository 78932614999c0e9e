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

/// Skew generalized cyclic codes: construction, divisor enumeration, duals,
/// minimum distance, and the kernel decomposition of F_q^n under T_f.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "skewcodes/linalg.hpp"
#include "skewcodes/pseudo_linear.hpp"
#include "skewcodes/skew_poly.hpp"

namespace skewcodes {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// Budget from SKEWCODES_BUDGET if set and valid, else kDefaultBudget.
std::uint64_t default_budget();

struct SkewGCCode {
    RingCtx ctx;
    SkewPoly f;
    SkewPoly g;
    std::size_t n;
    std::size_t k;
    Matrix G;  // rows ḡ, T_f(ḡ), ..., T_f^{k-1}(ḡ)
};

/// Coefficient vector of p padded to length n.
Vec poly_to_vec(const SkewPoly& p, std::size_t n);
SkewPoly vec_to_poly(const RingCtx& ctx, std::span<const Elem> v);

SkewGCCode code_from_generator_poly(const SkewPoly& g, const SkewPoly& f);

/// k×n matrix with rows X^j·g, j < k. Coincides with the T_f construction.
Matrix generator_matrix(const SkewPoly& g, std::size_t n);

/// T(row) ∈ rowspace(G) for every row of G.
bool is_invariant_code(const Matrix& G, const PseudoLinearMap& t);

/// Monic right divisors g of f with 1 <= deg g <= n-1 and g(0) != 0,
/// sorted canonically.
std::vector<SkewPoly> enumerate_right_divisors(const SkewPoly& f, std::uint64_t budget, unsigned jobs = 1);

/// Size of the brute-force generator listing for f:
/// every nonzero scalar multiple of each divisor when θ != id, and the powers
/// of individual irreducible factors when θ = id.
struct ProgramListing {
    std::vector<SkewPoly> generators;  // monic, possibly repeated per scalar
    std::size_t count;
};
ProgramListing program_listing(const SkewPoly& f, std::uint64_t budget, unsigned jobs = 1);

/// Minimum nonzero weight of the row space of G.
std::size_t minimum_distance(const Matrix& G, std::uint64_t budget = kDefaultBudget, unsigned jobs = 1);
inline std::size_t minimum_distance(const SkewGCCode& c, std::uint64_t budget = kDefaultBudget, unsigned jobs = 1) {
    return minimum_distance(c.G, budget, jobs);
}

struct DualResult {
    Matrix H;
    bool via_stacked_columns;    // false when no h' with f = g·h' exists
    std::optional<SkewPoly> h_prime;
};
DualResult dual_code(const SkewGCCode& c);

/// T' = ((Mᵀ)^{θ⁻¹}, θ⁻¹, θ⁻¹(β)).
PseudoLinearMap dual_pseudolinear_map(const PseudoLinearMap& t);

struct Component {
    SkewPoly factor;         // f_i
    int multiplicity;        // α_i
    SkewPoly power;          // f_i^{α_i}
    SkewPoly cofactor;       // f̂_i with f = f_i^{α_i}·f̂_i
    SkewPoly a;              // a_i f_i^{α_i} + b_i f̂_i = 1
    SkewPoly b;
    std::vector<Vec> basis;  // U_i = Ker f_i^{α_i}(T_f)
    bool fq_linear;
    std::size_t fp_dimension;
    Matrix idempotent;       // e_i = b_i(T_f)∘f̂_i(T_f) over GF(p)
};

struct Decomposition {
    SkewPoly f;
    Factorization factorization;
    std::vector<Component> components;
};

/// Requires f ∈ N(R).
Decomposition decompose(const SkewPoly& f);

struct DecompositionCheck {
    bool dimensions;      // dim U_i = α_i deg f_i
    bool direct_sum;      // ⊕ U_i = F_q^n
    bool idempotent;      // e_i² = e_i
    bool orthogonal;      // e_i e_j = 0 for i != j
    bool partition;       // Σ e_i = id
    bool annihilates;     // e_i(U_j) = 0 for i != j
    bool fixes_exactly;   // e_i(v) = v ⟺ v ∈ U_i
    bool all() const {
        return dimensions && direct_sum && idempotent && orthogonal && partition && annihilates && fixes_exactly;
    }
};
DecompositionCheck check_decomposition(const Decomposition& d);

/// C_i = C ∩ U_i, computed over GF(p).
std::vector<SubspaceGroup> code_component_split(const SkewGCCode& c, const Decomposition& d);

/// A codeword of π_f(C) with constant term 1 and the weight of c (δ = 0).
SkewPoly normalize_to_unit_constant(const SkewPoly& c, const SkewGCCode& code);

}  // namespace skewcodes
