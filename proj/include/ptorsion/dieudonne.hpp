// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_DIEUDONNE_HPP
#define PTORSION_DIEUDONNE_HPP

#include <stdexcept>
#include <vector>

#include "ptorsion/eo.hpp"
#include "ptorsion/semilinear.hpp"

namespace ptorsion {

/**
 * Covariant Dieudonne module of a BT_1 group scheme: a finite-dimensional
 * space D with a sigma-linear F and a sigma^{-1}-linear V.
 *
 * Construction only checks shapes and twists; the BT_1 axioms are checked by
 * is_bt1(), and the invariants below require them. Odd dimensions are allowed
 * for building blocks (the summands of I_{3,2}, the etale line), but genus()
 * and eo_type() need dim = 2g.
 */
class DieudonneModule {
public:
    DieudonneModule(SemilinearMap frobenius, SemilinearMap verschiebung);

    const Field& field() const noexcept { return f_.field(); }
    std::size_t dim() const noexcept { return f_.dim(); }
    /// dim / 2; throws std::domain_error for odd dimension.
    int genus() const;
    const SemilinearMap& F() const noexcept { return f_; }
    const SemilinearMap& V() const noexcept { return v_; }

    friend bool operator==(const DieudonneModule&, const DieudonneModule&) = default;

private:
    SemilinearMap f_;
    SemilinearMap v_;
};

enum class Operator { F, V };

/// One piece of the canonical filtration together with dim V(W).
struct FiltrationStep {
    Subspace subspace;
    std::size_t dim;
    std::size_t image_dim_under_V;
};

/// Thrown when a module claimed to be a BT_1 violates an internal invariant
/// (for instance the canonical filtration is not a chain).
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Standard constructions. All are defined over F_p and base-changed to `field`.
DieudonneModule dd_block_etale(const Field& field);
DieudonneModule dd_block_mult(const Field& field);
/// (etale + mult)^g, the p-torsion of an ordinary abelian variety of dimension g.
DieudonneModule dd_ordinary(const Field& field, int g);
/// E/E(F^r - V^r) on the basis 1, F, ..., F^{r-1}, V, ..., V^{r-1}, F^r = V^r.
DieudonneModule dd_build_Ir(const Field& field, int r);
/// E/E(F - V^2) on the basis 1, V, V^2.
DieudonneModule dd_build_I32_first(const Field& field);
/// E/E(V - F^2) on the basis 1, F, F^2.
DieudonneModule dd_build_I32_second(const Field& field);
/// Direct sum of the two summands above; dimension 6.
DieudonneModule dd_build_I32(const Field& field);
DieudonneModule dd_direct_sum(const DieudonneModule& a, const DieudonneModule& b);

/// F o V = V o F = 0, im F = ker V and im V = ker F.
bool dd_is_bt1(const DieudonneModule& d);

/// Stable rank of V with 2 * dim compositions. Throws std::invalid_argument
/// unless the module is a BT_1.
int dd_p_rank(const DieudonneModule& d);
/// dim(ker F cap ker V). Throws std::invalid_argument unless the module is a BT_1.
int dd_a_number(const DieudonneModule& d);
/// dim ker(op^n).
int dd_kernel_power(const DieudonneModule& d, Operator op, unsigned n);

/// Closure of {0, D} under W -> V(W) and W -> F^{-1}(W), sorted by dimension.
std::vector<FiltrationStep> dd_canonical_filtration(const DieudonneModule& d);
/// Ekedahl-Oort type read off the canonical filtration; cross-checks p-rank
/// and a-number against dd_p_rank and dd_a_number and throws InvariantError
/// on any disagreement.
EOSequence dd_eo_type(const DieudonneModule& d);

/// True iff there is no splitting D = W + W' into nonzero F,V-stable
/// subspaces. Exhaustive over all subspaces, so only for small q^dim; throws
/// std::invalid_argument when the search space is too large.
bool dd_is_indecomposable(const DieudonneModule& d);

}  // namespace ptorsion

#endif  // PTORSION_DIEUDONNE_HPP
