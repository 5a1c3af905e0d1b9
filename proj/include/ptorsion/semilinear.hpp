// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_SEMILINEAR_HPP
#define PTORSION_SEMILINEAR_HPP

#include <vector>

#include "ptorsion/linalg.hpp"

namespace ptorsion {

/// The sigma^twist-semilinear map x -> A * sigma^twist(x), where sigma raises
/// coordinates to the p-th power. Frobenius has twist +1; Verschiebung and the
/// Cartier operator have twist -1.
class SemilinearMap {
public:
    SemilinearMap(Matrix matrix, int twist);

    static SemilinearMap identity(const Field& field, std::size_t n) { return {Matrix::identity(field, n), 0}; }

    const Matrix& matrix() const noexcept { return a_; }
    int twist() const noexcept { return twist_; }
    std::size_t dim() const noexcept { return a_.rows(); }
    const Field& field() const noexcept { return a_.field(); }

    std::vector<Elem> apply(const std::vector<Elem>& x) const;

    /// Image of a subspace.
    Subspace image(const Subspace& w) const;
    Subspace image() const;
    /// {x : f(x) in w}.
    Subspace preimage(const Subspace& w) const;
    Subspace kernel() const;
    std::size_t rank() const;

    /// n-fold self-composition; n = 0 gives the identity.
    SemilinearMap power(unsigned n) const;

    friend bool operator==(const SemilinearMap& a, const SemilinearMap& b) noexcept;

private:
    Matrix a_;
    int twist_;
};

/// (A, t) o (B, s) = (A * sigma^t(B), t + s).
SemilinearMap semilinear_compose(const SemilinearMap& f, const SemilinearMap& g);
inline SemilinearMap operator*(const SemilinearMap& f, const SemilinearMap& g) { return semilinear_compose(f, g); }

/// Rank of the `iterations`-fold self-composition. With iterations >= dim the
/// value is the dimension of the part on which f is bijective.
std::size_t stable_rank(const SemilinearMap& f, unsigned iterations);

}  // namespace ptorsion

#endif  // PTORSION_SEMILINEAR_HPP
