// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/semilinear.hpp"

#include <stdexcept>

namespace ptorsion {

namespace {

// Twists only matter mod m; keep them small and non-negative.
int reduce_twist(int t, const Field& k) {
    const int m = static_cast<int>(k.degree());
    int r = t % m;
    return r < 0 ? r + m : r;
}

}  // namespace

SemilinearMap::SemilinearMap(Matrix matrix, int twist) : a_(std::move(matrix)), twist_(twist) {
    if (!a_.is_square()) throw std::invalid_argument("semilinear map needs a square matrix");
}

std::vector<Elem> SemilinearMap::apply(const std::vector<Elem>& x) const {
    if (x.size() != dim()) throw std::invalid_argument("vector length does not match map dimension");
    const Field& k = field();
    std::vector<Elem> y(dim(), Elem{0});
    for (std::size_t j = 0; j < dim(); ++j) {
        const Elem xj = k.frobenius(x[j], twist_);
        if (xj.value == 0) continue;
        for (std::size_t i = 0; i < dim(); ++i) y[i] = k.add(y[i], k.mul(a_.at(i, j), xj));
    }
    return y;
}

Subspace SemilinearMap::image(const Subspace& w) const {
    if (w.ambient_dim() != dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
    // Rows of sigma^t(W) * A^T are the images of the basis vectors.
    return Subspace(w.basis().frobenius(twist_) * a_.transpose());
}

Subspace SemilinearMap::image() const { return Subspace(a_.transpose()); }

Subspace SemilinearMap::preimage(const Subspace& w) const {
    if (w.ambient_dim() != dim()) throw std::invalid_argument("subspace ambient dimension mismatch");
    // f(x) in W  <=>  N A sigma^t(x) = 0 with N the annihilator of W.
    const Subspace linear_pre(nullspace(w.annihilator() * a_));
    return Subspace(linear_pre.basis().frobenius(-twist_));
}

Subspace SemilinearMap::kernel() const { return preimage(Subspace::zero(field(), dim())); }

std::size_t SemilinearMap::rank() const { return matrix_rank(a_); }

SemilinearMap SemilinearMap::power(unsigned n) const {
    SemilinearMap r = identity(field(), dim());
    for (unsigned i = 0; i < n; ++i) r = semilinear_compose(r, *this);
    return r;
}

bool operator==(const SemilinearMap& a, const SemilinearMap& b) noexcept {
    return a.a_ == b.a_ && reduce_twist(a.twist_, a.field()) == reduce_twist(b.twist_, b.field());
}

SemilinearMap semilinear_compose(const SemilinearMap& f, const SemilinearMap& g) {
    if (!(f.field() == g.field())) throw std::invalid_argument("semilinear maps over different fields");
    if (f.dim() != g.dim()) throw std::invalid_argument("semilinear map dimension mismatch");
    return {f.matrix() * g.matrix().frobenius(f.twist()), f.twist() + g.twist()};
}

std::size_t stable_rank(const SemilinearMap& f, unsigned iterations) { return f.power(iterations).rank(); }

}  // namespace ptorsion
