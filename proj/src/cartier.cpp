// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/cartier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ptorsion {

HyperellipticCurve::HyperellipticCurve(Poly f) : f_(std::move(f)) {
    if (field().characteristic() == 2) throw std::invalid_argument("hyperelliptic model y^2 = f(x) needs odd characteristic");
    if (f_.degree() < 3) throw std::invalid_argument("hyperelliptic polynomial must have degree at least 3");
    if (!is_squarefree(f_)) throw std::invalid_argument("hyperelliptic polynomial is not squarefree");
}

ArtinSchreierCurve ArtinSchreierCurve::poly(const Poly& f) {
    if (f.field().characteristic() != 2) throw std::invalid_argument("Artin-Schreier shapes need characteristic 2");
    const int d = f.degree();
    if (d < 3 || d % 2 == 0) throw std::invalid_argument("Artin-Schreier polynomial must have odd degree 2g+1 >= 3");
    std::vector<int> basis;
    for (int b = 0; b < (d - 1) / 2; ++b) basis.push_back(b);
    return {ArtinSchreierShape::Poly, LaurentPoly(f), std::move(basis)};
}

ArtinSchreierCurve ArtinSchreierCurve::gamma1(const Field& k, Elem c1, Elem c2, Elem c3) {
    if (k.characteristic() != 2) throw std::invalid_argument("Artin-Schreier shapes need characteristic 2");
    if (c3.value == 0) throw std::invalid_argument("gamma1 needs c3 != 0");
    // x^5 + c1 x^3 + c2 x + c3 x^{-1}
    LaurentPoly f(k, -1, {c3, Elem{0}, c2, Elem{0}, c1, Elem{0}, k.one()});
    return {ArtinSchreierShape::Gamma1, std::move(f), {-1, 0, 1}};
}

ArtinSchreierCurve ArtinSchreierCurve::gamma2(const Field& k, Elem c1, Elem c2, Elem c3) {
    if (k.characteristic() != 2) throw std::invalid_argument("Artin-Schreier shapes need characteristic 2");
    if (c3.value == 0) throw std::invalid_argument("gamma2 needs c3 != 0");
    // x^3 + c1 x + c2 x^{-1} + c3 x^{-3}
    LaurentPoly f(k, -3, {c3, Elem{0}, c2, Elem{0}, c1, Elem{0}, k.one()});
    return {ArtinSchreierShape::Gamma2, std::move(f), {-2, -1, 0}};
}

SemilinearMap cm_matrix(const HyperellipticCurve& c) {
    const Field& k = c.field();
    const auto p = static_cast<std::size_t>(k.characteristic());
    const auto g = static_cast<std::size_t>(c.genus());
    const Poly h = poly_pow(c.f(), (p - 1) / 2);
    Matrix a(k, g, g);
    for (std::size_t i = 1; i <= g; ++i)
        for (std::size_t j = 1; j <= g; ++j) a.at(i - 1, j - 1) = h.coeff(i * p - j);
    return {std::move(a), -1};
}

CurveInvariants invariants_from_cartier(const SemilinearMap& cartier, unsigned iterations) {
    const auto g = static_cast<int>(cartier.dim());
    if (iterations == 0) iterations = static_cast<unsigned>(2 * g);
    const int rank = static_cast<int>(cartier.rank());
    const int f = static_cast<int>(stable_rank(cartier, iterations));
    return {f, g - rank, cartier};
}

CurveInvariants cm_invariants(const HyperellipticCurve& c, unsigned iterations) {
    return invariants_from_cartier(cm_matrix(c), iterations);
}

SemilinearMap as2_cartier_matrix(const ArtinSchreierCurve& c) {
    const Field& k = c.field();
    const auto& basis = c.basis();
    const std::size_t g = basis.size();
    Matrix a(k, g, g);
    for (std::size_t j = 0; j < g; ++j) {
        const LaurentPoly image = cartier_on_differential(LaurentPoly::monomial(k, k.one(), basis[j]));
        if (image.is_zero()) continue;
        for (int e = image.low(); e <= image.high(); ++e) {
            const Elem coeff = image.coeff(e);
            if (coeff.value == 0) continue;
            const auto it = std::find(basis.begin(), basis.end(), e);
            if (it == basis.end())
                throw std::logic_error("Cartier image x^" + std::to_string(e) + " dx is outside the differential basis");
            a.at(static_cast<std::size_t>(it - basis.begin()), j) = coeff;
        }
    }
    return {std::move(a), -1};
}

CurveInvariants as2_invariants(const ArtinSchreierCurve& c, unsigned iterations) {
    return invariants_from_cartier(as2_cartier_matrix(c), iterations);
}

}  // namespace ptorsion
