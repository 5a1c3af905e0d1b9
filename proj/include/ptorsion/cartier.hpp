// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef PTORSION_CARTIER_HPP
#define PTORSION_CARTIER_HPP

#include <vector>

#include "ptorsion/laurent.hpp"
#include "ptorsion/poly.hpp"
#include "ptorsion/semilinear.hpp"

namespace ptorsion {

/// y^2 = f(x) over a field of odd characteristic; f squarefree of degree
/// 2g+1 or 2g+2 with g >= 1.
class HyperellipticCurve {
public:
    /// Throws std::invalid_argument for p = 2, degree < 3 or non-squarefree f.
    explicit HyperellipticCurve(Poly f);

    const Field& field() const noexcept { return f_.field(); }
    const Poly& f() const noexcept { return f_; }
    int genus() const noexcept { return (f_.degree() + 1) / 2 - 1; }

private:
    Poly f_;
};

/// Shapes of y^2 - y = f(x) in characteristic 2 for which a monomial basis
/// of regular differentials is known.
enum class ArtinSchreierShape {
    Poly,    ///< f polynomial of degree 2g+1; basis x^b dx, 0 <= b < g
    Gamma1,  ///< f = x^5 + c1 x^3 + c2 x + c3/x; basis dx/x, dx, x dx
    Gamma2,  ///< f = x^3 + c1 x + c2/x + c3/x^3; basis dx/x^2, dx/x, dx
};

class ArtinSchreierCurve {
public:
    /// y^2 - y = f with f of odd degree 2g+1 >= 3 over a field of characteristic 2.
    static ArtinSchreierCurve poly(const Poly& f);
    /// Requires c3 != 0.
    static ArtinSchreierCurve gamma1(const Field& field, Elem c1, Elem c2, Elem c3);
    static ArtinSchreierCurve gamma2(const Field& field, Elem c1, Elem c2, Elem c3);

    const Field& field() const noexcept { return f_.field(); }
    ArtinSchreierShape shape() const noexcept { return shape_; }
    const LaurentPoly& f() const noexcept { return f_; }
    /// Exponents b of the basis differentials x^b dx.
    const std::vector<int>& basis() const noexcept { return basis_; }
    int genus() const noexcept { return static_cast<int>(basis_.size()); }

private:
    ArtinSchreierCurve(ArtinSchreierShape shape, LaurentPoly f, std::vector<int> basis)
        : shape_(shape), f_(std::move(f)), basis_(std::move(basis)) {}

    ArtinSchreierShape shape_;
    LaurentPoly f_;
    std::vector<int> basis_;
};

struct CurveInvariants {
    int p_rank;
    int a_number;
    SemilinearMap cartier_matrix;
};

/// Cartier-Manin matrix: A_{i,j} = coefficient of x^{i p - j} in f^{(p-1)/2},
/// 1 <= i, j <= g, as a twist -1 map.
SemilinearMap cm_matrix(const HyperellipticCurve& c);

/// a = g - rank(C), f = rank of the `iterations`-fold composition of C.
/// iterations = 0 selects the default 2g.
CurveInvariants invariants_from_cartier(const SemilinearMap& cartier, unsigned iterations = 0);

CurveInvariants cm_invariants(const HyperellipticCurve& c, unsigned iterations = 0);

/// Cartier operator on the monomial basis, columns are images of basis
/// elements. Throws std::logic_error if an image leaves the span of the basis.
SemilinearMap as2_cartier_matrix(const ArtinSchreierCurve& c);
CurveInvariants as2_invariants(const ArtinSchreierCurve& c, unsigned iterations = 0);

}  // namespace ptorsion

#endif  // PTORSION_CARTIER_HPP
