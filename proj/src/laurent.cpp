// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptorsion {

namespace {

// Floor division for possibly negative numerators.
int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

}  // namespace

LaurentPoly::LaurentPoly(Field field, int low, std::vector<Elem> coeffs)
    : field_(std::move(field)), low_(low), c_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::monomial(const Field& field, Elem c, int exponent) {
    return LaurentPoly(field, exponent, {c});
}

void LaurentPoly::normalize() noexcept {
    while (!c_.empty() && c_.back().value == 0) c_.pop_back();
    auto first = std::find_if(c_.begin(), c_.end(), [](Elem e) { return e.value != 0; });
    low_ += static_cast<int>(first - c_.begin());
    c_.erase(c_.begin(), first);
    if (c_.empty()) low_ = 0;
}

Elem LaurentPoly::coeff(int exponent) const noexcept {
    if (c_.empty() || exponent < low_ || exponent > high()) return Elem{0};
    return c_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("Laurent polynomials over different fields");
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int lo = std::min(a.low_, b.low_);
    const int hi = std::max(a.high(), b.high());
    std::vector<Elem> c(static_cast<std::size_t>(hi - lo + 1));
    for (int e = lo; e <= hi; ++e) c[static_cast<std::size_t>(e - lo)] = a.field_.add(a.coeff(e), b.coeff(e));
    return LaurentPoly(a.field_, lo, std::move(c));
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
    return a.field_ == b.field_ && a.low_ == b.low_ && a.c_ == b.c_;
}

LaurentPoly cartier_on_differential(const LaurentPoly& w) {
    const Field& k = w.field();
    if (w.is_zero()) return w;
    const int p = static_cast<int>(k.characteristic());
    // Output exponent i collects input exponent p*i + p - 1.
    const int lo = floor_div(w.low() + 1 - p, p);
    const int hi = floor_div(w.high() + 1, p);
    std::vector<Elem> out;
    for (int i = lo; i <= hi; ++i) out.push_back(k.frobenius(w.coeff(p * i + p - 1), -1));
    return LaurentPoly(k, lo, std::move(out));
}

}  // namespace ptorsion
