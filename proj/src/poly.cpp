// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptorsion {

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("polynomials over different fields");
}

// Adds src into dst starting at offset.
void accumulate(const Field& k, std::vector<Elem>& dst, const std::vector<Elem>& src, std::size_t offset) {
    if (dst.size() < offset + src.size()) dst.resize(offset + src.size(), Elem{0});
    for (std::size_t i = 0; i < src.size(); ++i) dst[offset + i] = k.add(dst[offset + i], src[i]);
}

std::vector<Elem> school(const Field& k, const std::vector<Elem>& a, const std::vector<Elem>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Elem> r(a.size() + b.size() - 1, Elem{0});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].value == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
    }
    return r;
}

std::vector<Elem> kara(const Field& k, const std::vector<Elem>& a, const std::vector<Elem>& b, std::size_t cutoff) {
    if (std::min(a.size(), b.size()) <= cutoff) return school(k, a, b);
    const std::size_t h = std::max(a.size(), b.size()) / 2;
    auto lo = [h](const std::vector<Elem>& v) {
        return std::vector<Elem>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(h, v.size())));
    };
    auto hi = [h](const std::vector<Elem>& v) {
        return v.size() > h ? std::vector<Elem>(v.begin() + static_cast<std::ptrdiff_t>(h), v.end())
                            : std::vector<Elem>{};
    };
    const auto a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    auto z0 = kara(k, a0, b0, cutoff);
    auto z2 = kara(k, a1, b1, cutoff);
    std::vector<Elem> sa = a0, sb = b0;
    accumulate(k, sa, a1, 0);
    accumulate(k, sb, b1, 0);
    auto z1 = kara(k, sa, sb, cutoff);
    // z1 -= z0 + z2
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] = k.sub(z1[i], z0[i]);
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] = k.sub(z1[i], z2[i]);
    std::vector<Elem> r(a.size() + b.size() - 1, Elem{0});
    accumulate(k, r, z0, 0);
    accumulate(k, r, z1, h);
    accumulate(k, r, z2, 2 * h);
    r.resize(a.size() + b.size() - 1);
    return r;
}

}  // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { normalize(); }

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<Elem> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs) c.push_back(field.from_int(v));
    return Poly(field, std::move(c));
}

Poly Poly::monomial(const Field& field, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, Elem{0});
    v[k] = c;
    return Poly(field, std::move(v));
}

void Poly::normalize() noexcept {
    while (!c_.empty() && c_.back().value == 0) c_.pop_back();
}

Elem Poly::operator()(Elem x) const noexcept {
    Elem r{0};
    for (std::size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
    return r;
}

Poly Poly::derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d.push_back(field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), c_[i]));
    }
    return Poly(field_, std::move(d));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], s);
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::operator-() const {
    std::vector<Elem> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.neg(c_[i]);
    return Poly(field_, std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    std::vector<Elem> r = a.c_;
    accumulate(a.field_, r, b.c_, 0);
    return Poly(a.field_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (std::min(a.c_.size(), b.c_.size()) > kKaratsubaThreshold) return mul_karatsuba(a, b);
    return mul_schoolbook(a, b);
}

bool operator==(const Poly& a, const Poly& b) noexcept { return a.field_ == b.field_ && a.c_ == b.c_; }

Poly mul_schoolbook(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    return Poly(a.field(), school(a.field(), a.coeffs(), b.coeffs()));
}

Poly mul_karatsuba(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    // Small cutoff so the recursion is exercised even on modest inputs.
    return Poly(a.field(), kara(a.field(), a.coeffs(), b.coeffs(), 4));
}

Poly poly_pow(const Poly& f, std::uint64_t e) {
    Poly result = Poly::constant(f.field(), f.field().one());
    Poly base = f;
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& k = a.field();
    if (a.degree() < b.degree()) return {Poly(k), a};
    std::vector<Elem> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    std::vector<Elem> q(r.size() - db, Elem{0});
    const Elem lead_inv = k.inv(b.leading());
    for (std::size_t i = r.size(); i-- > db;) {
        const Elem t = k.mul(r[i], lead_inv);
        if (t.value == 0) continue;
        q[i - db] = t;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(t, b.coeffs()[j]));
    }
    return {Poly(k, std::move(q)), Poly(k, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
    Poly result = Poly::constant(m.field(), m.field().one()) % m;
    Poly b = base % m;
    while (e) {
        if (e & 1) result = (result * b) % m;
        e >>= 1;
        if (e) b = (b * b) % m;
    }
    return result;
}

bool is_squarefree(const Poly& f) {
    if (f.degree() <= 0) return !f.is_zero();
    const Poly d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Field& k = f.field();
    const std::uint64_t p = k.characteristic();
    const unsigned m = k.degree();
    const Poly x = Poly::x(k);

    // x^{q^j} mod f for j = 0..n, via j*m successive p-th powers.
    std::vector<Poly> frob_powers{x % f};
    for (int j = 1; j <= n; ++j) {
        Poly y = frob_powers.back();
        for (unsigned s = 0; s < m; ++s) y = powmod(y, p, f);
        frob_powers.push_back(std::move(y));
    }
    if (!(frob_powers[static_cast<std::size_t>(n)] == x % f)) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
        const Poly g = gcd(frob_powers[static_cast<std::size_t>(n / r)] - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace ptorsion
