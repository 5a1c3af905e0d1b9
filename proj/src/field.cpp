// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/field.hpp"

#include <stdexcept>

#include "ptorsion/poly.hpp"

namespace ptorsion {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 n) noexcept { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 addmod(u64 a, u64 b, u64 n) noexcept { return a >= n - b ? a - (n - b) : a + b; }

u64 submod(u64 a, u64 b, u64 n) noexcept { return a >= b ? a - b : a + (n - b); }

u64 powmod_u64(u64 a, u64 e, u64 n) noexcept {
    u64 r = 1 % n;
    a %= n;
    while (e) {
        if (e & 1) r = mulmod(r, a, n);
        a = mulmod(a, a, n);
        e >>= 1;
    }
    return r;
}

constexpr u64 kTableLimit = 256;

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % sp == 0) return n == sp;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These bases are a deterministic witness set below 3.3e24.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

struct Field::Data {
    u64 p = 0;
    unsigned m = 1;
    std::vector<u64> modulus;
    u128 q = 0;
    // Tables for small extension fields, indexed [a * q + b] or [a].
    std::vector<std::uint32_t> add_tab, mul_tab, frob_tab, frob_inv_tab;

    bool tabled() const noexcept { return !add_tab.empty(); }

    void decode(u64 v, u64* out) const noexcept {
        for (unsigned i = 0; i < m; ++i) {
            out[i] = v % p;
            v /= p;
        }
    }
    u64 encode(const u64* c) const noexcept {
        u64 v = 0;
        for (unsigned i = m; i-- > 0;) v = v * p + c[i];
        return v;
    }

    u64 add_raw(u64 a, u64 b) const noexcept {
        if (m == 1) return addmod(a, b, p);
        u64 ca[64], cb[64];
        decode(a, ca);
        decode(b, cb);
        for (unsigned i = 0; i < m; ++i) ca[i] = addmod(ca[i], cb[i], p);
        return encode(ca);
    }
    u64 neg_raw(u64 a) const noexcept {
        if (m == 1) return a == 0 ? 0 : p - a;
        u64 ca[64];
        decode(a, ca);
        for (unsigned i = 0; i < m; ++i) ca[i] = ca[i] == 0 ? 0 : p - ca[i];
        return encode(ca);
    }
    u64 mul_raw(u64 a, u64 b) const noexcept {
        if (m == 1) return mulmod(a, b, p);
        u64 ca[64], cb[64], prod[127] = {};
        decode(a, ca);
        decode(b, cb);
        for (unsigned i = 0; i < m; ++i) {
            if (ca[i] == 0) continue;
            for (unsigned j = 0; j < m; ++j) prod[i + j] = addmod(prod[i + j], mulmod(ca[i], cb[j], p), p);
        }
        for (unsigned k = 2 * m - 2; k >= m; --k) {
            const u64 t = prod[k];
            if (t == 0) continue;
            prod[k] = 0;
            for (unsigned j = 0; j < m; ++j) prod[k - m + j] = submod(prod[k - m + j], mulmod(t, modulus[j], p), p);
        }
        return encode(prod);
    }
    u64 pow_raw(u64 a, u64 e) const noexcept {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        const u64 n = static_cast<u64>(q);
        add_tab.resize(n * n);
        mul_tab.resize(n * n);
        frob_tab.resize(n);
        frob_inv_tab.resize(n);
        for (u64 a = 0; a < n; ++a) {
            for (u64 b = 0; b < n; ++b) {
                add_tab[a * n + b] = static_cast<std::uint32_t>(add_raw(a, b));
                mul_tab[a * n + b] = static_cast<std::uint32_t>(mul_raw(a, b));
            }
        }
        for (u64 a = 0; a < n; ++a) {
            const u64 s = pow_raw(a, p);
            frob_tab[a] = static_cast<std::uint32_t>(s);
            frob_inv_tab[s] = static_cast<std::uint32_t>(a);
        }
    }
};

namespace {

u128 checked_order(u64 p, unsigned m) {
    u128 q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > (static_cast<u128>(1) << 64)) throw std::invalid_argument("field order p^m exceeds 2^64");
    }
    return q;
}

}  // namespace

Field::Field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw std::invalid_argument("modulus must have degree at least 1");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (u64 c : modulus) {
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    }
    const unsigned m = static_cast<unsigned>(modulus.size() - 1);
    if (m > 64) throw std::invalid_argument("extension degree too large");

    auto d = std::make_shared<Data>();
    d->p = p;
    d->m = m;
    d->q = checked_order(p, m);
    d->modulus = modulus;

    if (m > 1) {
        const Field prime(p, std::vector<u64>{0, 1});
        std::vector<Elem> c;
        c.reserve(modulus.size());
        for (u64 v : modulus) c.push_back(Elem{v});
        if (!is_irreducible(Poly(prime, std::move(c)))) throw std::invalid_argument("modulus is not irreducible");
        if (d->q <= kTableLimit) d->build_tables();
    }
    d_ = std::move(d);
}

Field Field::make(std::uint64_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) throw std::invalid_argument("extension degree must be positive");
    if (m == 1) return Field(p, {0, 1});
    checked_order(p, m);

    const Field prime(p, {0, 1});
    // Candidates ordered lexicographically by (c_0, ..., c_{m-1}); c_0 = 0 is
    // divisible by x, so start at c_0 = 1.
    std::vector<u64> lower(m, 0);
    lower[0] = 1;
    for (;;) {
        std::vector<Elem> c;
        for (u64 v : lower) c.push_back(Elem{v});
        c.push_back(Elem{1});
        if (is_irreducible(Poly(prime, std::move(c)))) {
            std::vector<u64> mod = lower;
            mod.push_back(1);
            return Field(p, std::move(mod));
        }
        // Advance with c_{m-1} as the fastest-moving digit.
        unsigned i = m;
        while (i-- > 0) {
            if (++lower[i] < p) break;
            lower[i] = 0;
            if (i == 0) throw std::logic_error("no irreducible polynomial found");
        }
    }
}

std::uint64_t Field::characteristic() const noexcept { return d_->p; }
unsigned Field::degree() const noexcept { return d_->m; }

std::uint64_t Field::order() const {
    if (d_->q > static_cast<u128>(~u64{0})) throw std::overflow_error("field order does not fit in 64 bits");
    return static_cast<u64>(d_->q);
}

const std::vector<std::uint64_t>& Field::modulus() const noexcept { return d_->modulus; }

Elem Field::from_int(std::int64_t v) const noexcept {
    const u64 p = d_->p;
    if (v >= 0) return Elem{static_cast<u64>(v) % p};
    const u64 r = static_cast<u64>(-(v + 1)) % p;  // avoids overflow at INT64_MIN
    return Elem{p - 1 - r};
}

Elem Field::from_coords(std::span<const std::uint64_t> coords) const {
    if (coords.size() > d_->m) throw std::invalid_argument("too many coordinates for field " + name());
    u64 c[64] = {};
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] >= d_->p) throw std::invalid_argument("coordinate out of range for field " + name());
        c[i] = coords[i];
    }
    return Elem{d_->encode(c)};
}

std::vector<std::uint64_t> Field::coords(Elem a) const {
    std::vector<u64> out(d_->m);
    d_->decode(a.value, out.data());
    return out;
}

Elem Field::from_index(std::uint64_t index) const {
    if (static_cast<u128>(index) >= d_->q) throw std::invalid_argument("element index out of range for " + name());
    return Elem{index};
}

Elem Field::generator_x() const {
    if (d_->m == 1) return Elem{d_->modulus[0] == 0 ? 0 : d_->p - d_->modulus[0]};
    return Elem{d_->p};
}

Elem Field::add(Elem a, Elem b) const noexcept {
    if (d_->tabled()) return Elem{d_->add_tab[a.value * d_->q + b.value]};
    return Elem{d_->add_raw(a.value, b.value)};
}

Elem Field::neg(Elem a) const noexcept { return Elem{d_->neg_raw(a.value)}; }

Elem Field::sub(Elem a, Elem b) const noexcept {
    if (d_->m == 1) return Elem{submod(a.value, b.value, d_->p)};
    return add(a, neg(b));
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (d_->tabled()) return Elem{d_->mul_tab[a.value * d_->q + b.value]};
    return Elem{d_->mul_raw(a.value, b.value)};
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    Elem r = one();
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a.value == 0) throw std::domain_error("inverse of zero");
    if (d_->m == 1) return Elem{powmod_u64(a.value, d_->p - 2, d_->p)};
    // a^{q-2}; q - 2 always fits in 64 bits.
    return pow(a, static_cast<u64>(d_->q - 2));
}

Elem Field::frobenius(Elem a, int t) const noexcept {
    const int m = static_cast<int>(d_->m);
    if (m == 1) return a;
    int k = t % m;
    if (k < 0) k += m;
    if (d_->tabled()) {
        // Going backwards is cheaper when k > m/2.
        if (2 * k > m) {
            for (int i = 0; i < m - k; ++i) a = Elem{d_->frob_inv_tab[a.value]};
        } else {
            for (int i = 0; i < k; ++i) a = Elem{d_->frob_tab[a.value]};
        }
        return a;
    }
    for (int i = 0; i < k; ++i) a = pow(a, d_->p);
    return a;
}

std::string Field::name() const {
    std::string s = "F_" + std::to_string(d_->p);
    if (d_->m > 1) s += "^" + std::to_string(d_->m);
    return s;
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.d_ == b.d_) return true;
    if (a.d_->p != b.d_->p || a.d_->m != b.d_->m) return false;
    // Every linear modulus presents the same prime field with the same encoding.
    return a.d_->m == 1 || a.d_->modulus == b.d_->modulus;
}

}  // namespace ptorsion
