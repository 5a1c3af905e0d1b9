// Copyright 2026 The ptorsion Authors
// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include "ptorsion/dieudonne.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptorsion {

namespace {

// Module on n basis vectors from lists of (source, target) basis images.
DieudonneModule from_images(const Field& k, std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& f_images,
                            const std::vector<std::pair<std::size_t, std::size_t>>& v_images) {
    Matrix f(k, n, n), v(k, n, n);
    for (auto [src, dst] : f_images) f.at(dst, src) = k.one();
    for (auto [src, dst] : v_images) v.at(dst, src) = k.one();
    return DieudonneModule(SemilinearMap(std::move(f), 1), SemilinearMap(std::move(v), -1));
}

void require_bt1(const DieudonneModule& d) {
    if (!dd_is_bt1(d)) throw std::invalid_argument("module does not satisfy the BT_1 axioms");
}

// Calls visit(basis) for every subspace of F_q^n, by enumerating reduced row
// echelon forms: a pivot set plus free entries right of each pivot.
template <class Visit>
void for_each_subspace(const Field& k, std::size_t n, Visit&& visit) {
    const std::uint64_t q = k.order();
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        std::vector<std::size_t> piv;
        for (std::size_t c = 0; c < n; ++c)
            if (mask & (1U << c)) piv.push_back(c);
        std::vector<std::pair<std::size_t, std::size_t>> free_slots;
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t c = piv[i] + 1; c < n; ++c)
                if (!(mask & (1U << c))) free_slots.emplace_back(i, c);
        std::vector<std::uint64_t> digits(free_slots.size(), 0);
        for (;;) {
            Matrix b(k, piv.size(), n);
            for (std::size_t i = 0; i < piv.size(); ++i) b.at(i, piv[i]) = k.one();
            for (std::size_t s = 0; s < free_slots.size(); ++s)
                b.at(free_slots[s].first, free_slots[s].second) = Elem{digits[s]};
            visit(Subspace(b));
            std::size_t s = 0;
            while (s < digits.size() && ++digits[s] == q) digits[s++] = 0;
            if (s == digits.size()) break;
        }
    }
}

double subspace_count_estimate(std::uint64_t q, std::size_t n) {
    double total = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        int slots = 0, seen = 0;
        for (std::size_t c = n; c-- > 0;) {
            if (mask & (1U << c))
                slots += seen;
            else
                ++seen;
        }
        total += std::pow(static_cast<double>(q), slots);
    }
    return total;
}

}  // namespace

DieudonneModule::DieudonneModule(SemilinearMap frobenius, SemilinearMap verschiebung)
    : f_(std::move(frobenius)), v_(std::move(verschiebung)) {
    if (!(f_.field() == v_.field())) throw std::invalid_argument("F and V over different fields");
    if (f_.dim() != v_.dim() || f_.dim() == 0) throw std::invalid_argument("F and V must act on the same nonzero space");
    const int m = static_cast<int>(field().degree());
    if (((f_.twist() - 1) % m + m) % m != 0) throw std::invalid_argument("F must be sigma-linear (twist +1)");
    if (((v_.twist() + 1) % m + m) % m != 0) throw std::invalid_argument("V must be sigma^-1-linear (twist -1)");
}

int DieudonneModule::genus() const {
    if (dim() % 2 != 0) throw std::domain_error("module of odd dimension " + std::to_string(dim()) + " has no genus");
    return static_cast<int>(dim() / 2);
}

DieudonneModule dd_block_etale(const Field& field) { return from_images(field, 1, {{0, 0}}, {}); }

DieudonneModule dd_block_mult(const Field& field) { return from_images(field, 1, {}, {{0, 0}}); }

DieudonneModule dd_ordinary(const Field& field, int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    const DieudonneModule block = dd_direct_sum(dd_block_etale(field), dd_block_mult(field));
    DieudonneModule d = block;
    for (int i = 1; i < g; ++i) d = dd_direct_sum(d, block);
    return d;
}

DieudonneModule dd_build_Ir(const Field& field, int r) {
    if (r < 1) throw std::invalid_argument("r must be positive");
    const auto n = static_cast<std::size_t>(2 * r);
    // Index layout: 0 -> 1, i -> F^i (1 <= i < r), r - 1 + j -> V^j (1 <= j < r),
    // 2r - 1 -> F^r = V^r.
    auto f_pow = [r](int i) -> std::size_t { return i == r ? static_cast<std::size_t>(2 * r - 1) : static_cast<std::size_t>(i); };
    auto v_pow = [r](int j) -> std::size_t {
        return j == 0 ? 0 : (j == r ? static_cast<std::size_t>(2 * r - 1) : static_cast<std::size_t>(r - 1 + j));
    };
    std::vector<std::pair<std::size_t, std::size_t>> fi, vi;
    for (int i = 0; i < r; ++i) fi.emplace_back(f_pow(i), f_pow(i + 1));  // F * F^i = F^{i+1}
    for (int j = 0; j < r; ++j) vi.emplace_back(v_pow(j), v_pow(j + 1));  // V * V^j = V^{j+1}
    return from_images(field, n, fi, vi);
}

DieudonneModule dd_build_I32_first(const Field& field) {
    // basis 1, V, V^2: V: 1 -> V -> V^2 -> 0, F: 1 -> V^2.
    return from_images(field, 3, {{0, 2}}, {{0, 1}, {1, 2}});
}

DieudonneModule dd_build_I32_second(const Field& field) {
    // basis 1, F, F^2: F: 1 -> F -> F^2 -> 0, V: 1 -> F^2.
    return from_images(field, 3, {{0, 1}, {1, 2}}, {{0, 2}});
}

DieudonneModule dd_build_I32(const Field& field) {
    return dd_direct_sum(dd_build_I32_first(field), dd_build_I32_second(field));
}

DieudonneModule dd_direct_sum(const DieudonneModule& a, const DieudonneModule& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("direct sum of modules over different fields");
    return DieudonneModule(SemilinearMap(block_diagonal(a.F().matrix(), b.F().matrix()), 1),
                           SemilinearMap(block_diagonal(a.V().matrix(), b.V().matrix()), -1));
}

bool dd_is_bt1(const DieudonneModule& d) {
    if (!(d.F() * d.V()).matrix().is_zero()) return false;
    if (!(d.V() * d.F()).matrix().is_zero()) return false;
    return d.F().image() == d.V().kernel() && d.V().image() == d.F().kernel();
}

int dd_p_rank(const DieudonneModule& d) {
    require_bt1(d);
    return static_cast<int>(stable_rank(d.V(), static_cast<unsigned>(2 * d.dim())));
}

int dd_a_number(const DieudonneModule& d) {
    require_bt1(d);
    return static_cast<int>(intersect(d.F().kernel(), d.V().kernel()).dim());
}

int dd_kernel_power(const DieudonneModule& d, Operator op, unsigned n) {
    const SemilinearMap& m = op == Operator::F ? d.F() : d.V();
    return static_cast<int>(d.dim() - m.power(n).rank());
}

std::vector<FiltrationStep> dd_canonical_filtration(const DieudonneModule& d) {
    const Field& k = d.field();
    const std::size_t n = d.dim();
    const std::size_t g = (n + 1) / 2;
    const std::size_t bound = std::max<std::size_t>(4 * g * g, n + 1);

    std::vector<Subspace> found{Subspace::zero(k, n), Subspace::whole(k, n)};
    std::size_t next = 0;
    while (next < found.size()) {
        const Subspace w = found[next++];
        for (const Subspace& cand : {d.V().image(w), d.F().preimage(w)}) {
            if (std::find(found.begin(), found.end(), cand) != found.end()) continue;
            found.push_back(cand);
            if (found.size() > bound)
                throw InvariantError("canonical filtration closure exceeded " + std::to_string(bound) + " subspaces");
        }
    }
    std::sort(found.begin(), found.end(), [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
    std::vector<FiltrationStep> steps;
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (i > 0 && (found[i].dim() == found[i - 1].dim() || !found[i].contains(found[i - 1])))
            throw InvariantError("canonical filtration is not a chain");
        const std::size_t image_dim = d.V().image(found[i]).dim();
        steps.push_back({found[i], found[i].dim(), image_dim});
    }
    return steps;
}

EOSequence dd_eo_type(const DieudonneModule& d) {
    require_bt1(d);
    const int g = d.genus();
    const auto steps = dd_canonical_filtration(d);

    // psi(j) for 0 <= j <= 2g, linear with slope 0 or 1 between canonical pieces.
    std::vector<int> psi(static_cast<std::size_t>(2 * g + 1), 0);
    for (std::size_t s = 0; s + 1 < steps.size(); ++s) {
        const int lo = static_cast<int>(steps[s].dim), hi = static_cast<int>(steps[s + 1].dim);
        const int a = static_cast<int>(steps[s].image_dim_under_V);
        const int b = static_cast<int>(steps[s + 1].image_dim_under_V);
        int slope;
        if (b == a)
            slope = 0;
        else if (b - a == hi - lo)
            slope = 1;
        else
            throw InvariantError("V-rank increment " + std::to_string(b - a) + " across a gap of " +
                                 std::to_string(hi - lo) + " in the canonical filtration");
        for (int j = lo; j <= hi; ++j) psi[static_cast<std::size_t>(j)] = a + slope * (j - lo);
    }
    if (psi[static_cast<std::size_t>(2 * g)] != g) throw InvariantError("rank of V differs from the genus");

    std::vector<int> nu(psi.begin() + 1, psi.begin() + 1 + g);
    if (!EOSequence::is_valid(nu)) throw InvariantError("canonical filtration produced an invalid Ekedahl-Oort sequence");
    EOSequence type(std::move(nu));
    if (type.p_rank() != dd_p_rank(d)) throw InvariantError("p-rank of the Ekedahl-Oort type disagrees with V");
    if (type.a_number() != dd_a_number(d)) throw InvariantError("a-number of the Ekedahl-Oort type disagrees with ker F cap ker V");
    return type;
}

bool dd_is_indecomposable(const DieudonneModule& d) {
    const Field& k = d.field();
    const std::size_t n = d.dim();
    if (n > 16 || subspace_count_estimate(k.order(), n) > 4e6)
        throw std::invalid_argument("module too large for exhaustive indecomposability search");
    std::vector<Subspace> stable;
    for_each_subspace(k, n, [&](const Subspace& w) {
        if (w.dim() == 0 || w.dim() == n) return;
        if (w.contains(d.F().image(w)) && w.contains(d.V().image(w))) stable.push_back(w);
    });
    for (std::size_t i = 0; i < stable.size(); ++i) {
        for (std::size_t j = i + 1; j < stable.size(); ++j) {
            if (stable[i].dim() + stable[j].dim() != n) continue;
            if ((stable[i] + stable[j]).dim() == n) return false;
        }
    }
    return true;
}

}  // namespace ptorsion
