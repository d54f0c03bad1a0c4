#pragma once

// Homology of finite groups: the normalized bar resolution with
// representation coefficients, coinvariants, and the kernel formula through
// the augmentation ideal.

#include <cstddef>
#include <string>
#include <vector>

#include "eqhom/chain_complex.hpp"
#include "eqhom/presentation.hpp"
#include "eqhom/representation.hpp"

namespace eqhom {

struct Budget {
    std::size_t max_bar_cells = 20000;             // (|π|-1)^n
    std::size_t max_dense_entries = 5'000'000;     // per differential
};

namespace detail {

inline std::size_t checked_pow(std::size_t base, std::size_t e, std::size_t cap) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (base != 0 && r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

inline void check_bar_budget(std::size_t order, std::size_t n, std::size_t rank, const Budget& b) {
    const std::size_t m = order - 1;
    if (checked_pow(m, n, b.max_bar_cells) > b.max_bar_cells)
        throw BudgetExceeded("bar resolution too large: (" + std::to_string(m) + ")^" + std::to_string(n) + " > " +
                             std::to_string(b.max_bar_cells));
    // d_{n+1} is (m^n r) x (m^{n+1} r)
    const std::size_t cap = b.max_dense_entries;
    std::size_t cells = checked_pow(m, 2 * n + 1, cap);
    if (cells > cap || cells * rank * rank > cap)
        throw BudgetExceeded("bar differential too large for dense elimination");
}

}  // namespace detail

/// Normalized bar complex B_* ⊗_π L in degrees 0..top. Basis of degree k:
/// tuples [g1|...|gk] of nonidentity elements (mixed radix, g1 most
/// significant) times a basis of L.
///   d([g1|...|gk] ⊗ x) = [g2|...|gk] ⊗ g1^{-1}x
///                        + Σ (-1)^i [...|g_i g_{i+1}|...] ⊗ x
///                        + (-1)^k [g1|...|g_{k-1}] ⊗ x
/// with degenerate tuples dropped.
inline ChainComplex bar_complex(const GroupModel& group, std::size_t top, const IntRepresentation& l) {
    const auto& fg = group.finite();
    const std::size_t m = fg.order - 1;
    const std::size_t r = l.rank();
    ChainComplex cc;
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k <= top; ++k) dims.push_back(detail::checked_pow(m, k, SIZE_MAX / 2));
    for (std::size_t k = 0; k <= top; ++k) {
        IntMatrix d(k == 0 ? 0 : dims[k - 1] * r, dims[k] * r);
        if (k > 0) {
            std::vector<std::size_t> g(k);
            for (std::size_t idx = 0; idx < dims[k]; ++idx) {
                std::size_t t = idx;
                for (std::size_t i = k; i-- > 0;) {
                    g[i] = t % m + 1;
                    t /= m;
                }
                auto encode = [&](const std::vector<std::size_t>& h) {
                    std::size_t e = 0;
                    for (auto x : h) e = e * m + (x - 1);
                    return e;
                };
                auto add_block = [&](std::size_t row_tuple, const IntMatrix& a, int sign) {
                    for (std::size_t p = 0; p < r; ++p)
                        for (std::size_t q = 0; q < r; ++q)
                            if (!a(p, q).is_zero()) d(row_tuple * r + p, idx * r + q) += sign * a(p, q);
                };
                const IntMatrix id = IntMatrix::identity(r);
                add_block(encode({g.begin() + 1, g.end()}), l.action(fg.inverse[g[0]]), 1);
                for (std::size_t i = 0; i + 1 < k; ++i) {
                    std::size_t prod = fg.table[g[i]][g[i + 1]];
                    if (prod == 0) continue;
                    std::vector<std::size_t> h;
                    for (std::size_t j = 0; j < k; ++j) {
                        if (j == i + 1) continue;
                        h.push_back(j == i ? prod : g[j]);
                    }
                    add_block(encode(h), id, (i + 1) % 2 == 0 ? 1 : -1);
                }
                add_block(encode({g.begin(), g.end() - 1}), id, k % 2 == 0 ? 1 : -1);
            }
        }
        cc.boundary.push_back(std::move(d));
    }
    return cc;
}

/// H_n(π; L) through the normalized bar resolution.
inline AbelianGroupInvariants bar_homology(const GroupModel& group, std::size_t n, const IntRepresentation& l,
                                           const Budget& budget = {}) {
    if (!(*l.group() == group)) throw ModelMismatch("coefficients are over a different group");
    detail::check_bar_budget(group.order(), n, l.rank(), budget);
    return bar_complex(group, n + 1, l).homology(n);
}

inline AbelianGroupInvariants bar_homology(const GroupModelPtr& group, std::size_t n, const Budget& budget = {}) {
    return bar_homology(*group, n, trivial_rep(group), budget);
}

/// Columns ρ(g)x - x over generators g and basis vectors x; its cokernel is L_π.
inline IntMatrix coinvariants_presentation(const IntRepresentation& l) {
    IntMatrix p(l.rank(), 0);
    for (const auto& a : l.generator_images()) p = hstack(p, a - IntMatrix::identity(l.rank()));
    return p;
}

inline AbelianGroupInvariants coinvariants(const IntRepresentation& l) {
    return cokernel_invariants(coinvariants_presentation(l));
}

enum class InclusionFactor { last, first };

/// H_n(π) as the kernel of I^n ⊗_π Z -> (I^{n-1} ⊗ Zπ) ⊗_π Z induced by
/// the inclusion I -> Zπ on one tensor factor.
inline AbelianGroupInvariants shift_homology(const GroupModelPtr& group, std::size_t n,
                                             InclusionFactor factor = InclusionFactor::last,
                                             const Budget& budget = {}) {
    if (n == 0) throw PreconditionError("shift formula needs n >= 1");
    const std::size_t m = group->order() - 1;
    if (detail::checked_pow(m, n, budget.max_bar_cells) > budget.max_bar_cells)
        throw BudgetExceeded("I^n too large: (" + std::to_string(m) + ")^" + std::to_string(n) + " > " +
                             std::to_string(budget.max_bar_cells));
    const IntRepresentation ideal = augmentation_ideal_rep(group);
    const IntRepresentation rest = tensor_power(ideal, n - 1);
    const IntRepresentation src = factor == InclusionFactor::last ? tensor_rep(rest, ideal) : tensor_rep(ideal, rest);
    const IntRepresentation dst = factor == InclusionFactor::last ? tensor_rep(rest, regular_rep(group))
                                                                  : tensor_rep(regular_rep(group), rest);
    const IntMatrix e = augmentation_inclusion(*group);
    const IntMatrix id = IntMatrix::identity(rest.rank());
    const IntMatrix iota = factor == InclusionFactor::last ? kron(id, e) : kron(e, id);
    const IntMatrix p_src = coinvariants_presentation(src);
    const IntMatrix p_dst = coinvariants_presentation(dst);
    // {x : ιx ∈ im P_dst} is the projection of ker [ι | P_dst].
    const IntMatrix k = kernel_basis(hstack(iota, p_dst));
    const IntMatrix w = k.row_range(0, src.rank());
    return lattice_quotient_invariants(w, p_src);
}

struct ShiftChainReport {
    std::vector<AbelianGroupInvariants> values;  // values[k] = H_{n-k}(π; I^{⊗k})
    bool all_equal() const {
        for (const auto& v : values)
            if (v != values.front()) return false;
        return !values.empty();
    }
};

inline ShiftChainReport shift_chain_check(const GroupModelPtr& group, std::size_t n, const Budget& budget = {}) {
    if (n == 0) throw PreconditionError("shift chain needs n >= 1");
    ShiftChainReport r;
    const IntRepresentation ideal = augmentation_ideal_rep(group);
    for (std::size_t k = 0; k < n; ++k) r.values.push_back(bar_homology(*group, n - k, tensor_power(ideal, k), budget));
    return r;
}

struct VanishingReport {
    std::vector<AbelianGroupInvariants> values;  // values[i-1] = H_i
    bool all_zero() const {
        for (const auto& v : values)
            if (!v.is_trivial()) return false;
        return true;
    }
};

/// H_i(π; I^{⊗(k-1)} ⊗ Zπ) for i = 1..m.
inline VanishingReport projective_vanishing_check(const GroupModelPtr& group, std::size_t k, std::size_t m,
                                                  const Budget& budget = {}) {
    if (k == 0) throw PreconditionError("k must be at least 1");
    const IntRepresentation l = tensor_rep(tensor_power(augmentation_ideal_rep(group), k - 1), regular_rep(group));
    VanishingReport r;
    for (std::size_t i = 1; i <= m; ++i) r.values.push_back(bar_homology(*group, i, l, budget));
    return r;
}

/// π_ab from the exponent-sum matrix of the relators.
inline AbelianGroupInvariants abelianization(const GroupPresentation& p) {
    IntMatrix m(p.generators.size(), p.relators.size());
    for (std::size_t j = 0; j < p.relators.size(); ++j)
        for (const auto& letter : p.relators[j]) m(letter.generator, j) += letter.inverse ? -1 : 1;
    return cokernel_invariants(m);
}

}  // namespace eqhom
