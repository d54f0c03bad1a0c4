#pragma once

// Oriented closed triangulated manifolds: fundamental class, Alexander-Whitney
// cup and cap with local coefficients, Poincaré duality checks, the
// Berstein-Švarc cocycle and the forget-equivariance map to the cover.

#include <cstddef>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "eqhom/cover.hpp"

namespace eqhom {

struct TriangulatedManifold {
    std::shared_ptr<const SimplicialComplex> complex;
    std::size_t dim = 0;
    std::vector<int> orientation;  // sign per top simplex
};

/// Coherent orientation by propagation across ridges from facet 0.
inline TriangulatedManifold orient(std::shared_ptr<const SimplicialComplex> k, std::size_t n) {
    if (k->dimension() != static_cast<int>(n)) throw NotPseudomanifold("complex is not " + std::to_string(n) + "-dimensional");
    for (const auto& s : k->maximal_simplices())
        if (s.size() != n + 1) throw NotPseudomanifold("complex is not pure");
    if (!k->is_connected()) throw NotConnected("manifold must be connected");
    const std::size_t nf = k->count(n);
    TriangulatedManifold m{k, n, std::vector<int>(nf, 0)};
    if (n == 0) {
        m.orientation[0] = 1;
        return m;
    }
    // ridge -> (facet, sign of ridge in its boundary)
    std::vector<std::vector<std::pair<std::size_t, int>>> ridges(k->count(n - 1));
    for (std::size_t f = 0; f < nf; ++f)
        for (const auto& face : k->faces(n, f)) ridges[face.index].push_back({f, face.sign});
    for (const auto& r : ridges)
        if (r.size() != 2) throw NotPseudomanifold("a ridge lies in " + std::to_string(r.size()) + " facets");
    std::vector<std::size_t> stack{0};
    m.orientation[0] = 1;
    while (!stack.empty()) {
        std::size_t f = stack.back();
        stack.pop_back();
        for (const auto& face : k->faces(n, f)) {
            const auto& r = ridges[face.index];
            const auto& other = r[0].first == f ? r[1] : r[0];
            int want = -m.orientation[f] * face.sign * other.second;
            if (m.orientation[other.first] == 0) {
                m.orientation[other.first] = want;
                stack.push_back(other.first);
            } else if (m.orientation[other.first] != want) {
                throw NonOrientable("NonOrientable: orientation propagation is inconsistent");
            }
        }
    }
    return m;
}

/// [M] = Σ ε_σ σ over top simplices.
inline IntVector fundamental_class(const TriangulatedManifold& m) {
    IntVector z(m.orientation.size());
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = m.orientation[i];
    return z;
}

/// Equivariant cochain with values in L, or a chain in C ⊗_π L: one
/// L-block per base simplex, block i occupying entries [i*r, (i+1)*r).
struct Cochain {
    EquivariantComplexPtr space;
    IntRepresentation module;
    std::size_t degree = 0;
    IntVector values;

    std::size_t rank() const { return module.rank(); }
    Integer& at(std::size_t simplex, std::size_t a) { return values[simplex * rank() + a]; }
    const Integer& at(std::size_t simplex, std::size_t a) const { return values[simplex * rank() + a]; }
    IntVector block(std::size_t simplex) const {
        return IntVector(values.begin() + static_cast<std::ptrdiff_t>(simplex * rank()),
                         values.begin() + static_cast<std::ptrdiff_t>((simplex + 1) * rank()));
    }
    bool is_zero() const { return SubquotientBasis::is_zero_vector(values); }
};

using Chain = Cochain;

inline Cochain zero_cochain(const EquivariantComplexPtr& x, const IntRepresentation& l, std::size_t k) {
    check_same_group(*x, l);
    return Cochain{x, l, k, IntVector(x->base().count(k) * l.rank())};
}

/// The 0-cocycle with value 1 on every vertex (trivial rank-1 coefficients).
inline Cochain unit_cochain(const EquivariantComplexPtr& x) {
    Cochain u = zero_cochain(x, trivial_rep(x->group()), 0);
    for (auto& v : u.values) v = 1;
    return u;
}

/// Integer chain (trivial coefficients) as a Chain.
inline Chain integer_chain(const EquivariantComplexPtr& x, std::size_t k, IntVector values) {
    if (values.size() != x->base().count(k)) throw PreconditionError("chain has the wrong length");
    return Chain{x, trivial_rep(x->group()), k, std::move(values)};
}

namespace detail {

inline void check_base(const Cochain& a, const Cochain& b) {
    if (a.space != b.space && &a.space->base() != &b.space->base())
        throw BaseMismatch("cochains live on different complexes");
}

inline void add_into(Cochain& c, std::size_t simplex, const IntVector& v, int sign) {
    for (std::size_t a = 0; a < v.size(); ++a)
        if (!v[a].is_zero()) c.at(simplex, a) += sign * v[a];
}

}  // namespace detail

/// (δφ)(σ) = Σ_i (-1)^i ρ(t_i) φ(∂_i σ).
inline Cochain coboundary(const Cochain& phi) {
    const auto& x = *phi.space;
    Cochain out = zero_cochain(phi.space, phi.module, phi.degree + 1);
    for (std::size_t i = 0; i < x.base().count(phi.degree + 1); ++i)
        for (const auto& f : x.faces(phi.degree + 1, i))
            detail::add_into(out, i, phi.module.action(f.element).apply(phi.block(f.index)), f.sign);
    return out;
}

/// ∂(σ ⊗ x) = Σ_i (-1)^i ∂_iσ ⊗ ρ(t_i)^{-1} x.
inline Chain boundary(const Chain& c) {
    const auto& x = *c.space;
    if (c.degree == 0) return zero_cochain(c.space, c.module, 0);
    Chain out = zero_cochain(c.space, c.module, c.degree - 1);
    const auto& inv = x.group()->finite().inverse;
    for (std::size_t i = 0; i < x.base().count(c.degree); ++i) {
        IntVector b = c.block(i);
        if (SubquotientBasis::is_zero_vector(b)) continue;
        for (const auto& f : x.faces(c.degree, i))
            detail::add_into(out, f.index, c.module.action(inv[f.element]).apply(b), f.sign);
    }
    return out;
}

/// Alexander-Whitney: (φ⌣ψ)(σ) = φ(σ[0..k]) ⊗ ρ₂(w(v0,vk)) ψ(σ[k..k+l]).
inline Cochain cup(const Cochain& phi, const Cochain& psi) {
    detail::check_base(phi, psi);
    const auto& x = *phi.space;
    const std::size_t k = phi.degree, l = psi.degree, n = k + l;
    Cochain out = zero_cochain(phi.space, tensor_rep(phi.module, psi.module), n);
    const std::size_t r2 = psi.rank();
    for (std::size_t i = 0; i < x.base().count(n); ++i) {
        const Simplex& s = x.base().simplex(n, i);
        Simplex front(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k + 1));
        Simplex back(s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
        IntVector a = phi.block(x.base().index_of(front));
        IntVector b = psi.module.action(x.vertex_sheet(n, i, k)).apply(psi.block(x.base().index_of(back)));
        for (std::size_t p = 0; p < a.size(); ++p)
            if (!a[p].is_zero())
                for (std::size_t q = 0; q < r2; ++q) out.at(i, p * r2 + q) = a[p] * b[q];
    }
    return out;
}

/// φ⌣...⌣φ (left-associated); the 0-th power is the unit.
inline Cochain cup_power(const Cochain& phi, std::size_t n) {
    if (n == 0) return unit_cochain(phi.space);
    Cochain out = phi;
    for (std::size_t i = 1; i < n; ++i) out = cup(out, phi);
    return out;
}

/// φ ∩ σ = σ[k..p] ⊗ ρ(w(v0,vk))^{-1} φ(σ[0..k]) for integer chains z.
inline Chain cap(const Cochain& phi, const Chain& z) {
    detail::check_base(phi, z);
    if (z.rank() != 1) throw PreconditionError("cap expects an integer chain");
    for (const auto& m : z.module.element_images())
        if (!(m == IntMatrix::identity(1))) throw PreconditionError("cap expects an integer chain");
    const auto& x = *phi.space;
    const std::size_t k = phi.degree, p = z.degree;
    if (k > p) throw DimensionMismatch("cochain degree exceeds chain degree");
    Chain out = zero_cochain(phi.space, phi.module, p - k);
    const auto& inv = x.group()->finite().inverse;
    for (std::size_t i = 0; i < x.base().count(p); ++i) {
        const Integer& c = z.values[i];
        if (c.is_zero()) continue;
        const Simplex& s = x.base().simplex(p, i);
        Simplex front(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k + 1));
        Simplex back(s.begin() + static_cast<std::ptrdiff_t>(k), s.end());
        IntVector v = phi.module.action(inv[x.vertex_sheet(p, i, k)]).apply(phi.block(x.base().index_of(front)));
        std::size_t j = x.base().index_of(back);
        for (std::size_t a = 0; a < v.size(); ++a)
            if (!v[a].is_zero()) out.at(j, a) += c * v[a];
    }
    return out;
}

inline Cochain operator+(Cochain a, const Cochain& b) {
    detail::check_base(a, b);
    if (a.degree != b.degree || a.values.size() != b.values.size()) throw DimensionMismatch("adding cochains of different shapes");
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
}

inline Cochain operator-(Cochain a, const Cochain& b) {
    for (auto& v : a.values) v = -v;
    a = a + b;
    for (auto& v : a.values) v = -v;
    return a;
}

inline Cochain scaled(Cochain a, const Integer& s) {
    for (auto& v : a.values) v *= s;
    return a;
}

inline bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree == b.degree && a.values == b.values && a.rank() == b.rank();
}

/// Berstein-Švarc 1-cocycle: edge [u,v] with transition g ≠ e gets g - 1 ∈ I.
inline Cochain berstein_svarc(const EquivariantComplexPtr& x) {
    Cochain b = zero_cochain(x, augmentation_ideal_rep(x->group()), 1);
    for (std::size_t e = 0; e < x->base().count(1); ++e) {
        std::size_t g = x->edge_transition(e);
        if (g != 0) b.at(e, g - 1) = 1;
    }
    return b;
}

/// A class in Smith coordinates of the group it lives in.
struct HomologyClassReport {
    AbelianGroupInvariants ambient;
    IntVector coordinates;

    bool is_zero() const { return SubquotientBasis::is_zero_vector(coordinates); }
    std::string to_string() const {
        std::ostringstream s;
        s << "class in " << ambient.to_string() << " coordinates (";
        for (std::size_t i = 0; i < coordinates.size(); ++i) s << (i ? ", " : "") << coordinates[i];
        s << ")";
        return s.str();
    }
};

inline HomologyClassReport homology_class(const Chain& c) {
    auto basis = twisted_chain_complex(*c.space, c.module).homology_basis(c.degree);
    return {basis.invariants(), basis.coordinates(c.values)};
}

inline HomologyClassReport cohomology_class(const Cochain& phi) {
    auto basis = twisted_cochain_complex(*phi.space, phi.module).cohomology_basis(phi.degree);
    return {basis.invariants(), basis.coordinates(phi.values)};
}

/// β^n ∩ [M] in H_0(M; I^{⊗n}).
inline HomologyClassReport essentiality_pairing(const TriangulatedManifold& m, const EquivariantComplexPtr& x) {
    if (&x->base() != m.complex.get()) throw BaseMismatch("cover is not over the manifold's complex");
    Cochain b = cup_power(berstein_svarc(x), m.dim);
    return homology_class(cap(b, integer_chain(x, m.dim, fundamental_class(m))));
}

/// Forget equivariance: value ρ(g)φ(σ) on the cover cell (σ, g), as a class
/// in H^k(cover; Z^rank).
inline HomologyClassReport pert_finite(const Cochain& phi) {
    const auto& x = *phi.space;
    const std::size_t r = phi.rank(), n = x.order();
    if (!coboundary(phi).is_zero())
        throw ChainConditionViolated("pert expects a cocycle");
    IntVector lifted(x.cell_count(phi.degree) * r);
    for (std::size_t s = 0; s < x.base().count(phi.degree); ++s) {
        IntVector v = phi.block(s);
        for (std::size_t g = 0; g < n; ++g) {
            IntVector w = phi.module.action(g).apply(v);
            for (std::size_t a = 0; a < r; ++a) lifted[x.cell(s, g) * r + a] = w[a];
        }
    }
    auto basis = dual(with_rank(x.cover_chain_complex(), r)).cohomology_basis(phi.degree);
    return {basis.invariants(), basis.coordinates(lifted)};
}

struct DualityDegree {
    std::size_t k;
    AbelianGroupInvariants cohomology;
    AbelianGroupInvariants homology;
    IntMatrix map;  // columns: images of cohomology generators in homology coordinates
    bool isomorphism;
};

struct DualityReport {
    std::vector<DualityDegree> degrees;
    bool ok() const {
        for (const auto& d : degrees)
            if (!d.isomorphism) return false;
        return !degrees.empty();
    }
};

/// Cap with [M] on every generator of H^k(M; L), landing in H_{n-k}(M; L).
inline DualityReport pd_check(const TriangulatedManifold& m, const EquivariantComplexPtr& x, const IntRepresentation& l) {
    if (&x->base() != m.complex.get()) throw BaseMismatch("cover is not over the manifold's complex");
    const auto chains = twisted_chain_complex(*x, l);
    const auto cochains = twisted_cochain_complex(*x, l);
    const Chain fc = integer_chain(x, m.dim, fundamental_class(m));
    DualityReport report;
    for (std::size_t k = 0; k <= m.dim; ++k) {
        auto cb = cochains.cohomology_basis(k);
        auto hb = chains.homology_basis(m.dim - k);
        IntMatrix map(hb.generator_count(), cb.generator_count());
        for (std::size_t g = 0; g < cb.generator_count(); ++g) {
            Cochain phi{x, l, k, cb.representative(g)};
            map.set_column(g, hb.coordinates(cap(phi, fc).values));
        }
        bool iso = is_isomorphism(map, cb.orders(), hb.orders());
        report.degrees.push_back({k, cb.invariants(), hb.invariants(), std::move(map), iso});
    }
    return report;
}

}  // namespace eqhom
