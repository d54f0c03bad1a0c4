#pragma once

// Edge-path fundamental groups and universal covers of simplicial complexes
// with finite fundamental group, as free Zπ chain complexes, together with
// (co)homology in local coefficient systems.

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqhom/chain_complex.hpp"
#include "eqhom/group_ring.hpp"
#include "eqhom/groups.hpp"
#include "eqhom/representation.hpp"
#include "eqhom/simplicial_complex.hpp"
#include "eqhom/todd_coxeter.hpp"

namespace eqhom {

/// Edge-path presentation of π_1: one generator per non-tree edge of a BFS
/// spanning tree, one relator per 2-simplex.
struct EdgePathGroup {
    GroupPresentation presentation;
    std::vector<std::optional<std::size_t>> edge_generator;  // per edge; nullopt for tree edges
    std::size_t basepoint = 0;
};

inline EdgePathGroup fundamental_group(const SimplicialComplex& k, std::size_t basepoint = 0) {
    const std::size_t n = k.vertex_count();
    if (basepoint >= n) throw PreconditionError("basepoint out of range");
    if (!k.is_connected()) throw NotConnected("complex is not connected");
    const std::size_t ne = k.count(1);
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(n);  // (neighbour, edge)
    for (std::size_t e = 0; e < ne; ++e) {
        const auto& s = k.simplex(1, e);
        adj[s[0]].push_back({s[1], e});
        adj[s[1]].push_back({s[0], e});
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<bool> tree(ne, false), seen(n, false);
    std::deque<std::size_t> queue{basepoint};
    seen[basepoint] = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                tree[e] = true;
                queue.push_back(w);
            }
    }
    EdgePathGroup g;
    g.basepoint = basepoint;
    g.edge_generator.assign(ne, std::nullopt);
    for (std::size_t e = 0; e < ne; ++e)
        if (!tree[e]) {
            g.edge_generator[e] = g.presentation.generators.size();
            g.presentation.generators.push_back("g" + std::to_string(g.presentation.generators.size()));
        }
    auto letter = [&](std::size_t a, std::size_t b, Word& w, bool inverse) {
        auto e = g.edge_generator[k.index_of({a, b})];
        if (e) w.push_back({*e, inverse});
    };
    for (std::size_t t = 0; t < k.count(2); ++t) {
        const auto& s = k.simplex(2, t);
        Word w;
        letter(s[0], s[1], w, false);
        letter(s[1], s[2], w, false);
        letter(s[0], s[2], w, true);
        w = free_reduce(w);
        if (!w.empty()) g.presentation.relators.push_back(std::move(w));
    }
    return g;
}

/// One boundary term of a cover cell (σ, e): face τ translated by `element`.
struct EquivariantFace {
    std::size_t index;
    int sign;
    std::size_t element;
};

/// The universal cover of a finite complex with finite π as a free Zπ
/// complex. Cells are (base simplex, element); the deck action is
/// h·(σ, g) = (σ, hg). The lift of σ = [v0..vk] in sheet g has vertex v_i in
/// sheet g·w(v0, v_i), where w is the edge transition element.
class EquivariantComplex {
public:
    EquivariantComplex(std::shared_ptr<const SimplicialComplex> base, GroupModelPtr group,
                       std::vector<std::size_t> edge_element)
        : base_(std::move(base)), group_(std::move(group)), edge_element_(std::move(edge_element)) {
        if (edge_element_.size() != base_->count(1)) throw PreconditionError("need one transition per edge");
        const auto& fg = group_->finite();
        for (auto e : edge_element_)
            if (e >= fg.order) throw PreconditionError("transition outside the group");
        // Cocycle condition on every triangle: w(a,b) w(b,c) = w(a,c).
        for (std::size_t t = 0; t < base_->count(2); ++t) {
            const auto& s = base_->simplex(2, t);
            if (fg.table[edge(s[0], s[1])][edge(s[1], s[2])] != edge(s[0], s[2]))
                throw PreconditionError("PresentationMismatch: edge transitions violate a triangle relation");
        }
    }

    const SimplicialComplex& base() const noexcept { return *base_; }
    const std::shared_ptr<const SimplicialComplex>& base_ptr() const noexcept { return base_; }
    const GroupModelPtr& group() const noexcept { return group_; }
    std::size_t order() const { return group_->order(); }
    std::size_t dimension() const { return static_cast<std::size_t>(std::max(0, base_->dimension())); }
    std::size_t cell_count(std::size_t k) const { return order() * base_->count(k); }

    /// Transition element of the edge {a, b}, a < b.
    std::size_t edge(std::size_t a, std::size_t b) const { return edge_element_.at(base_->index_of({a, b})); }
    std::size_t edge_transition(std::size_t e) const { return edge_element_.at(e); }

    /// w(v0, v_j) for the j-th vertex of the i-th k-simplex.
    std::size_t vertex_sheet(std::size_t k, std::size_t i, std::size_t j) const {
        if (j == 0) return 0;
        const auto& s = base_->simplex(k, i);
        return edge(s[0], s[j]);
    }

    std::vector<EquivariantFace> faces(std::size_t k, std::size_t i) const {
        std::vector<EquivariantFace> out;
        const auto& bd = base_->faces(k, i);
        for (std::size_t j = 0; j < bd.size(); ++j)
            out.push_back({bd[j].index, bd[j].sign, j == 0 ? vertex_sheet(k, i, 1) : 0});
        return out;
    }

    /// ∂ over Zπ: entry (τ, σ) is the coefficient of τ in ∂σ; chains carry
    /// coefficients on the left, so ∂(aσ) = Σ_τ a·D(τ,σ) τ.
    std::vector<std::vector<GroupRingElement>> boundary_over_group_ring(std::size_t k) const {
        std::size_t rows = k == 0 ? 0 : base_->count(k - 1);
        std::vector<std::vector<GroupRingElement>> d(rows, std::vector<GroupRingElement>(base_->count(k), GroupRingElement(group_)));
        if (k == 0) return d;
        for (std::size_t i = 0; i < base_->count(k); ++i)
            for (const auto& f : faces(k, i)) d[f.index][i].add(group_->element(f.element), f.sign);
        return d;
    }

    /// ∂_{k-1} ∂_k = 0 over the group ring.
    bool boundary_squares_to_zero(std::size_t k) const {
        if (k < 2) return true;
        auto outer = boundary_over_group_ring(k - 1);
        auto inner = boundary_over_group_ring(k);
        for (std::size_t r = 0; r < outer.size(); ++r)
            for (std::size_t c = 0; c < base_->count(k); ++c) {
                GroupRingElement sum(group_);
                for (std::size_t t = 0; t < inner.size(); ++t)
                    if (!inner[t][c].is_zero() && !outer[r][t].is_zero()) sum += ring_multiply(inner[t][c], outer[r][t]);
                if (!sum.is_zero()) return false;
            }
        return true;
    }

    /// Cover cell (σ, g) as a flat index σ·|π| + g.
    std::size_t cell(std::size_t simplex, std::size_t element) const { return simplex * order() + element; }

    /// Deck translate of a flat cover cell.
    std::size_t act(std::size_t h, std::size_t flat_cell) const {
        const std::size_t n = order();
        return cell(flat_cell / n, group_->finite().table[h][flat_cell % n]);
    }

    /// Ordinary chain complex of the cover.
    ChainComplex cover_chain_complex() const {
        ChainComplex cc;
        const std::size_t n = order();
        const auto& table = group_->finite().table;
        for (std::size_t k = 0; k <= dimension(); ++k) {
            IntMatrix d(k == 0 ? 0 : cell_count(k - 1), cell_count(k));
            if (k > 0)
                for (std::size_t i = 0; i < base_->count(k); ++i)
                    for (const auto& f : faces(k, i))
                        for (std::size_t g = 0; g < n; ++g) d(cell(f.index, table[g][f.element]), cell(i, g)) += f.sign;
            cc.boundary.push_back(std::move(d));
        }
        return cc;
    }

    /// No cell is fixed by a nonidentity deck transformation.
    bool action_is_free() const {
        for (std::size_t k = 0; k <= dimension(); ++k)
            for (std::size_t c = 0; c < cell_count(k); ++c)
                for (std::size_t h = 1; h < order(); ++h)
                    if (act(h, c) == c) return false;
        return true;
    }

private:
    std::shared_ptr<const SimplicialComplex> base_;
    GroupModelPtr group_;
    std::vector<std::size_t> edge_element_;
};

using EquivariantComplexPtr = std::shared_ptr<const EquivariantComplex>;

/// Universal cover from the edge-path presentation and a finite model of
/// its group (generator i of the model is the image of generator i).
inline EquivariantComplexPtr universal_cover(std::shared_ptr<const SimplicialComplex> k, const EdgePathGroup& pi1,
                                             const GroupModelPtr& model) {
    if (!model->is_finite()) throw NotFinite("InfiniteGroup: universal covers need a finite fundamental group");
    if (!satisfies_relators(*model, pi1.presentation))
        throw PreconditionError("PresentationMismatch: model does not satisfy the edge-path relators");
    std::vector<std::size_t> edge_element(k->count(1), 0);
    for (std::size_t e = 0; e < edge_element.size(); ++e)
        if (auto g = pi1.edge_generator[e]) edge_element[e] = model->finite().generators[*g];
    return std::make_shared<EquivariantComplex>(std::move(k), model, std::move(edge_element));
}

/// The complex itself viewed as covered by the trivial group; computes
/// (co)homology with coefficients pulled back from the trivial group.
inline EquivariantComplexPtr trivial_cover(std::shared_ptr<const SimplicialComplex> k) {
    std::vector<std::size_t> edge_element(k->count(1), 0);
    return std::make_shared<EquivariantComplex>(std::move(k), make_trivial_group(), std::move(edge_element));
}

struct FiniteCover {
    EdgePathGroup pi1;
    GroupModelPtr group;
    EquivariantComplexPtr cover;
};

/// π_1 by coset enumeration then the universal cover. Throws NotFinite when
/// the enumeration exceeds `max_cosets`.
inline FiniteCover build_universal_cover(std::shared_ptr<const SimplicialComplex> k, std::size_t max_cosets = 20000) {
    FiniteCover out;
    out.pi1 = fundamental_group(*k);
    auto tc = todd_coxeter_simplified(out.pi1.presentation, max_cosets);
    if (tc.exceeded())
        throw NotFinite("InfiniteGroup: coset enumeration exceeded " + std::to_string(max_cosets) +
                        " cosets (fundamental group infinite or too large)");
    out.group = *tc.model;
    out.cover = universal_cover(std::move(k), out.pi1, out.group);
    return out;
}

// ---------------------------------------------------------------------------
// Local coefficients

inline void check_same_group(const EquivariantComplex& x, const IntRepresentation& l) {
    if (!(x.group() == l.group() || *x.group() == *l.group()))
        throw ModelMismatch("coefficient module is over a different group than the cover");
}

/// C_*(X~) ⊗_π L: block (τ, σ) of d_k is Σ sign·ρ(t^{-1}) over faces τ·t of σ,
/// using the right-module convention c·g = g^{-1}c.
inline ChainComplex twisted_chain_complex(const EquivariantComplex& x, const IntRepresentation& l) {
    check_same_group(x, l);
    const std::size_t r = l.rank();
    const auto& inv = x.group()->finite().inverse;
    ChainComplex cc;
    for (std::size_t k = 0; k <= x.dimension(); ++k) {
        IntMatrix d(k == 0 ? 0 : x.base().count(k - 1) * r, x.base().count(k) * r);
        if (k > 0)
            for (std::size_t i = 0; i < x.base().count(k); ++i)
                for (const auto& f : x.faces(k, i)) {
                    const IntMatrix& m = l.action(inv[f.element]);
                    for (std::size_t a = 0; a < r; ++a)
                        for (std::size_t b = 0; b < r; ++b)
                            if (!m(a, b).is_zero()) d(f.index * r + a, i * r + b) += f.sign * m(a, b);
                }
        cc.boundary.push_back(std::move(d));
    }
    return cc;
}

/// Hom_π(C_*(X~), L): (δφ)(σ) = Σ sign·ρ(t) φ(τ) over faces τ·t of σ.
inline CochainComplex twisted_cochain_complex(const EquivariantComplex& x, const IntRepresentation& l) {
    check_same_group(x, l);
    const std::size_t r = l.rank();
    const std::size_t top = x.dimension();
    CochainComplex cc;
    for (std::size_t k = 0; k <= top; ++k) {
        IntMatrix d(k == top ? 0 : x.base().count(k + 1) * r, x.base().count(k) * r);
        if (k < top)
            for (std::size_t i = 0; i < x.base().count(k + 1); ++i)
                for (const auto& f : x.faces(k + 1, i)) {
                    const IntMatrix& m = l.action(f.element);
                    for (std::size_t a = 0; a < r; ++a)
                        for (std::size_t b = 0; b < r; ++b)
                            if (!m(a, b).is_zero()) d(i * r + a, f.index * r + b) += f.sign * m(a, b);
                }
        cc.coboundary.push_back(std::move(d));
    }
    return cc;
}

inline ChainComplex chain_complex(const SimplicialComplex& k) {
    ChainComplex cc;
    for (std::size_t d = 0; d <= static_cast<std::size_t>(std::max(0, k.dimension())); ++d)
        cc.boundary.push_back(k.boundary(d));
    return cc;
}

inline std::vector<AbelianGroupInvariants> homology(const SimplicialComplex& k) { return chain_complex(k).homology(); }

inline std::vector<AbelianGroupInvariants> cohomology(const SimplicialComplex& k) {
    return dual(chain_complex(k)).cohomology();
}

inline std::vector<AbelianGroupInvariants> local_homology(const EquivariantComplex& x, const IntRepresentation& l) {
    return twisted_chain_complex(x, l).homology();
}

inline std::vector<AbelianGroupInvariants> local_cohomology(const EquivariantComplex& x, const IntRepresentation& l) {
    return twisted_cochain_complex(x, l).cohomology();
}

}  // namespace eqhom
