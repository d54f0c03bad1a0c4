#pragma once

#include <cstddef>
#include <vector>

#include "eqhom/linalg.hpp"

namespace eqhom {

/// Integral chain complex C_0 <- C_1 <- ... <- C_top given by its
/// boundary matrices; boundary[k] : C_k -> C_{k-1} and boundary[0] has zero rows.
struct ChainComplex {
    std::vector<IntMatrix> boundary;

    std::size_t top() const { return boundary.empty() ? 0 : boundary.size() - 1; }
    std::size_t rank(std::size_t k) const { return k < boundary.size() ? boundary[k].cols() : 0; }

    /// d_{k+1}, or the empty map into C_k past the top.
    IntMatrix incoming(std::size_t k) const {
        return k + 1 < boundary.size() ? boundary[k + 1] : IntMatrix(rank(k), 0);
    }

    bool is_complex() const {
        for (std::size_t k = 1; k < boundary.size(); ++k)
            if (!(boundary[k - 1] * boundary[k]).is_zero()) return false;
        return true;
    }

    AbelianGroupInvariants homology(std::size_t k) const { return homology_of_pair(boundary.at(k), incoming(k)); }

    std::vector<AbelianGroupInvariants> homology() const {
        std::vector<AbelianGroupInvariants> out;
        for (std::size_t k = 0; k < boundary.size(); ++k) out.push_back(homology(k));
        return out;
    }

    SubquotientBasis homology_basis(std::size_t k) const { return SubquotientBasis(boundary.at(k), incoming(k)); }
};

/// Cochain complex C^0 -> C^1 -> ... with coboundary[k] : C^k -> C^{k+1};
/// coboundary[top] has zero rows.
struct CochainComplex {
    std::vector<IntMatrix> coboundary;

    std::size_t rank(std::size_t k) const { return k < coboundary.size() ? coboundary[k].cols() : 0; }

    IntMatrix incoming(std::size_t k) const { return k == 0 ? IntMatrix(rank(0), 0) : coboundary[k - 1]; }

    bool is_complex() const {
        for (std::size_t k = 1; k < coboundary.size(); ++k)
            if (!(coboundary[k] * coboundary[k - 1]).is_zero()) return false;
        return true;
    }

    AbelianGroupInvariants cohomology(std::size_t k) const { return homology_of_pair(coboundary.at(k), incoming(k)); }

    std::vector<AbelianGroupInvariants> cohomology() const {
        std::vector<AbelianGroupInvariants> out;
        for (std::size_t k = 0; k < coboundary.size(); ++k) out.push_back(cohomology(k));
        return out;
    }

    SubquotientBasis cohomology_basis(std::size_t k) const { return SubquotientBasis(coboundary.at(k), incoming(k)); }
};

/// Hom(C, Z): coboundary[k] = boundary[k+1]^T.
inline CochainComplex dual(const ChainComplex& c) {
    CochainComplex d;
    for (std::size_t k = 0; k < c.boundary.size(); ++k) d.coboundary.push_back(c.incoming(k).transpose());
    return d;
}

/// C ⊗ Z^r: every differential becomes d ⊗ Id_r.
inline ChainComplex with_rank(const ChainComplex& c, std::size_t r) {
    ChainComplex out;
    for (const auto& d : c.boundary) out.boundary.push_back(kron(d, IntMatrix::identity(r)));
    return out;
}

}  // namespace eqhom
