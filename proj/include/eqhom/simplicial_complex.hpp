#pragma once

// Finite simplicial complexes with lexicographically ordered simplices and
// their integral chain complexes.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eqhom/error.hpp"
#include "eqhom/linalg.hpp"

namespace eqhom {

using Simplex = std::vector<std::size_t>;  // strictly increasing vertex ids

/// A single boundary term: face index in dimension k-1 and its sign.
struct Face {
    std::size_t index;
    int sign;
};

class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of the given simplices. Vertex ids are
    /// relabelled 0..n-1 preserving their order.
    explicit SimplicialComplex(const std::vector<Simplex>& facets) {
        std::set<std::size_t> ids;
        for (const auto& f : facets) {
            if (f.empty()) throw PreconditionError("empty simplex");
            std::set<std::size_t> seen(f.begin(), f.end());
            if (seen.size() != f.size()) throw PreconditionError("DuplicateVertexInSimplex");
            ids.insert(f.begin(), f.end());
        }
        std::map<std::size_t, std::size_t> relabel;
        for (std::size_t id : ids) {
            relabel.emplace(id, labels_.size());
            labels_.push_back(id);
        }
        std::vector<std::set<Simplex>> faces;
        for (const auto& f : facets) {
            Simplex s;
            for (auto v : f) s.push_back(relabel.at(v));
            std::sort(s.begin(), s.end());
            maximal_.insert(s);
            const std::size_t k = s.size();
            if (faces.size() < k) faces.resize(k);
            // all nonempty subsets
            for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
                Simplex sub;
                for (std::size_t i = 0; i < k; ++i)
                    if (mask & (std::size_t{1} << i)) sub.push_back(s[i]);
                faces[sub.size() - 1].insert(std::move(sub));
            }
        }
        // Drop facets contained in larger ones from the maximal set.
        for (auto it = maximal_.begin(); it != maximal_.end();) {
            bool contained = false;
            for (std::size_t d = it->size(); d < faces.size() && !contained; ++d)
                for (const auto& big : faces[d])
                    if (big.size() > it->size() && std::includes(big.begin(), big.end(), it->begin(), it->end())) {
                        contained = true;
                        break;
                    }
            it = contained ? maximal_.erase(it) : std::next(it);
        }
        for (auto& level : faces) {
            simplices_.emplace_back(level.begin(), level.end());
            auto& idx = index_.emplace_back();
            for (std::size_t i = 0; i < simplices_.back().size(); ++i) idx.emplace(simplices_.back()[i], i);
        }
        for (std::size_t k = 0; k < simplices_.size(); ++k) {
            auto& fl = faces_.emplace_back();
            for (const auto& s : simplices_[k]) {
                std::vector<Face> bd;
                if (k > 0)
                    for (std::size_t i = 0; i <= k; ++i) {
                        Simplex f = s;
                        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
                        bd.push_back({index_[k - 1].at(f), (i % 2 == 0) ? 1 : -1});
                    }
                fl.push_back(std::move(bd));
            }
        }
    }

    /// Top dimension; -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t vertex_count() const noexcept { return simplices_.empty() ? 0 : simplices_[0].size(); }
    std::size_t count(std::size_t k) const noexcept { return k < simplices_.size() ? simplices_[k].size() : 0; }
    const std::vector<Simplex>& simplices(std::size_t k) const { return simplices_.at(k); }
    const Simplex& simplex(std::size_t k, std::size_t i) const { return simplices_.at(k).at(i); }
    const std::set<Simplex>& maximal_simplices() const noexcept { return maximal_; }
    /// Original label of relabelled vertex v.
    std::size_t label(std::size_t v) const { return labels_.at(v); }

    std::optional<std::size_t> find(const Simplex& s) const {
        if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
        const auto& idx = index_[s.size() - 1];
        auto it = idx.find(s);
        if (it == idx.end()) return std::nullopt;
        return it->second;
    }
    std::size_t index_of(const Simplex& s) const {
        auto i = find(s);
        if (!i) throw PreconditionError("simplex not in complex");
        return *i;
    }

    /// Signed faces of the i-th k-simplex, in vertex-deletion order.
    const std::vector<Face>& faces(std::size_t k, std::size_t i) const { return faces_.at(k).at(i); }

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t k = 0; k < simplices_.size(); ++k)
            chi += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(simplices_[k].size());
        return chi;
    }

    /// d_k : C_k -> C_{k-1}; d_0 is the 0 x n0 matrix, d_{dim+1} is n_dim x 0.
    IntMatrix boundary(std::size_t k) const {
        IntMatrix m(k == 0 ? 0 : count(k - 1), count(k));
        if (k == 0) return m;
        for (std::size_t j = 0; j < count(k); ++j)
            for (const Face& f : faces_[k][j]) m(f.index, j) += f.sign;
        return m;
    }

    bool is_connected() const {
        const std::size_t n = vertex_count();
        if (n == 0) return true;
        std::vector<std::size_t> parent(n);
        for (std::size_t i = 0; i < n; ++i) parent[i] = i;
        auto find_root = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        if (simplices_.size() > 1)
            for (const auto& e : simplices_[1]) parent[find_root(e[0])] = find_root(e[1]);
        for (std::size_t v = 0; v < n; ++v)
            if (find_root(v) != find_root(0)) return false;
        return true;
    }

private:
    std::vector<std::size_t> labels_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::vector<std::vector<std::vector<Face>>> faces_;
    std::set<Simplex> maximal_;
};

/// Parsed complex file. `orient: auto` marks a manifold fixture.
struct ComplexFile {
    SimplicialComplex complex;
    bool orient_auto = false;
};

/// Format: `f v0 v1 ... vk` per maximal simplex, `#` comments, optional
/// `orient: auto` directive.
inline ComplexFile parse_complex_file(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::vector<Simplex> facets;
    bool orient = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "orient:") {
            std::string v;
            if (!(ls >> v) || v != "auto") throw ParseError("only 'orient: auto' is supported", lineno);
            orient = true;
            continue;
        }
        if (key != "f") throw ParseError("expected 'f', got '" + key + "'", lineno);
        Simplex s;
        std::string tok;
        while (ls >> tok) {
            std::size_t pos = 0;
            unsigned long long v = 0;
            try {
                if (tok.empty() || tok[0] == '-') throw std::invalid_argument("negative");
                v = std::stoull(tok, &pos);
            } catch (const std::exception&) {
                throw ParseError("bad vertex id '" + tok + "'", lineno);
            }
            if (pos != tok.size()) throw ParseError("bad vertex id '" + tok + "'", lineno);
            s.push_back(static_cast<std::size_t>(v));
        }
        if (s.empty()) throw ParseError("simplex with no vertices", lineno);
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw ParseError("DuplicateVertexInSimplex", lineno);
        facets.push_back(std::move(s));
    }
    if (facets.empty()) throw ParseError("complex has no simplices");
    return {SimplicialComplex(facets), orient};
}

inline SimplicialComplex load_complex(const std::string& text) { return parse_complex_file(text).complex; }

}  // namespace eqhom
