#pragma once

// Integer representations of finite groups: π acting on Z^rank by left
// multiplication with integer matrices.

#include <cstddef>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "eqhom/groups.hpp"
#include "eqhom/linalg.hpp"

namespace eqhom {

/// A left π-module structure on Z^rank for a finite model. Stores the matrix
/// of every element; generator images are looked up from those.
class IntRepresentation {
public:
    /// From explicit element images (index = element index). Verifies the
    /// homomorphism property on all pairs.
    IntRepresentation(GroupModelPtr group, std::size_t rank, std::vector<IntMatrix> element_images,
                      std::string label = "")
        : group_(std::move(group)), rank_(rank), images_(std::move(element_images)), label_(std::move(label)) {
        const std::size_t n = group_->order();
        if (images_.size() != n) throw ModelMismatch("representation needs one matrix per group element");
        for (const auto& m : images_)
            if (m.rows() != rank_ || m.cols() != rank_) throw PreconditionError("representation matrix has wrong size");
        const auto& table = group_->finite().table;
        if (!(images_[0] == IntMatrix::identity(rank_))) throw PreconditionError("identity does not act trivially");
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (!(images_[a] * images_[b] == images_[table[a][b]]))
                    throw PreconditionError("matrices do not define a group action");
    }

    /// From generator images; element images are propagated along the Cayley
    /// graph and then checked as above, so every relator is satisfied.
    static IntRepresentation from_generators(GroupModelPtr group, std::size_t rank,
                                             const std::vector<IntMatrix>& generator_images,
                                             std::string label = "") {
        const auto& fg = group->finite();
        if (generator_images.size() != fg.generators.size())
            throw ModelMismatch("need one matrix per generator");
        std::vector<IntMatrix> images(fg.order);
        std::vector<bool> known(fg.order, false);
        images[0] = IntMatrix::identity(rank);
        known[0] = true;
        std::vector<std::size_t> queue{0};
        for (std::size_t k = 0; k < queue.size(); ++k) {
            std::size_t g = queue[k];
            for (std::size_t s = 0; s < fg.generators.size(); ++s) {
                std::size_t h = fg.table[g][fg.generators[s]];
                if (!known[h]) {
                    images[h] = images[g] * generator_images[s];
                    known[h] = true;
                    queue.push_back(h);
                }
            }
        }
        for (bool k : known)
            if (!k) throw PreconditionError("generators do not generate the group");
        IntRepresentation rep(std::move(group), rank, std::move(images), std::move(label));
        for (std::size_t s = 0; s < fg.generators.size(); ++s)
            if (!(rep.action(fg.generators[s]) == generator_images[s]))
                throw PreconditionError("generator images are inconsistent with the group table");
        return rep;
    }

    const GroupModelPtr& group() const noexcept { return group_; }
    std::size_t rank() const noexcept { return rank_; }
    const std::string& label() const noexcept { return label_; }
    const IntMatrix& action(std::size_t element) const { return images_.at(element); }
    const IntMatrix& action(const Element& g) const { return images_.at(group_->index(g)); }
    const std::vector<IntMatrix>& element_images() const noexcept { return images_; }

    std::vector<IntMatrix> generator_images() const {
        std::vector<IntMatrix> out;
        for (auto s : group_->finite().generators) out.push_back(images_[s]);
        return out;
    }

    bool same_group(const IntRepresentation& o) const { return group_ == o.group_ || *group_ == *o.group_; }

private:
    GroupModelPtr group_;
    std::size_t rank_;
    std::vector<IntMatrix> images_;
    std::string label_;
};

inline IntRepresentation trivial_rep(const GroupModelPtr& group, std::size_t rank = 1) {
    std::vector<IntMatrix> images(group->order(), IntMatrix::identity(rank));
    return IntRepresentation(group, rank, std::move(images), rank == 1 ? "Z" : "Z^" + std::to_string(rank));
}

/// Zπ with basis e_g in element order; g acts by e_h -> e_{gh}.
inline IntRepresentation regular_rep(const GroupModelPtr& group) {
    const auto& fg = group->finite();
    const std::size_t n = fg.order;
    std::vector<IntMatrix> images;
    for (std::size_t g = 0; g < n; ++g) {
        IntMatrix m(n, n);
        for (std::size_t h = 0; h < n; ++h) m(fg.table[g][h], h) = 1;
        images.push_back(std::move(m));
    }
    return IntRepresentation(group, n, std::move(images), "Zpi");
}

/// Augmentation ideal with basis {g - 1 : g != e} in element order;
/// h(g - 1) = (hg - 1) - (h - 1).
inline IntRepresentation augmentation_ideal_rep(const GroupModelPtr& group) {
    const auto& fg = group->finite();
    const std::size_t n = fg.order;
    const std::size_t r = n - 1;
    std::vector<IntMatrix> images;
    for (std::size_t h = 0; h < n; ++h) {
        IntMatrix m(r, r);
        for (std::size_t g = 1; g < n; ++g) {
            std::size_t hg = fg.table[h][g];
            if (hg != 0) m(hg - 1, g - 1) += 1;
            if (h != 0) m(h - 1, g - 1) -= 1;
        }
        images.push_back(std::move(m));
    }
    return IntRepresentation(group, r, std::move(images), "I");
}

/// Inclusion I -> Zπ, (g - 1) -> e_g - e_1, as an |π| x (|π|-1) matrix.
inline IntMatrix augmentation_inclusion(const GroupModel& group) {
    const std::size_t n = group.order();
    IntMatrix m(n, n - 1);
    for (std::size_t g = 1; g < n; ++g) {
        m(g, g - 1) = 1;
        m(0, g - 1) = -1;
    }
    return m;
}

/// L ⊗ M with the diagonal action and lexicographic basis (i, j) -> i*rank(M)+j.
inline IntRepresentation tensor_rep(const IntRepresentation& l, const IntRepresentation& m) {
    if (!l.same_group(m)) throw ModelMismatch("tensor product of representations of different groups");
    std::vector<IntMatrix> images;
    for (std::size_t g = 0; g < l.element_images().size(); ++g) images.push_back(kron(l.action(g), m.action(g)));
    std::string label = l.label().empty() || m.label().empty() ? "" : "(" + l.label() + " (x) " + m.label() + ")";
    return IntRepresentation(l.group(), l.rank() * m.rank(), std::move(images), label);
}

/// L^{⊗k}, left-associated; L^{⊗0} is the trivial rank-1 module.
inline IntRepresentation tensor_power(const IntRepresentation& l, std::size_t k) {
    if (k == 0) return trivial_rep(l.group());
    IntRepresentation out = l;
    for (std::size_t i = 1; i < k; ++i) out = tensor_rep(out, l);
    return out;
}

/// Parses a coefficient file for a finite model with known generator names.
///
///   kind: trivial | augmentation | regular     (built-in modules)
///   power: k                                   (tensor power, default 1)
///   times-regular: yes                         (tensor with Zπ afterwards)
/// or explicit matrices:
///   rank: r
///   gen <name>: <r*r integers, row-major>
inline IntRepresentation parse_representation(const std::string& text, const GroupModelPtr& group) {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    std::string kind;
    std::size_t power = 1;
    bool times_regular = false;
    std::size_t rank = 0;
    bool have_rank = false;
    const auto names = group->generator_names();
    std::vector<IntMatrix> gens(names.size());
    std::vector<bool> have(names.size(), false);
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        if (key == "kind:") {
            if (!(ls >> kind)) throw ParseError("missing kind", lineno);
            if (kind != "trivial" && kind != "augmentation" && kind != "regular")
                throw ParseError("unknown kind '" + kind + "'", lineno);
        } else if (key == "power:") {
            if (!(ls >> power)) throw ParseError("bad power", lineno);
        } else if (key == "times-regular:") {
            std::string v;
            ls >> v;
            if (v != "yes" && v != "no") throw ParseError("times-regular expects yes or no", lineno);
            times_regular = v == "yes";
        } else if (key == "rank:") {
            if (!(ls >> rank)) throw ParseError("bad rank", lineno);
            have_rank = true;
        } else if (key == "gen") {
            std::string name;
            if (!(ls >> name) || name.empty() || name.back() != ':') throw ParseError("expected 'gen <name>:'", lineno);
            name.pop_back();
            if (!have_rank) throw ParseError("rank must precede generator matrices", lineno);
            std::size_t g = names.size();
            for (std::size_t i = 0; i < names.size(); ++i)
                if (names[i] == name) g = i;
            if (g == names.size()) throw ParseError("unknown generator '" + name + "'", lineno);
            IntMatrix m(rank, rank);
            for (std::size_t i = 0; i < rank * rank; ++i) {
                long long v;
                if (!(ls >> v)) throw ParseError("expected " + std::to_string(rank * rank) + " entries", lineno);
                m(i / rank, i % rank) = v;
            }
            gens[g] = std::move(m);
            have[g] = true;
        } else {
            throw ParseError("unknown key '" + key + "'", lineno);
        }
    }
    if (!kind.empty() && have_rank) throw ParseError("use either kind or explicit matrices, not both");
    if (kind.empty() && !have_rank) throw ParseError("coefficient file needs 'kind:' or 'rank:'");
    IntRepresentation rep = trivial_rep(group);
    if (!kind.empty()) {
        if (kind == "trivial")
            rep = trivial_rep(group);
        else if (kind == "augmentation")
            rep = tensor_power(augmentation_ideal_rep(group), power);
        else
            rep = tensor_power(regular_rep(group), power);
    } else {
        for (std::size_t g = 0; g < names.size(); ++g)
            if (!have[g]) throw ParseError("missing matrix for generator '" + names[g] + "'");
        rep = IntRepresentation::from_generators(group, rank, gens, "L");
    }
    if (times_regular) rep = tensor_rep(rep, regular_rep(group));
    return rep;
}

}  // namespace eqhom
