#pragma once

// Coset enumeration over the trivial subgroup (HLT strategy with a hard
// coset budget).

#include <cstddef>
#include <deque>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqhom/groups.hpp"
#include "eqhom/presentation.hpp"

namespace eqhom {

struct ToddCoxeterResult {
    /// Present when the enumeration closed within budget.
    std::optional<GroupModelPtr> model;
    std::size_t max_cosets = 0;
    std::size_t cosets_defined = 0;

    bool exceeded() const noexcept { return !model.has_value(); }
};

namespace detail {

class CosetTable {
public:
    CosetTable(std::size_t generators, std::size_t max_live) : cols_(2 * generators), max_live_(max_live) {
        add_row();
    }

    static std::size_t col(const Letter& l) { return 2 * l.generator + (l.inverse ? 1 : 0); }
    static std::size_t inv(std::size_t c) { return c ^ 1U; }

    bool live(std::size_t c) const { return parent_[c] == c; }
    std::size_t size() const { return table_.size(); }
    std::size_t live_count() const { return live_; }
    long get(std::size_t c, std::size_t x) const { return table_[c][x]; }

    // Returns false when the budget is exhausted.
    bool define(std::size_t c, std::size_t x) {
        if (live_ >= max_live_) return false;
        std::size_t d = add_row();
        table_[c][x] = static_cast<long>(d);
        table_[d][inv(x)] = static_cast<long>(c);
        return true;
    }

    bool scan_and_fill(std::size_t c, const Word& w) {
        const std::size_t n = w.size();
        if (n == 0) return true;
        std::size_t f = c, b = c;
        std::size_t i = 0, j = n;  // unscanned letters are w[i..j)
        for (;;) {
            while (i < j && table_[f][col(w[i])] >= 0) f = static_cast<std::size_t>(table_[f][col(w[i++])]);
            if (i == j) {
                coincidence(f, b);
                return true;
            }
            while (j > i && table_[b][inv(col(w[j - 1]))] >= 0)
                b = static_cast<std::size_t>(table_[b][inv(col(w[--j]))]);
            if (j == i) {
                coincidence(f, b);
                return true;
            }
            if (j == i + 1) {
                table_[f][col(w[i])] = static_cast<long>(b);
                table_[b][inv(col(w[i]))] = static_cast<long>(f);
                return true;
            }
            if (!define(f, col(w[i]))) return false;
        }
    }

    std::size_t rep(std::size_t c) {
        std::size_t r = c;
        while (parent_[r] != r) r = parent_[r];
        while (parent_[c] != r) {
            std::size_t next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

private:
    std::size_t add_row() {
        table_.emplace_back(cols_, -1L);
        parent_.push_back(table_.size() - 1);
        ++live_;
        return table_.size() - 1;
    }

    void merge(std::size_t a, std::size_t b, std::deque<std::size_t>& queue) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent_[b] = a;
        --live_;
        queue.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::deque<std::size_t> queue;
        merge(a, b, queue);
        while (!queue.empty()) {
            std::size_t g = queue.front();
            queue.pop_front();
            for (std::size_t x = 0; x < cols_; ++x) {
                if (table_[g][x] < 0) continue;
                auto d = static_cast<std::size_t>(table_[g][x]);
                table_[g][x] = -1;
                if (table_[d][inv(x)] == static_cast<long>(g)) table_[d][inv(x)] = -1;
                std::size_t mu = rep(g), nu = rep(d);
                if (table_[mu][x] >= 0)
                    merge(nu, static_cast<std::size_t>(table_[mu][x]), queue);
                else if (table_[nu][inv(x)] >= 0)
                    merge(mu, static_cast<std::size_t>(table_[nu][inv(x)]), queue);
                else {
                    table_[mu][x] = static_cast<long>(nu);
                    table_[nu][inv(x)] = static_cast<long>(mu);
                }
            }
        }
    }

    std::size_t cols_;
    std::size_t max_live_;
    std::size_t live_ = 0;
    std::vector<std::vector<long>> table_;
    std::vector<std::size_t> parent_;
};

}  // namespace detail

/// Enumerates the cosets of the trivial subgroup. On success the model has
/// one element per coset, numbered in breadth-first order from the
/// identity (element 0, named c0).
inline ToddCoxeterResult todd_coxeter(const GroupPresentation& pres, std::size_t max_cosets) {
    if (max_cosets < 1) throw PreconditionError("max_cosets must be at least 1");
    const std::size_t ngen = pres.generators.size();
    std::vector<Word> rels;
    for (const auto& r : pres.relators) {
        for (const Letter& l : r)
            if (l.generator >= ngen) throw PreconditionError("relator uses an undeclared generator");
        if (auto c = cyclic_reduce(r); !c.empty()) rels.push_back(std::move(c));
    }
    ToddCoxeterResult result;
    result.max_cosets = max_cosets;
    detail::CosetTable t(ngen, max_cosets);
    const std::size_t cols = 2 * ngen;
    for (std::size_t c = 0; c < t.size(); ++c) {
        if (!t.live(c)) continue;
        for (const auto& r : rels) {
            if (!t.scan_and_fill(c, r)) {
                result.cosets_defined = t.size();
                return result;
            }
            if (!t.live(c)) break;
        }
        if (!t.live(c)) continue;
        for (std::size_t x = 0; x < cols; ++x)
            if (t.get(c, x) < 0 && !t.define(c, x)) {
                result.cosets_defined = t.size();
                return result;
            }
    }
    result.cosets_defined = t.size();

    // Renumber live cosets breadth-first from coset 0.
    std::vector<long> number(t.size(), -1);
    std::vector<std::size_t> order{t.rep(0)};
    number[order[0]] = 0;
    std::vector<std::size_t> parent{0};
    std::vector<std::size_t> parent_col{0};
    for (std::size_t k = 0; k < order.size(); ++k)
        for (std::size_t x = 0; x < cols; ++x) {
            if (t.get(order[k], x) < 0) throw Error("coset enumeration left an incomplete table");
            std::size_t d = t.rep(static_cast<std::size_t>(t.get(order[k], x)));
            if (number[d] < 0) {
                number[d] = static_cast<long>(order.size());
                order.push_back(d);
                parent.push_back(k);
                parent_col.push_back(x);
            }
        }
    const std::size_t n = order.size();
    // action[i][x] = coset i acted on by letter x
    std::vector<std::vector<std::size_t>> action(n, std::vector<std::size_t>(cols));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t x = 0; x < cols; ++x)
            action[i][x] = static_cast<std::size_t>(number[t.rep(static_cast<std::size_t>(t.get(order[i], x)))]);
    // Word (as letter columns) reaching each coset from the identity.
    std::vector<std::vector<std::size_t>> word(n);
    for (std::size_t i = 1; i < n; ++i) {
        word[i] = word[parent[i]];
        word[i].push_back(parent_col[i]);
    }
    FiniteGroup g;
    g.order = n;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.inverse.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t c = i;
            for (std::size_t x : word[j]) c = action[c][x];
            g.table[i][j] = c;
            if (c == 0) g.inverse[i] = j;
        }
    for (std::size_t s = 0; s < ngen; ++s) g.generators.push_back(action[0][2 * s]);
    g.generator_names = pres.generators;
    result.model = std::make_shared<GroupModel>(std::move(g));
    return result;
}

/// Tietze-simplifies first, enumerates the smaller presentation, then
/// re-expresses the original generators. The model's generator list is the
/// original one.
inline ToddCoxeterResult todd_coxeter_simplified(const GroupPresentation& pres, std::size_t max_cosets) {
    SimplifiedPresentation simple = simplify_presentation(pres);
    ToddCoxeterResult r = todd_coxeter(simple.presentation, max_cosets);
    if (r.exceeded()) return r;
    const GroupModel& small = **r.model;
    FiniteGroup g = small.finite();
    g.generators.clear();
    for (const Word& w : simple.original_generators) g.generators.push_back(small.index(small.evaluate(w)));
    g.generator_names = pres.generators;
    auto model = std::make_shared<GroupModel>(std::move(g));
    for (const Word& rel : pres.relators)
        if (!model->is_identity(model->evaluate(rel)))
            throw PreconditionError("simplified enumeration does not satisfy the original relators");
    r.model = model;
    return r;
}

/// Checks every relator against a finite model's generator images.
inline bool satisfies_relators(const GroupModel& model, const GroupPresentation& pres) {
    if (model.generator_count() != pres.generators.size()) return false;
    for (const Word& rel : pres.relators)
        if (!model.is_identity(model.evaluate(rel))) return false;
    return true;
}

}  // namespace eqhom
