#pragma once

// Group models with solvable word problem: finite (multiplication table),
// free, free abelian, and direct products of these.

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <memory>
#include <numeric>
#include <string>
#include <variant>
#include <vector>

#include "eqhom/error.hpp"
#include "eqhom/presentation.hpp"

namespace eqhom {

/// Canonical element of a GroupModel. The encoding is model specific:
/// Finite {index}; Free: signed letters (+g+1 / -(g+1)) of the reduced word;
/// FreeAbelian: exponent vector; Product: {left size, left..., right...}.
struct Element {
    std::vector<std::int64_t> code;

    friend bool operator==(const Element&, const Element&) = default;
    friend auto operator<=>(const Element&, const Element&) = default;
};

struct FiniteGroup {
    std::size_t order = 0;
    std::vector<std::vector<std::size_t>> table;  // table[a][b] = a*b, 0 is the identity
    std::vector<std::size_t> inverse;
    std::vector<std::size_t> generators;  // element index of each generator
    std::vector<std::string> generator_names;

    friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
        return a.table == b.table && a.generators == b.generators;
    }
};

struct FreeGroup {
    std::size_t rank = 0;
    friend bool operator==(const FreeGroup&, const FreeGroup&) = default;
};

struct FreeAbelianGroup {
    std::size_t rank = 0;
    friend bool operator==(const FreeAbelianGroup&, const FreeAbelianGroup&) = default;
};

class GroupModel;
using GroupModelPtr = std::shared_ptr<const GroupModel>;

struct ProductGroup {
    GroupModelPtr left;
    GroupModelPtr right;
};

class GroupModel {
public:
    using Variant = std::variant<FiniteGroup, FreeGroup, FreeAbelianGroup, ProductGroup>;

    explicit GroupModel(FiniteGroup g) : v_(std::move(g)) { validate_finite(); }
    explicit GroupModel(FreeGroup g) : v_(g) {}
    explicit GroupModel(FreeAbelianGroup g) : v_(g) {}
    explicit GroupModel(ProductGroup g) : v_(std::move(g)) {
        if (!std::get<ProductGroup>(v_).left || !std::get<ProductGroup>(v_).right)
            throw PreconditionError("product group needs two factors");
    }

    const Variant& variant() const noexcept { return v_; }
    bool is_finite() const noexcept { return std::holds_alternative<FiniteGroup>(v_); }
    const FiniteGroup& finite() const {
        if (auto f = std::get_if<FiniteGroup>(&v_)) return *f;
        throw NotFinite("group model is not finite");
    }
    std::size_t order() const { return finite().order; }

    std::string describe() const {
        struct V {
            std::string operator()(const FiniteGroup& g) const { return "finite group of order " + std::to_string(g.order); }
            std::string operator()(const FreeGroup& g) const { return "F" + std::to_string(g.rank); }
            std::string operator()(const FreeAbelianGroup& g) const { return "Z^" + std::to_string(g.rank); }
            std::string operator()(const ProductGroup& g) const {
                return g.left->describe() + " x " + g.right->describe();
            }
        };
        return std::visit(V{}, v_);
    }

    std::size_t generator_count() const {
        struct V {
            std::size_t operator()(const FiniteGroup& g) const { return g.generators.size(); }
            std::size_t operator()(const FreeGroup& g) const { return g.rank; }
            std::size_t operator()(const FreeAbelianGroup& g) const { return g.rank; }
            std::size_t operator()(const ProductGroup& g) const {
                return g.left->generator_count() + g.right->generator_count();
            }
        };
        return std::visit(V{}, v_);
    }

    /// Generator names; products suffix clashing names with _1 / _2.
    std::vector<std::string> generator_names() const {
        struct V {
            static std::vector<std::string> letters(std::size_t n) {
                std::vector<std::string> out;
                for (std::size_t i = 0; i < n; ++i)
                    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "x" + std::to_string(i));
                return out;
            }
            std::vector<std::string> operator()(const FiniteGroup& g) const { return g.generator_names; }
            std::vector<std::string> operator()(const FreeGroup& g) const { return letters(g.rank); }
            std::vector<std::string> operator()(const FreeAbelianGroup& g) const { return letters(g.rank); }
            std::vector<std::string> operator()(const ProductGroup& g) const {
                auto l = g.left->generator_names();
                auto r = g.right->generator_names();
                bool clash = false;
                for (const auto& a : l)
                    for (const auto& b : r) clash = clash || a == b;
                if (clash) {
                    for (auto& a : l) a += "_1";
                    for (auto& b : r) b += "_2";
                }
                l.insert(l.end(), r.begin(), r.end());
                return l;
            }
        };
        return std::visit(V{}, v_);
    }

    Element identity() const {
        struct V {
            Element operator()(const FiniteGroup&) const { return {{0}}; }
            Element operator()(const FreeGroup&) const { return {}; }
            Element operator()(const FreeAbelianGroup& g) const {
                return {std::vector<std::int64_t>(g.rank, 0)};
            }
            Element operator()(const ProductGroup& g) const {
                return pack(g.left->identity(), g.right->identity());
            }
        };
        return std::visit(V{}, v_);
    }

    Element generator(std::size_t i) const {
        if (i >= generator_count()) throw PreconditionError("generator index out of range");
        struct V {
            std::size_t i;
            Element operator()(const FiniteGroup& g) const { return {{static_cast<std::int64_t>(g.generators[i])}}; }
            Element operator()(const FreeGroup&) const { return {{static_cast<std::int64_t>(i + 1)}}; }
            Element operator()(const FreeAbelianGroup& g) const {
                Element e{std::vector<std::int64_t>(g.rank, 0)};
                e.code[i] = 1;
                return e;
            }
            Element operator()(const ProductGroup& g) const {
                std::size_t nl = g.left->generator_count();
                if (i < nl) return pack(g.left->generator(i), g.right->identity());
                return pack(g.left->identity(), g.right->generator(i - nl));
            }
        };
        return std::visit(V{i}, v_);
    }

    Element multiply(const Element& a, const Element& b) const {
        struct V {
            const Element& a;
            const Element& b;
            Element operator()(const FiniteGroup& g) const {
                return {{static_cast<std::int64_t>(g.table.at(idx(a)).at(idx(b)))}};
            }
            Element operator()(const FreeGroup&) const {
                std::vector<std::int64_t> w = a.code;
                for (std::int64_t l : b.code) {
                    if (!w.empty() && w.back() == -l)
                        w.pop_back();
                    else
                        w.push_back(l);
                }
                return {std::move(w)};
            }
            Element operator()(const FreeAbelianGroup&) const {
                Element e = a;
                for (std::size_t i = 0; i < e.code.size(); ++i) e.code[i] += b.code.at(i);
                return e;
            }
            Element operator()(const ProductGroup& g) const {
                auto [al, ar] = unpack(a);
                auto [bl, br] = unpack(b);
                return pack(g.left->multiply(al, bl), g.right->multiply(ar, br));
            }
        };
        return std::visit(V{a, b}, v_);
    }

    Element inverse(const Element& a) const {
        struct V {
            const Element& a;
            Element operator()(const FiniteGroup& g) const {
                return {{static_cast<std::int64_t>(g.inverse.at(idx(a)))}};
            }
            Element operator()(const FreeGroup&) const {
                std::vector<std::int64_t> w(a.code.rbegin(), a.code.rend());
                for (auto& l : w) l = -l;
                return {std::move(w)};
            }
            Element operator()(const FreeAbelianGroup&) const {
                Element e = a;
                for (auto& x : e.code) x = -x;
                return e;
            }
            Element operator()(const ProductGroup& g) const {
                auto [l, r] = unpack(a);
                return pack(g.left->inverse(l), g.right->inverse(r));
            }
        };
        return std::visit(V{a}, v_);
    }

    /// Normal form of a word over the model's generators.
    Element evaluate(const Word& w) const {
        Element e = identity();
        const std::size_t n = generator_count();
        for (const Letter& l : w) {
            if (l.generator >= n) throw PreconditionError("UnknownGenerator: index " + std::to_string(l.generator));
            Element g = generator(l.generator);
            e = multiply(e, l.inverse ? inverse(g) : g);
        }
        return e;
    }

    Element evaluate(const std::string& word) const { return evaluate(parse_word(word, generator_names())); }

    /// Canonical form of an already-encoded element (idempotent).
    Element normal_form(const Element& e) const { return multiply(identity(), e); }

    bool is_identity(const Element& e) const { return e == identity(); }

    std::string format(const Element& e) const {
        struct V {
            const GroupModel& m;
            const Element& e;
            std::string operator()(const FiniteGroup&) const { return "c" + std::to_string(idx(e)); }
            std::string operator()(const FreeGroup&) const {
                if (e.code.empty()) return "1";
                auto names = m.generator_names();
                std::string s;
                for (auto l : e.code) {
                    s += names[static_cast<std::size_t>(std::abs(l) - 1)];
                    if (l < 0) s += '\'';
                }
                return s;
            }
            std::string operator()(const FreeAbelianGroup&) const {
                std::string s = "(";
                for (std::size_t i = 0; i < e.code.size(); ++i) s += (i ? "," : "") + std::to_string(e.code[i]);
                return s + ")";
            }
            std::string operator()(const ProductGroup& g) const {
                auto [l, r] = unpack(e);
                return "<" + g.left->format(l) + "," + g.right->format(r) + ">";
            }
        };
        return std::visit(V{*this, e}, v_);
    }

    /// Element index for finite models.
    std::size_t index(const Element& e) const {
        finite();
        return idx(e);
    }
    Element element(std::size_t i) const {
        if (i >= order()) throw PreconditionError("element index out of range");
        return {{static_cast<std::int64_t>(i)}};
    }

    friend bool operator==(const GroupModel& a, const GroupModel& b) {
        if (a.v_.index() != b.v_.index()) return false;
        if (auto pa = std::get_if<ProductGroup>(&a.v_)) {
            const auto& pb = std::get<ProductGroup>(b.v_);
            return *pa->left == *pb.left && *pa->right == *pb.right;
        }
        if (auto fa = std::get_if<FiniteGroup>(&a.v_)) return *fa == std::get<FiniteGroup>(b.v_);
        if (auto fa = std::get_if<FreeGroup>(&a.v_)) return *fa == std::get<FreeGroup>(b.v_);
        return std::get<FreeAbelianGroup>(a.v_) == std::get<FreeAbelianGroup>(b.v_);
    }

private:
    static std::size_t idx(const Element& e) {
        if (e.code.size() != 1 || e.code[0] < 0) throw PreconditionError("malformed finite-group element");
        return static_cast<std::size_t>(e.code[0]);
    }
    static Element pack(const Element& l, const Element& r) {
        Element e;
        e.code.reserve(l.code.size() + r.code.size() + 1);
        e.code.push_back(static_cast<std::int64_t>(l.code.size()));
        e.code.insert(e.code.end(), l.code.begin(), l.code.end());
        e.code.insert(e.code.end(), r.code.begin(), r.code.end());
        return e;
    }
    static std::pair<Element, Element> unpack(const Element& e) {
        if (e.code.empty()) throw PreconditionError("malformed product element");
        auto n = static_cast<std::size_t>(e.code[0]);
        Element l{std::vector<std::int64_t>(e.code.begin() + 1, e.code.begin() + 1 + static_cast<std::ptrdiff_t>(n))};
        Element r{std::vector<std::int64_t>(e.code.begin() + 1 + static_cast<std::ptrdiff_t>(n), e.code.end())};
        return {std::move(l), std::move(r)};
    }

    void validate_finite() const {
        const auto& g = std::get<FiniteGroup>(v_);
        const std::size_t n = g.order;
        if (n == 0 || g.table.size() != n || g.inverse.size() != n)
            throw PreconditionError("finite group table has the wrong size");
        for (std::size_t a = 0; a < n; ++a) {
            if (g.table[a].size() != n) throw PreconditionError("finite group table has the wrong size");
            if (g.table[0][a] != a || g.table[a][0] != a) throw PreconditionError("element 0 is not the identity");
            if (g.table[a][g.inverse[a]] != 0 || g.table[g.inverse[a]][a] != 0)
                throw PreconditionError("inverse table is wrong");
            std::vector<bool> seen(n, false);
            for (std::size_t b = 0; b < n; ++b) {
                if (g.table[a][b] >= n || seen[g.table[a][b]]) throw PreconditionError("table row is not a permutation");
                seen[g.table[a][b]] = true;
            }
        }
        // Associativity: exhaustive up to order 24, a fixed stride beyond.
        const std::size_t step = n <= 24 ? 1 : n / 24 + 1;
        for (std::size_t a = 0; a < n; a += step)
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t c = 0; c < n; c += step)
                    if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
                        throw PreconditionError("multiplication table is not associative");
        if (g.generator_names.size() != g.generators.size())
            throw PreconditionError("generator names do not match generators");
        for (auto s : g.generators)
            if (s >= n) throw PreconditionError("generator outside the group");
    }

    Variant v_;
};

inline GroupModelPtr make_free(std::size_t rank) { return std::make_shared<GroupModel>(FreeGroup{rank}); }
inline GroupModelPtr make_free_abelian(std::size_t rank) {
    return std::make_shared<GroupModel>(FreeAbelianGroup{rank});
}

inline GroupModelPtr make_cyclic(std::size_t n) {
    if (n == 0) throw PreconditionError("cyclic group order must be positive");
    FiniteGroup g;
    g.order = n;
    g.table.assign(n, std::vector<std::size_t>(n));
    g.inverse.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
        g.inverse[a] = (n - a) % n;
    }
    if (n > 1) {
        g.generators = {1};
        g.generator_names = {"a"};
    }
    return std::make_shared<GroupModel>(std::move(g));
}

inline GroupModelPtr make_trivial_group() { return make_cyclic(1); }

/// Direct product. Finite x finite is flattened into a table with index
/// i*|B| + j; anything else becomes a Product model.
inline GroupModelPtr direct_product(const GroupModelPtr& a, const GroupModelPtr& b) {
    if (a->is_finite() && b->is_finite()) {
        const auto& fa = a->finite();
        const auto& fb = b->finite();
        const std::size_t na = fa.order, nb = fb.order;
        FiniteGroup g;
        g.order = na * nb;
        g.table.assign(g.order, std::vector<std::size_t>(g.order));
        g.inverse.resize(g.order);
        for (std::size_t x = 0; x < g.order; ++x) {
            g.inverse[x] = fa.inverse[x / nb] * nb + fb.inverse[x % nb];
            for (std::size_t y = 0; y < g.order; ++y)
                g.table[x][y] = fa.table[x / nb][y / nb] * nb + fb.table[x % nb][y % nb];
        }
        auto names = GroupModel(ProductGroup{a, b}).generator_names();
        for (auto s : fa.generators) g.generators.push_back(s * nb);
        for (auto s : fb.generators) g.generators.push_back(s);
        g.generator_names = names;
        return std::make_shared<GroupModel>(std::move(g));
    }
    return std::make_shared<GroupModel>(ProductGroup{a, b});
}

}  // namespace eqhom
