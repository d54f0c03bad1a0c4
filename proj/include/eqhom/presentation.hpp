#pragma once

// Words, group presentations, the text presentation format, and Tietze
// elimination of redundant generators.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "eqhom/error.hpp"

namespace eqhom {

struct Letter {
    std::size_t generator = 0;
    bool inverse = false;

    Letter inverted() const { return {generator, !inverse}; }
    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse_word(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverted());
    return r;
}

inline Word free_reduce(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (const Letter& l : w) {
        if (!r.empty() && r.back() == l.inverted())
            r.pop_back();
        else
            r.push_back(l);
    }
    return r;
}

inline Word cyclic_reduce(Word w) {
    w = free_reduce(w);
    std::size_t b = 0, e = w.size();
    while (e - b >= 2 && w[b] == w[e - 1].inverted()) {
        ++b;
        --e;
    }
    return Word(w.begin() + static_cast<std::ptrdiff_t>(b), w.begin() + static_cast<std::ptrdiff_t>(e));
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t find_generator(const std::string& name) const {
        auto it = std::find(generators.begin(), generators.end(), name);
        if (it == generators.end()) throw PreconditionError("unknown generator '" + name + "'");
        return static_cast<std::size_t>(it - generators.begin());
    }
};

/// Parses a word such as "abab" or "ab'a'b" by longest match against the
/// generator names; a trailing apostrophe marks an inverse.
inline Word parse_word(const std::string& text, const std::vector<std::string>& names, std::size_t line = 0) {
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t best = 0, best_len = 0;
        for (std::size_t g = 0; g < names.size(); ++g) {
            const auto& n = names[g];
            if (n.size() > best_len && text.compare(pos, n.size(), n) == 0) {
                best = g;
                best_len = n.size();
            }
        }
        if (best_len == 0) throw ParseError("unknown generator in word '" + text + "'", line);
        pos += best_len;
        bool inv = false;
        if (pos < text.size() && text[pos] == '\'') {
            inv = true;
            ++pos;
        }
        w.push_back({best, inv});
    }
    return w;
}

inline std::string format_word(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string s;
    for (const Letter& l : w) {
        s += names.at(l.generator);
        if (l.inverse) s += '\'';
    }
    return s;
}

/// Text format: `gens: a b`, `rels: aa bbb abab`, `#` comments.
inline GroupPresentation parse_presentation(const std::string& text) {
    GroupPresentation p;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    bool have_gens = false;
    std::vector<std::string> pending_rels;
    std::vector<std::size_t> pending_lines;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string tok;
        if (key == "gens:") {
            if (have_gens) throw ParseError("duplicate gens line", lineno);
            have_gens = true;
            while (ls >> tok) {
                if (tok.find('\'') != std::string::npos) throw ParseError("generator names cannot contain '", lineno);
                if (std::find(p.generators.begin(), p.generators.end(), tok) != p.generators.end())
                    throw ParseError("duplicate generator '" + tok + "'", lineno);
                p.generators.push_back(tok);
            }
        } else if (key == "rels:") {
            while (ls >> tok) {
                pending_rels.push_back(tok);
                pending_lines.push_back(lineno);
            }
        } else {
            throw ParseError("expected 'gens:' or 'rels:', got '" + key + "'", lineno);
        }
    }
    if (!have_gens) throw ParseError("missing gens line");
    for (std::size_t i = 0; i < pending_rels.size(); ++i)
        p.relators.push_back(free_reduce(parse_word(pending_rels[i], p.generators, pending_lines[i])));
    return p;
}

inline std::string format_presentation(const GroupPresentation& p) {
    std::string s = "gens:";
    for (const auto& g : p.generators) s += " " + g;
    s += "\nrels:";
    for (const auto& r : p.relators) s += " " + format_word(r, p.generators);
    return s + "\n";
}

/// Result of eliminating generators: a smaller presentation of the same
/// group, and each original generator written as a word in the new ones.
struct SimplifiedPresentation {
    GroupPresentation presentation;
    std::vector<Word> original_generators;
};

/// Repeatedly solves the shortest relator in which some generator occurs
/// exactly once (up to `max_length` letters) and substitutes it away.
inline SimplifiedPresentation simplify_presentation(const GroupPresentation& pres, std::size_t max_length = 8) {
    const std::size_t n = pres.generators.size();
    std::vector<Word> subst(n);
    std::vector<bool> alive(n, true);
    for (std::size_t g = 0; g < n; ++g) subst[g] = {Letter{g, false}};
    std::vector<Word> rels;
    for (const auto& r : pres.relators)
        if (auto c = cyclic_reduce(r); !c.empty()) rels.push_back(std::move(c));

    auto substitute = [](const Word& w, std::size_t g, const Word& value) {
        Word out;
        const Word inv = inverse_word(value);
        for (const Letter& l : w) {
            if (l.generator == g)
                out.insert(out.end(), l.inverse ? inv.begin() : value.begin(), l.inverse ? inv.end() : value.end());
            else
                out.push_back(l);
        }
        return free_reduce(out);
    };

    for (;;) {
        std::size_t best_rel = rels.size(), best_gen = 0, best_pos = 0;
        for (std::size_t r = 0; r < rels.size(); ++r) {
            const Word& w = rels[r];
            if (w.size() > max_length) continue;
            if (best_rel < rels.size() && w.size() >= rels[best_rel].size()) continue;
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::size_t g = w[i].generator;
                auto count = std::count_if(w.begin(), w.end(), [g](const Letter& l) { return l.generator == g; });
                if (count == 1) {
                    best_rel = r;
                    best_gen = g;
                    best_pos = i;
                    break;
                }
            }
        }
        if (best_rel == rels.size()) break;
        // Rotate so that the generator comes first: x^e s = 1.
        Word w = rels[best_rel];
        std::rotate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best_pos), w.end());
        const bool inv = w.front().inverse;
        Word rest(w.begin() + 1, w.end());
        Word value = inv ? rest : inverse_word(rest);
        rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(best_rel));
        alive[best_gen] = false;
        for (auto& r : rels) r = cyclic_reduce(substitute(r, best_gen, value));
        rels.erase(std::remove_if(rels.begin(), rels.end(), [](const Word& r) { return r.empty(); }), rels.end());
        for (auto& s : subst) s = substitute(s, best_gen, value);
    }

    // Renumber surviving generators.
    std::vector<std::size_t> new_index(n, n);
    SimplifiedPresentation out;
    for (std::size_t g = 0; g < n; ++g)
        if (alive[g]) {
            new_index[g] = out.presentation.generators.size();
            out.presentation.generators.push_back(pres.generators[g]);
        }
    auto renumber = [&](const Word& w) {
        Word r;
        for (const Letter& l : w) r.push_back({new_index[l.generator], l.inverse});
        return r;
    };
    std::sort(rels.begin(), rels.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    for (const auto& r : rels) out.presentation.relators.push_back(renumber(r));
    for (const auto& s : subst) out.original_generators.push_back(renumber(s));
    return out;
}

}  // namespace eqhom
