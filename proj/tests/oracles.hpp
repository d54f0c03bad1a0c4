#pragma once

// Brute-force reference computations used only by the tests. None of these
// call into the library's elimination code.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "eqhom/linalg.hpp"

namespace oracle {

using eqhom::Integer;
using eqhom::IntMatrix;

inline std::string fixture(const std::string& name) {
    std::ifstream in(std::string(EQHOM_FIXTURES) + "/" + name);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

// Fraction-free (Bareiss) determinant.
inline Integer det(IntMatrix a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

inline void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

// Invariant factors from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<Integer> invariant_factors(const IntMatrix& a) {
    std::vector<Integer> out;
    Integer prev = 1;
    for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(a.rows(), k, rs);
        subsets(a.cols(), k, cs);
        Integer g = 0;
        for (const auto& r : rs)
            for (const auto& c : cs) {
                IntMatrix m(k, k);
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t j = 0; j < k; ++j) m(i, j) = a(r[i], c[j]);
                g = gcd(g, det(m));
            }
        if (g.is_zero()) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

// Rank over Q by fraction-free elimination.
inline std::size_t rational_rank(IntMatrix a) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(rank, p);
        for (std::size_t i = rank + 1; i < a.rows(); ++i) {
            if (a(i, c).is_zero()) continue;
            Integer f = a(i, c), g = a(rank, c);
            Integer q = gcd(f, g);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = a(i, j) * (g / q) - a(rank, j) * (f / q);
        }
        ++rank;
    }
    return rank;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
    return m;
}

struct Arc {
    std::size_t u, v;
    std::int64_t cap;
};

// Minimum s-t cut by enumerating all vertex bipartitions.
inline std::int64_t brute_min_cut(std::size_t n, const std::vector<Arc>& arcs, std::size_t s, std::size_t t) {
    std::int64_t best = -1;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask >> s & 1) || (mask >> t & 1)) continue;
        std::int64_t c = 0;
        for (const auto& a : arcs)
            if ((mask >> a.u & 1) && !(mask >> a.v & 1)) c += a.cap;
        if (best < 0 || c < best) best = c;
    }
    return best;
}

}  // namespace oracle
