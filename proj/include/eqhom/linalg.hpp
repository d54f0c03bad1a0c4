#pragma once

// Exact integer linear algebra: dense arbitrary-precision matrices, Smith
// normal form with optional transform tracking, kernels, cokernels and
// subquotients ker(out)/im(in) with explicit coordinates.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "eqhom/error.hpp"

namespace eqhom {

using Integer = boost::multiprecision::cpp_int;
using IntVector = std::vector<Integer>;

/// Dense row-major matrix over Z. Zero rows and/or zero columns are legal.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size();
        std::size_t c = r ? rows.begin()->size() : 0;
        IntMatrix m(r, c);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != c) throw PreconditionError("ragged matrix literal");
            std::size_t j = 0;
            for (long long v : row) m(i, j++) = v;
            ++i;
        }
        return m;
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x.is_zero(); });
    }

    IntVector column(std::size_t j) const {
        IntVector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    void set_column(std::size_t j, const IntVector& v) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Columns [begin, end).
    IntMatrix columns(std::size_t begin, std::size_t end) const {
        IntMatrix m(rows_, end - begin);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
        return m;
    }

    /// Rows [begin, end).
    IntMatrix row_range(std::size_t begin, std::size_t end) const {
        IntMatrix m(end - begin, cols_);
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
        return m;
    }

    IntVector apply(const IntVector& x) const {
        if (x.size() != cols_) throw PreconditionError("matrix-vector shape mismatch");
        IntVector y(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                const Integer& a = (*this)(i, j);
                if (!a.is_zero() && !x[j].is_zero()) y[i] += a * x[j];
            }
        return y;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Integer& x = a(i, k);
                if (x.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const Integer& y = b(k, j);
                    if (!y.is_zero()) c(i, j) += x * y;
                }
            }
        return c;
    }

    friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
        return a;
    }

    friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference shape mismatch");
        for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
        return a;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        os << '[';
        for (std::size_t i = 0; i < m.rows_; ++i) {
            os << (i ? " [" : "[");
            for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? " " : "") << m(i, j);
            os << ']';
        }
        return os << ']';
    }

    // Elementary operations, used by the Smith form and by callers that need
    // to replay them.
    void swap_rows(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }
    void swap_cols(std::size_t i, std::size_t j) {
        if (i == j) return;
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
    }
    /// row_i += q * row_j
    void add_row(std::size_t i, std::size_t j, const Integer& q, std::size_t from = 0) {
        for (std::size_t c = from; c < cols_; ++c) {
            const Integer& x = (*this)(j, c);
            if (!x.is_zero()) (*this)(i, c) += q * x;
        }
    }
    /// col_i += q * col_j
    void add_col(std::size_t i, std::size_t j, const Integer& q, std::size_t from = 0) {
        for (std::size_t r = from; r < rows_; ++r) {
            const Integer& x = (*this)(r, j);
            if (!x.is_zero()) (*this)(r, i) += q * x;
        }
    }
    void negate_row(std::size_t i) {
        for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
    }
    void negate_col(std::size_t j) {
        for (std::size_t r = 0; r < rows_; ++r) (*this)(r, j) = -(*this)(r, j);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw PreconditionError("hstack row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.cols()) throw PreconditionError("vstack column mismatch");
    IntMatrix m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

/// Kronecker product; index (i*b.rows()+k, j*b.cols()+l) holds a(i,j)*b(k,l).
inline IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Integer& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

/// Non-negative residue of a modulo m > 0.
inline Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

// ---------------------------------------------------------------------------
// Finitely generated abelian groups

/// Z^free_rank + Z/t_1 + ... + Z/t_k with t_i >= 2 and t_i | t_{i+1}.
struct AbelianGroupInvariants {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;

    bool is_trivial() const noexcept { return free_rank == 0 && torsion.empty(); }
    std::size_t generator_count() const noexcept { return free_rank + torsion.size(); }

    /// Canonical rendering, e.g. "Z^1 + Z/2"; the trivial group renders as "0".
    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        if (free_rank) {
            os << "Z^" << free_rank;
            first = false;
        }
        for (const auto& t : torsion) {
            os << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        return first ? std::string("0") : os.str();
    }

    friend bool operator==(const AbelianGroupInvariants&, const AbelianGroupInvariants&) = default;
    friend std::ostream& operator<<(std::ostream& os, const AbelianGroupInvariants& g) {
        return os << g.to_string();
    }
};

// ---------------------------------------------------------------------------
// Smith normal form

/// U·A·V = S with U, V unimodular and S diagonal. invariant_factors has
/// min(rows, cols) entries: d_1 | d_2 | ... | d_r (all > 0), then zeros.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    std::vector<Integer> invariant_factors;

    std::size_t rank() const {
        return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                      [](const Integer& d) { return !d.is_zero(); }));
    }
};

/// Which transforms a Smith reduction records. The inverses are needed to
/// move between the original and the Smith bases.
struct SmithTracking {
    bool left = false;
    bool left_inverse = false;
    bool right = false;
    bool right_inverse = false;
};

struct SmithDecomposition {
    IntMatrix S;
    IntMatrix U, U_inv, V, V_inv;  // empty unless tracked
    std::vector<Integer> diagonal;  // min(rows, cols) entries
    std::size_t rank = 0;
};

namespace detail {

class SmithReducer {
public:
    SmithReducer(const IntMatrix& a, SmithTracking track) : a_(a), track_(track) {
        const std::size_t m = a.rows(), n = a.cols();
        if (track_.left) u_ = IntMatrix::identity(m);
        if (track_.left_inverse) u_inv_ = IntMatrix::identity(m);
        if (track_.right) v_ = IntMatrix::identity(n);
        if (track_.right_inverse) v_inv_ = IntMatrix::identity(n);
    }

    SmithDecomposition run() {
        const std::size_t m = a_.rows(), n = a_.cols();
        const std::size_t lim = std::min(m, n);
        std::size_t t = 0;
        for (; t < lim; ++t) {
            std::size_t pi = 0, pj = 0;
            if (!find_min_pivot(t, pi, pj)) break;
            move_pivot(t, pi, pj);
            for (;;) {
                if (!clear_row_and_column(t)) continue;
                // Row and column t are clear; enforce divisibility of the rest.
                bool divisible = true;
                const Integer& p = a_(t, t);
                for (std::size_t i = t + 1; i < m && divisible; ++i)
                    for (std::size_t j = t + 1; j < n; ++j)
                        if (!a_(i, j).is_zero() && Integer(a_(i, j) % p) != 0) {
                            row_add(t, i, Integer(1));
                            divisible = false;
                            break;
                        }
                if (divisible) break;
            }
            if (a_(t, t) < 0) row_negate(t);
        }
        SmithDecomposition out;
        out.rank = t;
        out.diagonal.assign(lim, Integer(0));
        for (std::size_t i = 0; i < t; ++i) out.diagonal[i] = a_(i, i);
        out.S = std::move(a_);
        out.U = std::move(u_);
        out.U_inv = std::move(u_inv_);
        out.V = std::move(v_);
        out.V_inv = std::move(v_inv_);
        return out;
    }

private:
    // Minimal absolute nonzero entry of the trailing block, ties broken by
    // (row, col) order.
    bool find_min_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
        bool found = false;
        Integer best;
        for (std::size_t i = t; i < a_.rows(); ++i)
            for (std::size_t j = t; j < a_.cols(); ++j) {
                const Integer& x = a_(i, j);
                if (x.is_zero()) continue;
                Integer ax = abs(x);
                if (!found || ax < best) {
                    best = std::move(ax);
                    pi = i;
                    pj = j;
                    found = true;
                    if (best == 1) return true;
                }
            }
        return found;
    }

    void move_pivot(std::size_t t, std::size_t pi, std::size_t pj) {
        row_swap(t, pi);
        col_swap(t, pj);
    }

    // Returns true when row and column t are clear apart from the pivot.
    // Otherwise moves the smallest remainder into the pivot position.
    bool clear_row_and_column(std::size_t t) {
        const std::size_t m = a_.rows(), n = a_.cols();
        for (std::size_t i = t + 1; i < m; ++i) {
            if (a_(i, t).is_zero()) continue;
            Integer q = a_(i, t) / a_(t, t);
            if (!q.is_zero()) row_add(i, t, -q, t);
        }
        for (std::size_t j = t + 1; j < n; ++j) {
            if (a_(t, j).is_zero()) continue;
            Integer q = a_(t, j) / a_(t, t);
            if (!q.is_zero()) col_add(j, t, -q, t);
        }
        bool found = false;
        Integer best;
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < m; ++i)
            if (!a_(i, t).is_zero() && (!found || abs(a_(i, t)) < best)) {
                best = abs(a_(i, t));
                bi = i;
                bj = t;
                found = true;
            }
        for (std::size_t j = t + 1; j < n; ++j)
            if (!a_(t, j).is_zero() && (!found || abs(a_(t, j)) < best)) {
                best = abs(a_(t, j));
                bi = t;
                bj = j;
                found = true;
            }
        if (!found) return true;
        row_swap(t, bi);
        col_swap(t, bj);
        return false;
    }

    void row_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        a_.swap_rows(i, j);
        if (track_.left) u_.swap_rows(i, j);
        if (track_.left_inverse) u_inv_.swap_cols(i, j);
    }
    void col_swap(std::size_t i, std::size_t j) {
        if (i == j) return;
        a_.swap_cols(i, j);
        if (track_.right) v_.swap_cols(i, j);
        if (track_.right_inverse) v_inv_.swap_rows(i, j);
    }
    // row_i += q row_j
    void row_add(std::size_t i, std::size_t j, const Integer& q, std::size_t from = 0) {
        a_.add_row(i, j, q, from);
        if (track_.left) u_.add_row(i, j, q);
        if (track_.left_inverse) u_inv_.add_col(j, i, -q);
    }
    // col_i += q col_j
    void col_add(std::size_t i, std::size_t j, const Integer& q, std::size_t from = 0) {
        a_.add_col(i, j, q, from);
        if (track_.right) v_.add_col(i, j, q);
        if (track_.right_inverse) v_inv_.add_row(j, i, -q);
    }
    void row_negate(std::size_t i) {
        a_.negate_row(i);
        if (track_.left) u_.negate_row(i);
        if (track_.left_inverse) u_inv_.negate_col(i);
    }

    IntMatrix a_;
    SmithTracking track_;
    IntMatrix u_, u_inv_, v_, v_inv_;
};

}  // namespace detail

inline SmithDecomposition smith_decomposition(const IntMatrix& a, SmithTracking track = {}) {
    return detail::SmithReducer(a, track).run();
}

inline SmithForm smith_normal_form(const IntMatrix& a) {
    auto d = smith_decomposition(a, {.left = true, .right = true});
    return SmithForm{std::move(d.U), std::move(d.S), std::move(d.V), std::move(d.diagonal)};
}

/// Invariants of Z^n / L where L is spanned by `generators` listed as the
/// nonzero diagonal of a Smith form with n rows.
inline AbelianGroupInvariants invariants_from_diagonal(std::size_t n, const std::vector<Integer>& diagonal) {
    AbelianGroupInvariants g;
    std::size_t rank = 0;
    for (const auto& d : diagonal) {
        if (d.is_zero()) continue;
        ++rank;
        if (d > 1) g.torsion.push_back(d);
    }
    g.free_rank = n - rank;
    return g;
}

/// Z^rows / column-span(A).
inline AbelianGroupInvariants cokernel_invariants(const IntMatrix& a) {
    return invariants_from_diagonal(a.rows(), smith_decomposition(a).diagonal);
}

/// Columns form a basis of the saturated kernel lattice {x : A x = 0}.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    auto d = smith_decomposition(a, {.right = true});
    return d.V.columns(d.rank, a.cols());
}

/// Collects an arbitrary list of cyclic summands (0 = Z) into invariant form.
inline AbelianGroupInvariants invariants_from_cyclic(std::size_t free_rank, const std::vector<Integer>& orders) {
    std::vector<Integer> finite;
    for (const auto& o : orders) {
        if (o.is_zero())
            ++free_rank;
        else if (o != 1)
            finite.push_back(abs(o));
    }
    IntMatrix diag(finite.size(), finite.size());
    for (std::size_t i = 0; i < finite.size(); ++i) diag(i, i) = finite[i];
    AbelianGroupInvariants g = cokernel_invariants(diag);
    g.free_rank += free_rank;
    return g;
}

/// ker(d_k) / im(d_{k+1}); throws ChainConditionViolated unless d_k d_{k+1} = 0.
inline AbelianGroupInvariants homology_of_pair(const IntMatrix& d_k, const IntMatrix& d_kplus1) {
    if (d_k.cols() != d_kplus1.rows())
        throw ChainConditionViolated("boundary shapes do not compose: " + std::to_string(d_k.cols()) + " vs " +
                                     std::to_string(d_kplus1.rows()));
    if (!(d_k * d_kplus1).is_zero()) throw ChainConditionViolated("consecutive boundaries do not compose to zero");
    const std::size_t rank_out = smith_decomposition(d_k).rank;
    AbelianGroupInvariants g = cokernel_invariants(d_kplus1);
    g.free_rank -= rank_out;
    return g;
}

/// Explicit model of the subquotient ker(out) / im(in): invariants plus a
/// coordinate map for cycles and representatives for the generators.
/// Generators are ordered free first, then torsion in divisibility order.
class SubquotientBasis {
public:
    SubquotientBasis(const IntMatrix& out, const IntMatrix& in) : ambient_(out.cols()), out_(out) {
        if (out.cols() != in.rows()) throw ChainConditionViolated("subquotient shapes do not compose");
        if (!(out * in).is_zero()) throw ChainConditionViolated("image is not contained in the kernel");
        auto ko = smith_decomposition(out, {.right = true, .right_inverse = true});
        kernel_ = ko.V.columns(ko.rank, out.cols());
        kernel_coords_ = ko.V_inv.row_range(ko.rank, out.cols());
        const IntMatrix relations = kernel_coords_ * in;
        auto rel = smith_decomposition(relations, {.left = true, .left_inverse = true});
        smith_left_ = std::move(rel.U);
        smith_left_inv_ = std::move(rel.U_inv);
        const std::size_t r = kernel_.cols();
        std::vector<std::size_t> torsion_pos;
        for (std::size_t i = 0; i < r; ++i) {
            Integer d = i < rel.diagonal.size() ? rel.diagonal[i] : Integer(0);
            if (d.is_zero())
                free_pos_.push_back(i);
            else if (d > 1)
                torsion_pos.push_back(i);
        }
        positions_ = free_pos_;
        for (std::size_t p : torsion_pos) {
            positions_.push_back(p);
            orders_.push_back(rel.diagonal[p]);
            invariants_.torsion.push_back(rel.diagonal[p]);
        }
        orders_.insert(orders_.begin(), free_pos_.size(), Integer(0));
        invariants_.free_rank = free_pos_.size();
    }

    const AbelianGroupInvariants& invariants() const noexcept { return invariants_; }
    std::size_t generator_count() const noexcept { return positions_.size(); }
    std::size_t ambient_dimension() const noexcept { return ambient_; }
    /// 0 for a free generator, otherwise its torsion order.
    const std::vector<Integer>& orders() const noexcept { return orders_; }

    bool is_cycle(const IntVector& z) const { return z.size() == ambient_ && is_zero_vector(out_.apply(z)); }

    /// Coordinates of the class of z; torsion entries reduced to [0, order).
    IntVector coordinates(const IntVector& z) const {
        if (!is_cycle(z)) throw ChainConditionViolated("vector is not in the kernel");
        IntVector y = kernel_coords_.apply(z);
        IntVector c = smith_left_.apply(y);
        IntVector out(positions_.size());
        for (std::size_t g = 0; g < positions_.size(); ++g) {
            out[g] = c[positions_[g]];
            if (!orders_[g].is_zero()) out[g] = mod_floor(out[g], orders_[g]);
        }
        return out;
    }

    /// A cycle representing generator g.
    IntVector representative(std::size_t g) const {
        return kernel_.apply(smith_left_inv_.column(positions_.at(g)));
    }

    static bool is_zero_vector(const IntVector& v) {
        return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x.is_zero(); });
    }

private:
    std::size_t ambient_;
    IntMatrix out_;
    IntMatrix kernel_;          // ambient x r
    IntMatrix kernel_coords_;   // r x ambient, left inverse on the kernel
    IntMatrix smith_left_;      // r x r
    IntMatrix smith_left_inv_;  // r x r
    std::vector<std::size_t> free_pos_;
    std::vector<std::size_t> positions_;
    std::vector<Integer> orders_;
    AbelianGroupInvariants invariants_;
};

/// Invariants of W / N for lattices N ⊆ W ⊆ Z^n given by spanning columns.
inline AbelianGroupInvariants lattice_quotient_invariants(const IntMatrix& w_gens, const IntMatrix& n_gens) {
    if (w_gens.rows() != n_gens.rows()) throw PreconditionError("lattice dimension mismatch");
    auto d = smith_decomposition(w_gens, {.left = true});
    // W has basis U^{-1} e_i d_i (i < rank); coordinates of y are (U y)_i / d_i.
    IntMatrix un = d.U * n_gens;
    IntMatrix coords(d.rank, n_gens.cols());
    for (std::size_t i = 0; i < d.rank; ++i)
        for (std::size_t j = 0; j < n_gens.cols(); ++j) {
            if (Integer(un(i, j) % d.diagonal[i]) != 0)
                throw PreconditionError("sublattice is not contained in the ambient lattice");
            coords(i, j) = un(i, j) / d.diagonal[i];
        }
    for (std::size_t i = d.rank; i < un.rows(); ++i)
        for (std::size_t j = 0; j < n_gens.cols(); ++j)
            if (!un(i, j).is_zero()) throw PreconditionError("sublattice is not contained in the ambient lattice");
    return cokernel_invariants(coords);
}

/// Whether a homomorphism between two groups presented in Smith coordinates
/// (columns of `map` are images of source generators) is an isomorphism.
/// Finitely generated abelian groups are Hopfian, so equal invariants plus
/// surjectivity suffice.
inline bool is_isomorphism(const IntMatrix& map, const std::vector<Integer>& source_orders,
                           const std::vector<Integer>& target_orders) {
    if (map.rows() != target_orders.size() || map.cols() != source_orders.size()) return false;
    if (invariants_from_cyclic(0, source_orders) != invariants_from_cyclic(0, target_orders)) return false;
    IntMatrix relations(target_orders.size(), target_orders.size());
    for (std::size_t i = 0; i < target_orders.size(); ++i) relations(i, i) = target_orders[i];
    return cokernel_invariants(hstack(map, relations)).is_trivial();
}

}  // namespace eqhom
