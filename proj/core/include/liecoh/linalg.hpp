#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "liecoh/rational.hpp"

namespace liecoh {

/// Sparse rational vector: entries sorted by index, zeros never stored.
class SparseVec {
public:
    using Entry = std::pair<int, Rational>;

    SparseVec() = default;
    static SparseVec unit(int index) {
        SparseVec v;
        v.entries_.emplace_back(index, Rational(1));
        return v;
    }

    bool is_zero() const { return entries_.empty(); }
    int nnz() const { return static_cast<int>(entries_.size()); }

    /// Smallest index with nonzero coefficient, -1 for the zero vector.
    int leading_index() const { return entries_.empty() ? -1 : entries_.front().first; }
    const Rational& leading_coeff() const { return entries_.front().second; }

    Rational coeff(int index) const;
    void set_coeff(int index, const Rational& value);

    /// this += c * other
    void add_scaled(const SparseVec& other, const Rational& c);
    void scale(const Rational& c);
    void negate();

    const std::vector<Entry>& entries() const { return entries_; }

    bool operator==(const SparseVec& other) const { return entries_ == other.entries_; }

private:
    std::vector<Entry> entries_;
};

SparseVec operator+(const SparseVec& a, const SparseVec& b);
SparseVec operator-(const SparseVec& a, const SparseVec& b);
SparseVec operator*(const Rational& c, const SparseVec& v);

/// Column-major sparse rational matrix.
class SparseMatrix {
public:
    SparseMatrix() : rows_(0), cols_(0) {}
    SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), cols_data_(cols) {}

    static SparseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const SparseVec& col(int j) const { return cols_data_[j]; }
    SparseVec& col(int j) { return cols_data_[j]; }
    void set_col(int j, SparseVec v) { cols_data_[j] = std::move(v); }

    Rational at(int i, int j) const { return cols_data_[j].coeff(i); }
    void set(int i, int j, const Rational& value) { cols_data_[j].set_coeff(i, value); }

    int nnz() const;
    SparseMatrix transpose() const;

    /// y = M x
    SparseVec apply(const SparseVec& x) const;
    /// (M * N), with cols(N) == this->cols
    SparseMatrix compose(const SparseMatrix& inner) const;

    bool is_zero() const;

private:
    int rows_, cols_;
    std::vector<SparseVec> cols_data_;
};

/// Incrementally maintained reduced-echelon basis of a span.
///
/// Invariants: basis vectors have strictly increasing pivot indices, pivot
/// coefficients are 1, and every pivot coordinate is zero in all other
/// basis vectors. The resulting basis is the canonical RREF of the span,
/// independent of insertion order.
class SpanBuilder {
public:
    explicit SpanBuilder(bool track_combos = false) : track_(track_combos) {}

    /// Inserts v; returns true if it enlarged the span.
    bool insert(const SparseVec& v);

    /// Fully reduces v against the basis. If combo != nullptr (tracking
    /// mode), *combo receives coefficients over insertion indices such
    /// that v == sum_i combo_i * inserted_i + residual.
    SparseVec reduce(const SparseVec& v, SparseVec* combo = nullptr) const;

    bool contains(const SparseVec& v) const { return reduce(v).is_zero(); }

    int dim() const { return static_cast<int>(rows_.size()); }
    int inserted_count() const { return inserted_; }

    /// RREF basis, sorted by pivot.
    std::vector<SparseVec> basis() const;
    std::vector<int> pivots() const;

private:
    struct Row {
        SparseVec vec;
        SparseVec combo; // expression of vec over inserted vectors
    };

    // rows_ sorted by vec.leading_index()
    std::vector<Row> rows_;
    bool track_;
    int inserted_ = 0;
};

/// Subspace of Q^ambient, held as the canonical RREF basis.
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(int ambient_dim, std::vector<SparseVec> rref_basis)
        : ambient_(ambient_dim), basis_(std::move(rref_basis)) {}

    static Subspace span(int ambient_dim, const std::vector<SparseVec>& generators);
    static Subspace zero(int ambient_dim) { return Subspace(ambient_dim, {}); }
    static Subspace full(int ambient_dim);

    int ambient_dim() const { return ambient_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<SparseVec>& basis() const { return basis_; }

    std::vector<int> pivots() const;
    bool contains(const SparseVec& v) const;
    /// v minus its component along the subspace (pivot coordinates cleared).
    SparseVec reduce(const SparseVec& v) const;

    bool operator==(const Subspace& other) const {
        return ambient_ == other.ambient_ && basis_ == other.basis_;
    }

private:
    int ambient_;
    std::vector<SparseVec> basis_;
};

/// Exact rank over Q.
int rank(const SparseMatrix& m);

/// Canonical RREF basis of { v : m v = 0 }; dim == cols - rank.
Subspace kernel_basis(const SparseMatrix& m);

/// Canonical RREF basis of the column span of m.
Subspace image_basis(const SparseMatrix& m);

/// Column indices of m whose columns are pivots under left-to-right
/// elimination; the corresponding unit vectors span a complement of ker m.
std::vector<int> pivot_columns(const SparseMatrix& m);

/// Some x with m x = b, or nullopt when b is outside the column span.
/// Deterministic: the solution is supported on pivot columns of m.
std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b);

/// Completion of `sub` to a basis of Q^ambient by unit vectors at the
/// non-pivot coordinates, plus the projection onto those representatives
/// along the subspace. project(include(x)) == x.
struct QuotientSection {
    std::vector<int> representative_indices;
    std::vector<SparseVec> representatives;
    Subspace sub;

    /// Coordinates of v modulo sub, over the representatives.
    SparseVec project(const SparseVec& v) const;
};

QuotientSection quotient_section(int ambient_dim, const Subspace& sub);

} // namespace liecoh
