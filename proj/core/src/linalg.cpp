#include "liecoh/linalg.hpp"

#include <algorithm>

namespace liecoh {

Rational SparseVec::coeff(int index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index)
        return it->second;
    return Rational(0);
}

void SparseVec::set_coeff(int index, const Rational& value) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                               [](const Entry& e, int i) { return e.first < i; });
    if (it != entries_.end() && it->first == index) {
        if (value == 0)
            entries_.erase(it);
        else
            it->second = value;
    } else if (value != 0) {
        entries_.insert(it, {index, value});
    }
}

void SparseVec::add_scaled(const SparseVec& other, const Rational& c) {
    if (c == 0 || other.entries_.empty())
        return;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            merged.push_back(*a++);
        } else if (a->first > b->first) {
            merged.emplace_back(b->first, c * b->second);
            ++b;
        } else {
            Rational sum = a->second + c * b->second;
            if (sum != 0)
                merged.emplace_back(a->first, sum);
            ++a;
            ++b;
        }
    }
    merged.insert(merged.end(), a, entries_.end());
    for (; b != other.entries_.end(); ++b)
        merged.emplace_back(b->first, c * b->second);
    entries_ = std::move(merged);
}

void SparseVec::scale(const Rational& c) {
    if (c == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_)
        e.second *= c;
}

void SparseVec::negate() {
    for (auto& e : entries_)
        e.second = -e.second;
}

SparseVec operator+(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.add_scaled(b, Rational(1));
    return r;
}

SparseVec operator-(const SparseVec& a, const SparseVec& b) {
    SparseVec r = a;
    r.add_scaled(b, Rational(-1));
    return r;
}

SparseVec operator*(const Rational& c, const SparseVec& v) {
    SparseVec r = v;
    r.scale(c);
    return r;
}

SparseMatrix SparseMatrix::identity(int n) {
    SparseMatrix m(n, n);
    for (int j = 0; j < n; ++j)
        m.cols_data_[j] = SparseVec::unit(j);
    return m;
}

int SparseMatrix::nnz() const {
    int total = 0;
    for (const auto& c : cols_data_)
        total += c.nnz();
    return total;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (const auto& [i, val] : cols_data_[j].entries())
            t.cols_data_[i].set_coeff(j, val);
    return t;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
    SparseVec y;
    for (const auto& [j, c] : x.entries())
        y.add_scaled(cols_data_[j], c);
    return y;
}

SparseMatrix SparseMatrix::compose(const SparseMatrix& inner) const {
    SparseMatrix out(rows_, inner.cols());
    for (int j = 0; j < inner.cols(); ++j)
        out.cols_data_[j] = apply(inner.col(j));
    return out;
}

bool SparseMatrix::is_zero() const {
    for (const auto& c : cols_data_)
        if (!c.is_zero())
            return false;
    return true;
}

// Batch-eliminate every pivot coordinate of v. Basis rows only carry
// non-pivot support besides their own pivot, so one pass suffices.
SparseVec SpanBuilder::reduce(const SparseVec& v, SparseVec* combo) const {
    if (combo)
        *combo = SparseVec();
    SparseVec r = v;
    std::vector<std::pair<int, Rational>> hits; // (row index, coeff)
    for (const auto& [idx, val] : r.entries()) {
        auto it = std::lower_bound(rows_.begin(), rows_.end(), idx,
                                   [](const Row& row, int i) { return row.vec.leading_index() < i; });
        if (it != rows_.end() && it->vec.leading_index() == idx)
            hits.emplace_back(static_cast<int>(it - rows_.begin()), val);
    }
    for (const auto& [row, c] : hits) {
        r.add_scaled(rows_[row].vec, -c);
        if (combo && track_)
            combo->add_scaled(rows_[row].combo, c);
    }
    return r;
}

bool SpanBuilder::insert(const SparseVec& v) {
    SparseVec combo;
    SparseVec r = reduce(v, track_ ? &combo : nullptr);
    int my_index = inserted_++;
    if (r.is_zero())
        return false;

    Rational lead = r.leading_coeff();
    Rational inv_lead = Rational(1) / lead;
    r.scale(inv_lead);
    SparseVec my_combo;
    if (track_) {
        // v = combo . inserted + lead * r  =>  r = (unit(me) - combo) / lead
        my_combo = SparseVec::unit(my_index);
        my_combo.add_scaled(combo, Rational(-1));
        my_combo.scale(inv_lead);
    }

    int pivot = r.leading_index();
    for (auto& row : rows_) {
        Rational c = row.vec.coeff(pivot);
        if (c != 0) {
            row.vec.add_scaled(r, -c);
            if (track_)
                row.combo.add_scaled(my_combo, -c);
        }
    }
    auto it = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                               [](const Row& row, int i) { return row.vec.leading_index() < i; });
    rows_.insert(it, Row{std::move(r), std::move(my_combo)});
    return true;
}

std::vector<SparseVec> SpanBuilder::basis() const {
    std::vector<SparseVec> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_)
        out.push_back(row.vec);
    return out;
}

std::vector<int> SpanBuilder::pivots() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& row : rows_)
        out.push_back(row.vec.leading_index());
    return out;
}

Subspace Subspace::span(int ambient_dim, const std::vector<SparseVec>& generators) {
    SpanBuilder sb;
    for (const auto& g : generators)
        sb.insert(g);
    return Subspace(ambient_dim, sb.basis());
}

Subspace Subspace::full(int ambient_dim) {
    std::vector<SparseVec> basis;
    basis.reserve(ambient_dim);
    for (int i = 0; i < ambient_dim; ++i)
        basis.push_back(SparseVec::unit(i));
    return Subspace(ambient_dim, std::move(basis));
}

std::vector<int> Subspace::pivots() const {
    std::vector<int> out;
    out.reserve(basis_.size());
    for (const auto& v : basis_)
        out.push_back(v.leading_index());
    return out;
}

SparseVec Subspace::reduce(const SparseVec& v) const {
    SparseVec r = v;
    std::vector<std::pair<int, Rational>> hits;
    for (const auto& [idx, val] : r.entries()) {
        auto it = std::lower_bound(basis_.begin(), basis_.end(), idx,
                                   [](const SparseVec& b, int i) { return b.leading_index() < i; });
        if (it != basis_.end() && it->leading_index() == idx)
            hits.emplace_back(static_cast<int>(it - basis_.begin()), val);
    }
    for (const auto& [row, c] : hits)
        r.add_scaled(basis_[row], -c);
    return r;
}

bool Subspace::contains(const SparseVec& v) const {
    return reduce(v).is_zero();
}

int rank(const SparseMatrix& m) {
    SpanBuilder sb;
    int r = 0;
    for (int j = 0; j < m.cols(); ++j)
        if (sb.insert(m.col(j)))
            ++r;
    return r;
}

Subspace kernel_basis(const SparseMatrix& m) {
    SpanBuilder sb(/*track=*/true);
    std::vector<SparseVec> kernel_gens;
    for (int j = 0; j < m.cols(); ++j) {
        SparseVec combo;
        SparseVec r = sb.reduce(m.col(j), &combo);
        if (r.is_zero()) {
            // col_j == combo . previous columns
            SparseVec k = SparseVec::unit(j);
            k.add_scaled(combo, Rational(-1));
            kernel_gens.push_back(std::move(k));
            sb.insert(m.col(j)); // keep insertion indices aligned with j
        } else {
            sb.insert(m.col(j));
        }
    }
    return Subspace::span(m.cols(), kernel_gens);
}

Subspace image_basis(const SparseMatrix& m) {
    SpanBuilder sb;
    for (int j = 0; j < m.cols(); ++j)
        sb.insert(m.col(j));
    return Subspace(m.rows(), sb.basis());
}

std::vector<int> pivot_columns(const SparseMatrix& m) {
    SpanBuilder sb;
    std::vector<int> out;
    for (int j = 0; j < m.cols(); ++j)
        if (sb.insert(m.col(j)))
            out.push_back(j);
    return out;
}

std::optional<SparseVec> solve(const SparseMatrix& m, const SparseVec& b) {
    SpanBuilder sb(/*track=*/true);
    for (int j = 0; j < m.cols(); ++j)
        sb.insert(m.col(j));
    SparseVec combo;
    SparseVec r = sb.reduce(b, &combo);
    if (!r.is_zero())
        return std::nullopt;
    return combo;
}

SparseVec QuotientSection::project(const SparseVec& v) const {
    SparseVec r = sub.reduce(v);
    // residual is supported on non-pivot coordinates == representatives
    SparseVec out;
    for (const auto& [idx, val] : r.entries()) {
        auto it = std::lower_bound(representative_indices.begin(), representative_indices.end(), idx);
        // reduce() clears every pivot coordinate, so idx must be a representative
        out.set_coeff(static_cast<int>(it - representative_indices.begin()), val);
    }
    return out;
}

QuotientSection quotient_section(int ambient_dim, const Subspace& sub) {
    QuotientSection qs;
    qs.sub = sub;
    std::vector<int> piv = sub.pivots();
    auto pit = piv.begin();
    for (int i = 0; i < ambient_dim; ++i) {
        if (pit != piv.end() && *pit == i) {
            ++pit;
            continue;
        }
        qs.representative_indices.push_back(i);
        qs.representatives.push_back(SparseVec::unit(i));
    }
    return qs;
}

} // namespace liecoh
