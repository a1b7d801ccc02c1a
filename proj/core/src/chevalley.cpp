#include "liecoh/chevalley.hpp"

#include <bit>

#include "liecoh/errors.hpp"

namespace liecoh {

namespace {

// Sign of merging the ordered tuple of mb into ma: parity of the number
// of pairs (a, b), a in ma, b in mb, a > b.
int merge_sign(uint32_t ma, uint32_t mb) {
    int inversions = 0;
    for (uint32_t rest = mb; rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(ma >> (b + 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

void enumerate_tuples(int n, int k, uint32_t mask, int next, std::vector<uint32_t>& out) {
    if (k == 0) {
        out.push_back(mask);
        return;
    }
    for (int i = next; i <= n - k; ++i)
        enumerate_tuples(n, k - 1, mask | (1u << i), i + 1, out);
}

} // namespace

int CochainComplex::dim(int k) const {
    if (k < 0 || k > n_)
        return 0;
    return static_cast<int>(basis_[k].size());
}

int CochainComplex::index_of(int k, uint32_t mask) const {
    auto it = index_[k].find(mask);
    if (it == index_[k].end())
        throw internal_error("CochainComplex: unknown basis mask");
    return it->second;
}

int CochainComplex::weight(int k, int index) const {
    if (!generator_weights_)
        throw unweighted_input_error("CochainComplex: weight() on unweighted algebra");
    int w = 0;
    for (uint32_t rest = basis_[k][index]; rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        w += (*generator_weights_)[b];
    }
    return w;
}

int CochainComplex::top_weight() const {
    if (!generator_weights_)
        throw unweighted_input_error("CochainComplex: top_weight() on unweighted algebra");
    int w = 0;
    for (int v : *generator_weights_)
        w += v;
    return w;
}

SparseVec CochainComplex::wedge_basis(int ka, int ia, int kb, int ib) const {
    SparseVec out;
    if (ka + kb > n_)
        return out;
    uint32_t ma = basis_[ka][ia];
    uint32_t mb = basis_[kb][ib];
    if (ma & mb)
        return out;
    int sign = merge_sign(ma, mb);
    out.set_coeff(index_of(ka + kb, ma | mb), Rational(sign));
    return out;
}

SparseVec CochainComplex::wedge(int ka, const SparseVec& a, int kb, const SparseVec& b) const {
    SparseVec out;
    if (ka + kb > n_)
        return out;
    for (const auto& [ia, ca] : a.entries())
        for (const auto& [ib, cb] : b.entries()) {
            uint32_t ma = basis_[ka][ia];
            uint32_t mb = basis_[kb][ib];
            if (ma & mb)
                continue;
            Rational c = ca * cb * Rational(merge_sign(ma, mb));
            uint32_t merged = ma | mb;
            int idx = index_of(ka + kb, merged);
            out.set_coeff(idx, out.coeff(idx) + c);
        }
    return out;
}

std::string CochainComplex::basis_name(int k, int index) const {
    if (k == 0)
        return "1";
    std::string s;
    for (uint32_t rest = basis_[k][index]; rest;) {
        int b = std::countr_zero(rest);
        rest &= rest - 1;
        if (!s.empty())
            s += "^";
        s += generator_names_[b] + "*";
    }
    return s;
}

CochainComplex ce_complex(const StructureConstants& sc) {
    if (sc.dim > 31)
        throw input_error("ce_complex: algebra dimension > 31 not supported");
    CochainComplex cx;
    cx.n_ = sc.dim;
    cx.generator_weights_ = sc.weights;
    cx.generator_names_ = sc.basis_names;

    cx.basis_.resize(sc.dim + 1);
    cx.index_.resize(sc.dim + 1);
    for (int k = 0; k <= sc.dim; ++k) {
        enumerate_tuples(sc.dim, k, 0u, 0, cx.basis_[k]);
        for (size_t i = 0; i < cx.basis_[k].size(); ++i)
            cx.index_[k][cx.basis_[k][i]] = static_cast<int>(i);
    }

    // delta on generator duals: delta e_k* = - sum_{i<j} c^k_{ij} e_i* ^ e_j*
    std::vector<SparseVec> gen_delta(sc.dim);
    for (const auto& [key, vec] : sc.brackets) {
        auto [i, j] = key;
        uint32_t pair_mask = (1u << i) | (1u << j);
        int idx2 = cx.index_of(2, pair_mask);
        for (const auto& [k, c] : vec.entries())
            gen_delta[k].set_coeff(idx2, gen_delta[k].coeff(idx2) - c);
    }

    cx.delta_.resize(sc.dim + 1);
    for (int k = 0; k <= sc.dim; ++k) {
        SparseMatrix d(cx.dim(k + 1), cx.dim(k));
        if (k >= 1 && k < sc.dim) {
            for (int col = 0; col < cx.dim(k); ++col) {
                uint32_t mask = cx.basis_[k][col];
                SparseVec image;
                int pos = 0;
                for (uint32_t rest = mask; rest; ++pos) {
                    int t = std::countr_zero(rest);
                    rest &= rest - 1;
                    if (gen_delta[t].is_zero())
                        continue;
                    // Leibniz: factor t contributes (-1)^pos (delta e_t*) ^ (rest of tuple);
                    // the 2-form commutes past the leading degree-1 factors for free.
                    uint32_t others = mask & ~(1u << t);
                    Rational leibniz(pos % 2 == 0 ? 1 : -1);
                    for (const auto& [i2, c2] : gen_delta[t].entries()) {
                        uint32_t m2 = cx.basis_[2][i2];
                        if (m2 & others)
                            continue;
                        Rational c = leibniz * c2 * Rational(merge_sign(m2, others));
                        int idx = cx.index_of(k + 1, m2 | others);
                        image.set_coeff(idx, image.coeff(idx) + c);
                    }
                }
                d.set_col(col, std::move(image));
            }
        }
        cx.delta_[k] = std::move(d);
    }

    // hard assertion: any failure is a sign-convention bug, never input
    for (int k = 0; k + 1 <= sc.dim; ++k)
        for (int col = 0; col < cx.dim(k); ++col)
            if (!cx.delta_[k + 1].apply(cx.delta_[k].col(col)).is_zero())
                throw internal_error("ce_complex: delta^2 != 0 in degree " + std::to_string(k));

    return cx;
}

int CohomologyData::total_dim() const {
    int total = 0;
    for (int b : betti)
        total += b;
    return total;
}

CohomologyData cohomology(const CochainComplex& cx) {
    const int n = cx.algebra_dim();
    CohomologyData coh;
    coh.betti.resize(n + 1);
    coh.representatives.resize(n + 1);
    coh.boundaries.resize(n + 1);
    coh.complement_pivot_cols.resize(n + 1);
    coh.representative_weights.resize(n + 1);

    for (int k = 0; k <= n; ++k) {
        Subspace boundaries = k == 0 ? Subspace::zero(cx.dim(0)) : image_basis(cx.delta(k - 1));
        Subspace cocycles = kernel_basis(cx.delta(k));

        SpanBuilder sb;
        for (const SparseVec& b : boundaries.basis())
            sb.insert(b);
        for (const SparseVec& z : cocycles.basis())
            if (sb.insert(z))
                coh.representatives[k].push_back(z);

        coh.betti[k] = static_cast<int>(coh.representatives[k].size());
        coh.boundaries[k] = std::move(boundaries);
        coh.complement_pivot_cols[k] = pivot_columns(cx.delta(k));

        if (cx.weighted()) {
            for (const SparseVec& rep : coh.representatives[k]) {
                int w = cx.weight(k, rep.leading_index());
                for (const auto& [idx, c] : rep.entries()) {
                    (void)c;
                    if (cx.weight(k, idx) != w)
                        throw internal_error("cohomology: representative not weight-homogeneous");
                }
                coh.representative_weights[k].push_back(w);
            }
        }
    }
    return coh;
}

TransferData retract_data(const CochainComplex& cx, const CohomologyData& coh) {
    const int n = cx.algebra_dim();
    TransferData td;
    td.include.resize(n + 1);
    td.project.resize(n + 1);
    td.homotopy.resize(n + 1);
    td.h_dims = coh.betti;
    td.h_weights = coh.representative_weights;

    // Per degree: T_k = [reps | boundary basis | A-unit vectors] is a basis
    // of Lambda^k; coordinates in it give p (H-part) and feed h (B-part).
    std::vector<SpanBuilder> coords(n + 1);
    std::vector<int> h_count(n + 1), b_count(n + 1);
    for (int k = 0; k <= n; ++k) {
        SpanBuilder sb(/*track=*/true);
        for (const SparseVec& r : coh.representatives[k])
            sb.insert(r);
        for (const SparseVec& b : coh.boundaries[k].basis())
            sb.insert(b);
        for (int col : coh.complement_pivot_cols[k])
            sb.insert(SparseVec::unit(col));
        if (sb.dim() != cx.dim(k))
            throw internal_error("retract_data: H + B + A does not span degree " +
                                 std::to_string(k));
        h_count[k] = static_cast<int>(coh.representatives[k].size());
        b_count[k] = coh.boundaries[k].dim();
        coords[k] = std::move(sb);
    }

    for (int k = 0; k <= n; ++k) {
        SparseMatrix inc(cx.dim(k), h_count[k]);
        for (int c = 0; c < h_count[k]; ++c)
            inc.set_col(c, coh.representatives[k][c]);
        td.include[k] = std::move(inc);

        // preimages of boundary basis vectors under delta restricted to A
        std::vector<SparseVec> preimages;
        if (k >= 1 && b_count[k] > 0) {
            const auto& a_cols = coh.complement_pivot_cols[k - 1];
            SparseMatrix delta_on_a(cx.dim(k), static_cast<int>(a_cols.size()));
            for (size_t c = 0; c < a_cols.size(); ++c)
                delta_on_a.set_col(static_cast<int>(c), cx.delta(k - 1).col(a_cols[c]));
            for (const SparseVec& b : coh.boundaries[k].basis()) {
                auto x = solve(delta_on_a, b);
                if (!x)
                    throw internal_error("retract_data: boundary not hit by delta|A");
                SparseVec pre;
                for (const auto& [ci, val] : x->entries())
                    pre.set_coeff(a_cols[ci], val);
                preimages.push_back(std::move(pre));
            }
        }

        SparseMatrix proj(h_count[k], cx.dim(k));
        SparseMatrix hom(k >= 1 ? cx.dim(k - 1) : 0, cx.dim(k));
        for (int col = 0; col < cx.dim(k); ++col) {
            SparseVec combo;
            SparseVec residual = coords[k].reduce(SparseVec::unit(col), &combo);
            if (!residual.is_zero())
                throw internal_error("retract_data: coordinate solve failed");
            SparseVec pcol, hcol;
            for (const auto& [idx, c] : combo.entries()) {
                if (idx < h_count[k])
                    pcol.set_coeff(idx, c);
                else if (idx < h_count[k] + b_count[k])
                    hcol.add_scaled(preimages[idx - h_count[k]], c);
            }
            proj.set_col(col, std::move(pcol));
            if (k >= 1)
                hom.set_col(col, std::move(hcol));
        }
        td.project[k] = std::move(proj);
        td.homotopy[k] = std::move(hom);
    }
    return td;
}

} // namespace liecoh
