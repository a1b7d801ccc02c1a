#include "liecoh/transfer.hpp"

#include <algorithm>

#include "liecoh/errors.hpp"

namespace liecoh {

int MinimalAInfinity::dim_in_degree(int d) const {
    if (d < 0 || d > max_degree)
        return 0;
    return degree_first[d + 1] - degree_first[d];
}

int MinimalAInfinity::class_id(int degree, int index_in_degree) const {
    return degree_first[degree] + index_in_degree;
}

SparseVec MinimalAInfinity::op_on_basis(int k, const std::vector<int>& ids) const {
    auto kit = ops.find(k);
    if (kit == ops.end())
        return {};
    auto it = kit->second.find(ids);
    return it == kit->second.end() ? SparseVec() : it->second;
}

SparseVec MinimalAInfinity::op_multilinear(int k, const std::vector<SparseVec>& args) const {
    SparseVec out;
    if (static_cast<int>(args.size()) != k)
        throw internal_error("op_multilinear: arity mismatch");
    std::vector<int> ids(k);
    Rational coeff;
    std::function<void(int, const Rational&)> rec = [&](int pos, const Rational& c) {
        if (pos == k) {
            out.add_scaled(op_on_basis(k, ids), c);
            return;
        }
        for (const auto& [id, v] : args[pos].entries()) {
            ids[pos] = id;
            rec(pos + 1, c * v);
        }
    };
    rec(0, Rational(1));
    return out;
}

int MinimalAInfinity::shift_sign(const std::vector<int>& degrees) {
    int e = 0;
    const int k = static_cast<int>(degrees.size());
    for (int i = 0; i < k; ++i)
        e += (k - 1 - i) * degrees[i];
    return e % 2 == 0 ? 1 : -1;
}

std::vector<std::shared_ptr<const PlanarTree>> planar_binary_trees(int k) {
    if (k < 1)
        return {};
    if (k == 1) {
        auto leaf = std::make_shared<PlanarTree>();
        leaf->leaves = 1;
        return {leaf};
    }
    std::vector<std::shared_ptr<const PlanarTree>> out;
    for (int ls = 1; ls <= k - 1; ++ls)
        for (const auto& l : planar_binary_trees(ls))
            for (const auto& r : planar_binary_trees(k - ls)) {
                auto node = std::make_shared<PlanarTree>();
                node->leaves = k;
                node->left = l;
                node->right = r;
                out.push_back(node);
            }
    return out;
}

namespace {

struct Slice {
    SparseVec vec;
    int degree = 0;
};

// i at the leaf, (-1)^{deg left} wedge at each vertex, -h on internal edges.
Slice tree_lambda(const CochainComplex& cx, const TransferData& td, const PlanarTree& tree,
                  const std::vector<int>& degrees, const std::vector<int>& in_degree_index,
                  int& cursor) {
    if (tree.is_leaf()) {
        int pos = cursor++;
        Slice s;
        s.degree = degrees[pos];
        s.vec = td.include[s.degree].col(in_degree_index[pos]);
        return s;
    }
    Slice l = tree_lambda(cx, td, *tree.left, degrees, in_degree_index, cursor);
    if (!tree.left->is_leaf()) { // internal edge: apply -h
        SparseVec hv = td.homotopy[l.degree].apply(l.vec);
        hv.negate();
        l.vec = std::move(hv);
        l.degree -= 1;
    }
    Slice r = tree_lambda(cx, td, *tree.right, degrees, in_degree_index, cursor);
    if (!tree.right->is_leaf()) {
        SparseVec hv = td.homotopy[r.degree].apply(r.vec);
        hv.negate();
        r.vec = std::move(hv);
        r.degree -= 1;
    }
    Slice out;
    out.degree = l.degree + r.degree;
    if (l.vec.is_zero() || r.vec.is_zero() || out.degree > cx.algebra_dim() || l.degree < 0 ||
        r.degree < 0)
        return out;
    out.vec = cx.wedge(l.degree, l.vec, r.degree, r.vec);
    if (l.degree % 2 != 0)
        out.vec.negate();
    return out;
}

} // namespace

SparseVec evaluate_tree(const CochainComplex& cx, const TransferData& td, const PlanarTree& tree,
                        const std::vector<int>& class_ids, const MinimalAInfinity& basis_info) {
    std::vector<int> degrees, in_degree_index;
    for (int id : class_ids) {
        degrees.push_back(basis_info.class_degree[id]);
        in_degree_index.push_back(id - basis_info.degree_first[basis_info.class_degree[id]]);
    }
    int cursor = 0;
    Slice lam = tree_lambda(cx, td, tree, degrees, in_degree_index, cursor);
    if (lam.vec.is_zero() || lam.degree < 0 || lam.degree > cx.algebra_dim())
        return {};
    SparseVec m = td.project[lam.degree].apply(lam.vec);
    if (MinimalAInfinity::shift_sign(degrees) < 0)
        m.negate();
    // re-index into global class ids
    SparseVec out;
    for (const auto& [idx, c] : m.entries())
        out.set_coeff(basis_info.degree_first[lam.degree] + idx, c);
    return out;
}

namespace {

// memoized transfer evaluation on one basis tensor
class TupleEvaluator {
public:
    TupleEvaluator(const CochainComplex& cx, const TransferData& td,
                   const std::vector<int>& degrees, const std::vector<int>& in_degree_index)
        : cx_(cx), td_(td), degrees_(degrees), idx_(in_degree_index),
          k_(static_cast<int>(degrees.size())) {
        g_.assign(k_, std::vector<Slice>(k_));
        for (int l = 0; l < k_; ++l) {
            g_[l][l].degree = degrees_[l];
            g_[l][l].vec = td_.include[degrees_[l]].col(idx_[l]);
        }
        for (int len = 2; len <= k_; ++len) {
            for (int l = 0; l + len - 1 < k_; ++l) {
                int r = l + len - 1;
                Slice lam = lambda(l, r);
                Slice& g = g_[l][r];
                g.degree = lam.degree - 1;
                if (!lam.vec.is_zero() && lam.degree >= 0) {
                    g.vec = td_.homotopy[lam.degree].apply(lam.vec);
                    g.vec.negate();
                }
            }
        }
    }

    // sum over splits of (-1)^{deg left} (left ^ right); the root operation
    // before projecting
    Slice lambda(int l, int r) const {
        Slice out;
        int total_deg = 0;
        for (int i = l; i <= r; ++i)
            total_deg += degrees_[i];
        out.degree = total_deg + 2 - (r - l + 1);
        if (out.degree < 0 || out.degree > cx_.algebra_dim())
            return out;
        for (int s = l; s < r; ++s) {
            const Slice& a = g_[l][s];
            const Slice& b = g_[s + 1][r];
            if (a.vec.is_zero() || b.vec.is_zero() || a.degree < 0 || b.degree < 0 ||
                a.degree + b.degree > cx_.algebra_dim())
                continue;
            SparseVec w = cx_.wedge(a.degree, a.vec, b.degree, b.vec);
            if (a.degree % 2 != 0)
                w.negate();
            out.vec.add_scaled(w, Rational(1));
        }
        return out;
    }

private:
    const CochainComplex& cx_;
    const TransferData& td_;
    const std::vector<int>& degrees_;
    const std::vector<int>& idx_;
    int k_;
    std::vector<std::vector<Slice>> g_;
};

} // namespace

MinimalAInfinity transferred_operations(const CochainComplex& cx, const TransferData& td,
                                        int arity_bound) {
    if (arity_bound < 2)
        throw input_error("transferred_operations: arity bound must be >= 2");
    MinimalAInfinity ma;
    ma.max_degree = cx.algebra_dim();
    ma.arity_bound = arity_bound;
    ma.weighted = cx.weighted();

    ma.degree_first.push_back(0);
    for (int d = 0; d <= ma.max_degree; ++d) {
        for (int c = 0; c < td.h_dims[d]; ++c) {
            ma.class_degree.push_back(d);
            if (ma.weighted)
                ma.class_weight.push_back(td.h_weights[d][c]);
        }
        ma.degree_first.push_back(static_cast<int>(ma.class_degree.size()));
    }

    const int total = ma.total_dim();
    const int n = ma.max_degree;
    const int top_weight = ma.weighted ? cx.top_weight() : 0;

    for (int k = 2; k <= arity_bound; ++k) {
        std::map<std::vector<int>, SparseVec> table;
        std::vector<int> tuple(k);
        std::function<void(int, int, int)> rec = [&](int pos, int deg_sum, int weight_sum) {
            if (deg_sum > n + k - 2)
                return; // out-degree can only grow past the top
            if (ma.weighted && weight_sum > top_weight)
                return; // operations preserve weight; target component is zero
            if (pos == k) {
                int out_deg = deg_sum + 2 - k;
                if (out_deg < 0 || out_deg > n || td.h_dims[out_deg] == 0)
                    return;
                std::vector<int> degrees(k), idx(k);
                for (int i = 0; i < k; ++i) {
                    degrees[i] = ma.class_degree[tuple[i]];
                    idx[i] = tuple[i] - ma.degree_first[degrees[i]];
                }
                TupleEvaluator ev(cx, td, degrees, idx);
                Slice lam = ev.lambda(0, k - 1);
                if (lam.vec.is_zero())
                    return;
                SparseVec m = td.project[lam.degree].apply(lam.vec);
                if (m.is_zero())
                    return;
                if (MinimalAInfinity::shift_sign(degrees) < 0)
                    m.negate();
                SparseVec out;
                for (const auto& [i, c] : m.entries())
                    out.set_coeff(ma.degree_first[lam.degree] + i, c);
                table[tuple] = std::move(out);
                return;
            }
            for (int c = 0; c < total; ++c) {
                tuple[pos] = c;
                rec(pos + 1, deg_sum + ma.class_degree[c],
                    weight_sum + (ma.weighted ? ma.class_weight[c] : 0));
            }
        };
        rec(0, 0, 0);
        ma.ops[k] = std::move(table);
    }

    verify_op_bookkeeping(ma);
    if (auto violation = check_stasheff(ma, arity_bound))
        throw internal_error("transferred_operations: " + violation->message());
    return ma;
}

void verify_op_bookkeeping(const MinimalAInfinity& ma) {
    for (const auto& [k, table] : ma.ops) {
        for (const auto& [tuple, value] : table) {
            int deg_sum = 0, weight_sum = 0;
            for (int id : tuple) {
                deg_sum += ma.class_degree[id];
                if (ma.weighted)
                    weight_sum += ma.class_weight[id];
            }
            for (const auto& [out_id, c] : value.entries()) {
                (void)c;
                if (ma.class_degree[out_id] != deg_sum + 2 - k)
                    throw internal_error("m_" + std::to_string(k) +
                                         " violates degree bookkeeping");
                if (ma.weighted && ma.class_weight[out_id] != weight_sum)
                    throw internal_error("m_" + std::to_string(k) +
                                         " violates weight preservation");
            }
        }
    }
}

std::string StasheffViolation::message() const {
    std::string s = "Stasheff identity fails at n=" + std::to_string(n) + " on tensor (";
    for (size_t i = 0; i < tensor.size(); ++i)
        s += (i ? "," : "") + std::to_string(tensor[i]);
    return s + ")";
}

namespace {

// shifted-picture b_k on a basis tuple, as a pair (H vector, out degree)
SparseVec shifted_op(const MinimalAInfinity& ma, int k, const std::vector<int>& ids) {
    SparseVec v = ma.op_on_basis(k, ids);
    if (v.is_zero())
        return v;
    std::vector<int> degrees;
    degrees.reserve(ids.size());
    for (int id : ids)
        degrees.push_back(ma.class_degree[id]);
    if (MinimalAInfinity::shift_sign(degrees) < 0)
        v.negate();
    return v;
}

} // namespace

std::optional<StasheffViolation> check_stasheff(const MinimalAInfinity& ma, int up_to_arity) {
    if (up_to_arity > ma.arity_bound)
        throw input_error("check_stasheff: up_to_arity exceeds stored arity bound");
    verify_op_bookkeeping(ma);

    const int total = ma.total_dim();
    const int n_max = ma.max_degree;
    int top_weight = 0;
    if (ma.weighted)
        for (int w : ma.class_weight)
            top_weight = std::max(top_weight, w);

    for (int n = 3; n <= up_to_arity; ++n) {
        std::vector<int> tuple(n);
        std::optional<StasheffViolation> found;
        std::function<void(int, int, int)> rec = [&](int pos, int deg_sum, int weight_sum) {
            if (found)
                return;
            // any composite lands in degree deg_sum + 3 - n
            if (deg_sum > n_max + n - 3)
                return;
            if (ma.weighted && weight_sum > top_weight)
                return;
            if (pos < n) {
                for (int c = 0; c < total; ++c) {
                    tuple[pos] = c;
                    rec(pos + 1, deg_sum + ma.class_degree[c],
                        weight_sum + (ma.weighted ? ma.class_weight[c] : 0));
                }
                return;
            }
            SparseVec acc;
            for (int b = 2; b <= n - 1; ++b) {
                int a = n - b + 1;
                for (int r = 0; r + b <= n; ++r) {
                    // Koszul sign of sliding b_b (odd) past the first r inputs
                    int shifted_prefix = 0;
                    for (int i = 0; i < r; ++i)
                        shifted_prefix += ma.class_degree[tuple[i]] - 1;
                    std::vector<int> inner(tuple.begin() + r, tuple.begin() + r + b);
                    SparseVec mid = shifted_op(ma, b, inner);
                    if (mid.is_zero())
                        continue;
                    std::vector<int> outer(a);
                    for (int i = 0; i < r; ++i)
                        outer[i] = tuple[i];
                    for (int i = r + b; i < n; ++i)
                        outer[a - (n - i)] = tuple[i];
                    for (const auto& [mid_id, mc] : mid.entries()) {
                        outer[r] = mid_id;
                        SparseVec term = shifted_op(ma, a, outer);
                        Rational c = mc;
                        if (shifted_prefix % 2 != 0)
                            c = -c;
                        acc.add_scaled(term, c);
                    }
                }
            }
            if (!acc.is_zero()) {
                StasheffViolation v;
                v.n = n;
                v.tensor = tuple;
                v.defect = std::move(acc);
                found = std::move(v);
            }
        };
        rec(0, 0, 0);
        if (found)
            return found;
    }
    return std::nullopt;
}

ShuffleDefectReport shuffle_defect(const MinimalAInfinity& ma, int k) {
    if (k < 2 || k > ma.arity_bound)
        throw input_error("shuffle_defect: arity outside stored range");
    ShuffleDefectReport report;
    report.arity = k;

    const int total = ma.total_dim();
    const int n_max = ma.max_degree;
    int top_weight = 0;
    if (ma.weighted)
        for (int w : ma.class_weight)
            top_weight = std::max(top_weight, w);

    std::vector<int> tuple(k);
    for (int r = 1; r <= k - 1; ++r) {
        std::function<void(int, int, int)> rec = [&](int pos, int deg_sum, int weight_sum) {
            if (deg_sum > n_max + k - 2)
                return;
            if (ma.weighted && weight_sum > top_weight)
                return;
            if (pos < k) {
                for (int c = 0; c < total; ++c) {
                    tuple[pos] = c;
                    rec(pos + 1, deg_sum + ma.class_degree[c],
                        weight_sum + (ma.weighted ? ma.class_weight[c] : 0));
                }
                return;
            }
            std::vector<int> left(tuple.begin(), tuple.begin() + r);
            std::vector<int> right(tuple.begin() + r, tuple.end());
            // sum of b_k over all (r, k-r)-shuffles with graded Koszul signs
            SparseVec acc;
            std::vector<int> interleaved;
            interleaved.reserve(k);
            std::function<void(size_t, size_t, int)> shuffles = [&](size_t li, size_t ri,
                                                                    int sign) {
                if (li == left.size() && ri == right.size()) {
                    SparseVec term = shifted_op(ma, k, interleaved);
                    acc.add_scaled(term, Rational(sign));
                    return;
                }
                if (li < left.size()) {
                    interleaved.push_back(left[li]);
                    shuffles(li + 1, ri, sign);
                    interleaved.pop_back();
                }
                if (ri < right.size()) {
                    int cross = 0;
                    for (size_t i = li; i < left.size(); ++i)
                        cross += ma.class_degree[left[i]] - 1;
                    int s = sign;
                    if ((cross * (ma.class_degree[right[ri]] - 1)) % 2 != 0)
                        s = -s;
                    interleaved.push_back(right[ri]);
                    shuffles(li, ri + 1, s);
                    interleaved.pop_back();
                }
            };
            shuffles(0, 0, 1);
            if (!acc.is_zero()) {
                ShuffleDefect d;
                d.split = r;
                d.left = left;
                d.right = right;
                d.value = std::move(acc);
                report.nonzero.push_back(std::move(d));
            }
        };
        rec(0, 0, 0);
    }
    return report;
}

} // namespace liecoh
