#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/chevalley.hpp"

namespace liecoh {

/// Minimal A-infinity structure on cohomology: m_1 = 0 and operations
/// m_k : H^{p_1} x ... x H^{p_k} -> H^{p_1+...+p_k+2-k} for 2 <= k <=
/// arity_bound, stored on basis tensors. Classes are globally indexed in
/// degree-ascending order.
///
/// Sign conventions (see docs/conventions.md): operations are computed in
/// the shifted picture b_k = s m_k (s^{-1})^{x k} where every relation is
/// sign-free and only Koszul signs over shifted degrees appear; the stored
/// m_k are recovered through the shift dictionary, so m_2 is exactly the
/// projected wedge p(i(x) ^ i(y)).
struct MinimalAInfinity {
    int max_degree = 0;  // cohomological degrees run 0..max_degree
    int arity_bound = 2;
    bool weighted = false;

    std::vector<int> class_degree;  // per class id
    std::vector<int> class_weight;  // per class id (empty if unweighted)
    std::vector<int> degree_first;  // first class id of each degree, plus end

    // ops[k] maps a k-tuple of class ids to the (nonzero) value of m_k
    std::map<int, std::map<std::vector<int>, SparseVec>> ops;

    int total_dim() const { return static_cast<int>(class_degree.size()); }
    int dim_in_degree(int d) const;
    int class_id(int degree, int index_in_degree) const;

    /// m_k on a basis tuple; zero vector when no entry is stored.
    SparseVec op_on_basis(int k, const std::vector<int>& ids) const;
    /// Multilinear extension of m_k to arbitrary H vectors.
    SparseVec op_multilinear(int k, const std::vector<SparseVec>& args) const;

    /// Exponent sign of the shift dictionary: b_k(s x_1, ..., s x_k) =
    /// (-1)^{sum_i (k-i) deg x_i} s m_k(x_1, ..., x_k).
    static int shift_sign(const std::vector<int>& degrees);
};

/// Planar rooted binary tree with ordered leaves; the index form of the
/// transfer's tree sum.
struct PlanarTree {
    int leaves = 1;
    std::shared_ptr<const PlanarTree> left, right; // null for a leaf

    bool is_leaf() const { return !left; }
};

/// All planar binary trees with k leaves (Catalan many), splits enumerated
/// left-size-ascending.
std::vector<std::shared_ptr<const PlanarTree>> planar_binary_trees(int k);

/// Single-tree transfer evaluation: leaves carry i, internal vertices the
/// wedge product, internal edges -h, the root p; same convention as the
/// summed transfer. Exposed so tests can cross-check the memoized sum.
SparseVec evaluate_tree(const CochainComplex& cx, const TransferData& td,
                        const PlanarTree& tree, const std::vector<int>& class_ids,
                        const MinimalAInfinity& basis_info);

/// Homotopy transfer: m_k as the sum over planar binary trees of
/// p (wedge, h at internal edges) i^{x k}, evaluated by recursive slice
/// decomposition with memoization. Runs the Stasheff checker up to
/// arity_bound and throws internal_error on any violation.
MinimalAInfinity transferred_operations(const CochainComplex& cx, const TransferData& td,
                                        int arity_bound);

struct StasheffViolation {
    int n = 0;                  // index of the failing identity
    std::vector<int> tensor;    // class ids of the failing basis tensor
    SparseVec defect;

    std::string message() const;
};

/// Verifies the A-infinity relations sum_{a+b=n+1} sum_r
/// b_a(1^r x b_b x 1^t) = 0 in the shifted picture, for 3 <= n <=
/// up_to_arity, on every degree-homogeneous basis tensor (weight-bounded
/// when the structure is graded — operations are weight-preserving, which
/// is verified first).
std::optional<StasheffViolation> check_stasheff(const MinimalAInfinity& ma, int up_to_arity);

/// Scans every stored operation entry for degree bookkeeping
/// (deg out = sum deg in + 2 - k) and weight preservation; throws
/// internal_error on a miss. Returns the max class weight when weighted.
void verify_op_bookkeeping(const MinimalAInfinity& ma);

/// Evaluation of m_k on all (r, k-r)-shuffle sums (Koszul signs over
/// shifted degrees). Empty report in arity k means the structure is
/// C-infinity at that arity; reported, never asserted.
struct ShuffleDefect {
    int split = 0;                 // r of the (r, k-r) shuffle
    std::vector<int> left, right;  // class ids
    SparseVec value;               // nonzero b_k of the shuffle sum
};

struct ShuffleDefectReport {
    int arity = 0;
    std::vector<ShuffleDefect> nonzero;

    bool clean() const { return nonzero.empty(); }
};

ShuffleDefectReport shuffle_defect(const MinimalAInfinity& ma, int k);

} // namespace liecoh
