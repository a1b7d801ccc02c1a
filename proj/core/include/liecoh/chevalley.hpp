#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// The Chevalley-Eilenberg complex of a Lie algebra g: Lambda^k g* with
/// the differential that on generator duals is the negated transpose of
/// the bracket, (delta a)(x ^ y) = -a([x, y]), extended as a graded
/// derivation. delta^2 = 0 is asserted at construction.
///
/// Basis of Lambda^k: strictly increasing index tuples in lex order,
/// held as bitmasks over the algebra basis.
class CochainComplex {
public:
    int algebra_dim() const { return n_; }
    int degree_count() const { return n_ + 1; } // degrees 0..n
    int dim(int k) const;

    const std::vector<uint32_t>& basis(int k) const { return basis_[k]; }
    int index_of(int k, uint32_t mask) const;

    /// delta_k : Lambda^k -> Lambda^{k+1}; the top differential is the
    /// zero map with zero rows.
    const SparseMatrix& delta(int k) const { return delta_[k]; }

    bool weighted() const { return generator_weights_.has_value(); }
    const std::optional<std::vector<int>>& generator_weights() const { return generator_weights_; }
    /// Sum of member weights of a basis tuple.
    int weight(int k, int index) const;
    /// Total weight of the algebra (= weight of the top exterior class).
    int top_weight() const;

    /// Wedge product of two basis elements: coefficient (+1/-1/0) and the
    /// product index in degree ka+kb. Zero when indices overlap or the
    /// product degree exceeds the algebra dimension.
    SparseVec wedge_basis(int ka, int ia, int kb, int ib) const;
    /// Bilinear extension on whole cochains.
    SparseVec wedge(int ka, const SparseVec& a, int kb, const SparseVec& b) const;

    std::string basis_name(int k, int index) const;
    const std::vector<std::string>& generator_names() const { return generator_names_; }

    friend CochainComplex ce_complex(const StructureConstants& sc);

private:
    int n_ = 0;
    std::vector<std::vector<uint32_t>> basis_;          // per degree, lex tuple order
    std::vector<std::map<uint32_t, int>> index_;        // mask -> position
    std::vector<SparseMatrix> delta_;                   // per degree 0..n
    std::optional<std::vector<int>> generator_weights_;
    std::vector<std::string> generator_names_;
};

CochainComplex ce_complex(const StructureConstants& sc);

/// Cohomology of the complex with a deterministic splitting
/// Lambda^k = H_k + B_k + A_k:
///   B_k   image of delta_{k-1} (canonical RREF basis),
///   H_k   cocycle representatives extending B_k inside ker delta_k
///         (taken from the kernel's RREF basis in order),
///   A_k   unit vectors at the pivot columns of delta_k, so that
///         delta: A_k -> B_{k+1} is an isomorphism.
/// With a weight-graded algebra every chosen basis vector is
/// weight-homogeneous (RREF bases of graded subspaces are).
struct CohomologyData {
    std::vector<int> betti;                        // b_0..b_n
    std::vector<std::vector<SparseVec>> representatives;
    std::vector<Subspace> boundaries;              // B_k
    std::vector<std::vector<int>> complement_pivot_cols; // A_k unit indices
    std::vector<std::vector<int>> representative_weights; // empty if unweighted

    int total_dim() const;
};

CohomologyData cohomology(const CochainComplex& cx);

/// Deformation retract (i, p, h) of the CE complex onto its cohomology:
/// p i = 1, delta h + h delta = 1 - i p, h^2 = 0, h i = 0, p h = 0.
/// h inverts delta from the A-part onto boundaries and kills H and A.
struct TransferData {
    std::vector<SparseMatrix> include;  // i_k : H^k -> Lambda^k
    std::vector<SparseMatrix> project;  // p_k : Lambda^k -> H^k
    std::vector<SparseMatrix> homotopy; // h_k : Lambda^k -> Lambda^{k-1}, h_0 = 0
    std::vector<int> h_dims;
    std::vector<std::vector<int>> h_weights; // empty when unweighted
};

TransferData retract_data(const CochainComplex& cx, const CohomologyData& coh);

} // namespace liecoh
