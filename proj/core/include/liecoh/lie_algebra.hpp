#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/linalg.hpp"

namespace liecoh {

/// A finite-dimensional Lie algebra over Q as structure constants on a
/// named basis: [e_i, e_j] = sum_k c^k_{ij} e_k, stored for i < j only
/// (antisymmetry is structural, never validated). Weights, when present,
/// are positive integers making the bracket additively graded.
struct StructureConstants {
    int dim = 0;
    std::vector<std::string> basis_names;
    std::map<std::pair<int, int>, SparseVec> brackets; // keys i < j
    std::optional<std::vector<int>> weights;

    bool weighted() const { return weights.has_value(); }

    /// [e_i, e_j] for any i, j (antisymmetric lookup; zero on diagonal).
    SparseVec bracket(int i, int j) const;
    /// Bilinear extension.
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;
};

struct ValidationFailure {
    enum class Kind { jacobi, weight };
    Kind kind;
    // jacobi: (i, j, k) is the first failing basis triple i<j<k and defect
    // the nonzero Jacobi sum. weight: bracket (i, j) has a component on
    // e_k with weight(k) != weight(i) + weight(j).
    int i = 0, j = 0, k = 0;
    SparseVec defect;

    std::string message(const StructureConstants& sc) const;
};

/// nullopt iff the Jacobi identity holds on all basis triples and, when
/// weights are present, every bracket coefficient is weight-compatible.
std::optional<ValidationFailure> validate(const StructureConstants& sc);

/// Throws input_error on validation failure; convenience for pipelines.
const StructureConstants& require_valid(const StructureConstants& sc);

/// g = g^1 >= g^2 >= ... with g^{i+1} = [g, g^i], computed as exact spans,
/// terminated at 0 or at stabilization (non-nilpotent input).
struct LowerCentralSeries {
    std::vector<Subspace> terms;

    std::vector<int> dims() const;
    bool terminates_at_zero() const;
};

LowerCentralSeries lower_central_series(const StructureConstants& sc);

struct NilpotencyInfo {
    bool nilpotent = false;
    int nil_class = 0; // smallest n with g^{n+1} = 0; 0 for the zero algebra
};

NilpotencyInfo is_nilpotent(const StructureConstants& sc);

// --- example zoo -----------------------------------------------------------

/// Heisenberg algebra of odd dimension 2k+1: [e_{2i-1}, e_{2i}] = e_{2k+1},
/// weights (1, ..., 1, 2).
StructureConstants heisenberg(int dim);

/// Filiform algebra of dim n: [e_1, e_i] = e_{i+1} for 2 <= i <= n-1,
/// weights (1, 2, ..., n). Nilpotency class n-1.
StructureConstants filiform(int n);

/// Abelian algebra, all weights 1.
StructureConstants abelian(int n);

/// sl_2: [h,e] = 2e, [h,f] = -2f, [e,f] = h. Unweighted; the negative
/// control for everything nilpotency-flavored.
StructureConstants sl2();

/// Free nilpotent algebra L^{<=n} on m generators, Lyndon basis, weights
/// by word length.
StructureConstants free_nilpotent_sc(int m, int n);

/// Dispatcher over the zoo: name in {heisenberg, filiform, abelian, sl2,
/// free_nilpotent} with the parameter counts above. Throws input_error on
/// unknown names or bad parameters. Every returned algebra validates.
StructureConstants example(const std::string& name, const std::vector<int>& params);

} // namespace liecoh
