#pragma once

#include <map>
#include <string>
#include <vector>

#include "liecoh/transfer.hpp"

namespace liecoh {

/// Expression over m_j's and degree-1 classes witnessing a generated class.
struct GenerationExpr {
    int leaf_class = -1; // H^1 class id when a leaf
    int arity = 0;       // internal node: m_arity applied to children
    std::vector<GenerationExpr> children;

    bool is_leaf() const { return leaf_class >= 0; }
    std::string to_string() const;
};

struct GenerationCertificate {
    int degree = 0;
    GenerationExpr expr;
    SparseVec value; // exact value of expr, a vector over global class ids
};

struct GenerationDegreeRow {
    int degree = 0;
    int dim_h = 0;
    int dim_generated = 0;
    std::vector<SparseVec> cokernel; // residual basis of H^k modulo S^k
};

struct GenerationReport {
    bool one_generated = false;   // S^k = H^k wherever H^k != 0
    bool certified_exact = false; // arities beyond the bound provably contribute nothing
    int arity_bound = 0;
    std::string note;
    std::vector<GenerationDegreeRow> rows; // degrees 1..max_degree
    std::vector<GenerationCertificate> certificates;
    // weighted only: weight -> (dim generated, dim H) over positive degrees
    std::map<int, std::pair<int, int>> weight_dims;
};

/// Iterated span closure: S^1 = H^1 and S^k the span of all
/// m_j(S^{p_1} x ... x S^{p_j}) over arities j <= arity_bound and degree
/// compositions p_1+...+p_j = k+j-2, p_i >= 1, degrees ascending.
/// Certificates record one expression per independent generated vector,
/// in deterministic (arity, composition, operand) order. For weighted
/// input, exactness of the bound is certified by weight-feasibility
/// analysis of all higher-arity compositions; otherwise the verdict is
/// "generated up to the bound" unless H^1 = 0 makes it absolute.
GenerationReport span_closure(const MinimalAInfinity& ma);

/// Per-weight cross-check through the literal bar filtration: classes of
/// Bar(H^{>0}) representable in tensor length 1 must vanish in
/// cohomological degree >= 1.
struct BarFiltrationWeightRow {
    int weight = 0;
    bool vanishes = true;
    std::vector<int> offending_classes; // singletons that are not boundaries
    std::vector<int> bar_dims;          // dim of the weight component per degree
};

struct BarFiltrationReport {
    int max_weight_checked = 0;
    bool capped_by_arity = false;
    bool all_vanish = true;
    std::vector<BarFiltrationWeightRow> rows; // weights 1..max_weight_checked
};

BarFiltrationReport bar_filtration_check(const MinimalAInfinity& ma, int max_weight);

} // namespace liecoh
