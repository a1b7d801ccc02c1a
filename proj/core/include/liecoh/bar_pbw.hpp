#pragma once

#include <cstdint>
#include <vector>

#include "liecoh/chevalley.hpp"

namespace liecoh {

/// The weight-w component of the bar construction of the positive part of
/// the CE algebra: tensor words over exterior-degree >= 1 basis elements
/// with weight sum w, graded by total degree sum_i (n_i - 1). The
/// differential is the vertical part (CE delta in one factor) plus the
/// horizontal part (wedge of adjacent factors), with Koszul signs over
/// shifted degrees; d^2 = 0 is asserted at construction.
struct BarWeightComplex {
    struct Factor {
        int ext_degree = 0; // k of Lambda^k
        int index = 0;      // basis position within Lambda^k
        int weight = 0;
    };

    int weight = 0;
    std::vector<Factor> factors;                        // factor universe, (k, index) order
    std::vector<std::vector<std::vector<int>>> words;   // per total degree: factor-id words
    std::vector<SparseMatrix> differential;             // per degree d: B^d -> B^{d+1}

    int degree_count() const { return static_cast<int>(words.size()); }
    int dim(int degree) const;
    /// Bidegree (i, j) = (sum of exterior degrees, word length).
    std::pair<int, int> bidegree(int degree, int pos) const;
    std::vector<int> dims() const;
};

BarWeightComplex bar_weight_complex(const CochainComplex& cx, int weight);
/// Requires validated, weight-graded, nilpotent input.
BarWeightComplex bar_weight_complex(const StructureConstants& sc, int weight);

/// Graded dimensions of the symmetric algebra on weighted symbols:
/// coefficients of prod_i 1/(1 - t^{w_i}) up to max_weight.
std::vector<std::int64_t> sym_dimensions(const std::vector<int>& weights, int max_weight);

struct PBWRow {
    int weight = 0;
    std::int64_t h0 = 0;
    std::int64_t sym = 0;
    std::vector<int> higher; // dim H^d for d >= 1
    bool ok = false;         // h0 == sym and higher all zero
};

struct PBWReport {
    std::vector<PBWRow> rows; // weights 0..max_weight
    bool verdict = false;
};

/// Per weight w <= max_weight: cohomology of the bar component against
/// the symmetric-algebra count. Higher bar cohomology must vanish and
/// H^0 must match Sym weight-for-weight.
PBWReport pbw_check(const StructureConstants& sc, int max_weight);

} // namespace liecoh
