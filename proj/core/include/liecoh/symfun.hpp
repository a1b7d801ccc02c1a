#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "liecoh/lie_algebra.hpp"

namespace liecoh {

/// Integer partition (weakly decreasing positive parts).
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);

    int size() const;          // |lambda|
    int rows() const { return static_cast<int>(parts.size()); }
    int diagonal_rank() const; // r(lambda) = #{i : lambda_i >= i}
    bool is_self_conjugate() const;

    bool operator==(const Partition& other) const { return parts == other.parts; }
    std::string to_string() const;
};

Partition conjugate(const Partition& lambda);

/// All self-conjugate partitions with |lambda| <= max_size, enumerated via
/// diagonal-hook decompositions (distinct odd hook lengths), sorted by
/// (size, parts).
std::vector<Partition> self_conjugate_partitions(int max_size);

/// Multivariate polynomial over Q with optional total-degree truncation;
/// terms above the bound are dropped eagerly during arithmetic. Monomials
/// are kept in graded order (degree ascending, exponents lex-descending
/// within a degree), which is also the canonical print order.
class SparsePolynomial {
public:
    using Monomial = std::vector<int>;

    struct MonomialOrder {
        bool operator()(const Monomial& a, const Monomial& b) const;
    };
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit SparsePolynomial(int vars, std::optional<int> truncation = std::nullopt)
        : vars_(vars), truncation_(truncation) {}

    static SparsePolynomial constant(int vars, const Rational& c,
                                     std::optional<int> truncation = std::nullopt);
    static SparsePolynomial variable(int vars, int index,
                                     std::optional<int> truncation = std::nullopt);

    int vars() const { return vars_; }
    const std::optional<int>& truncation() const { return truncation_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& exponents, const Rational& c);
    Rational coeff(const Monomial& exponents) const;
    const TermMap& terms() const { return terms_; }

    SparsePolynomial& operator+=(const SparsePolynomial& other);
    SparsePolynomial& operator-=(const SparsePolynomial& other);
    SparsePolynomial operator*(const SparsePolynomial& other) const;
    SparsePolynomial operator+(const SparsePolynomial& other) const;
    SparsePolynomial operator-(const SparsePolynomial& other) const;
    bool operator==(const SparsePolynomial& other) const { return terms_ == other.terms_; }

    /// Canonical rendering, e.g. "1 - x1 - x2 + x1^2*x2". Variable names
    /// default to x1..xm.
    std::string to_string(const std::vector<std::string>& names = {}) const;

private:
    int vars_;
    std::optional<int> truncation_;
    TermMap terms_;
};

/// Schur polynomial s_lambda(x_1..x_m) by semistandard tableau
/// enumeration; zero when lambda has more than m rows or (with a bound)
/// |lambda| exceeds it.
SparsePolynomial schur(const Partition& lambda, int vars,
                       std::optional<int> degree_bound = std::nullopt);

struct LittlewoodResult {
    bool ok = false;
    SparsePolynomial lhs, rhs;
    std::optional<SparsePolynomial::Monomial> first_mismatch;
};

/// Truncated check of prod_i (1-x_i) prod_{i<j} (1-x_i x_j) ==
/// sum over self-conjugate lambda of (-1)^{(|lambda|+r(lambda))/2}
/// s_lambda, both sides expanded up to total degree degree_bound.
LittlewoodResult littlewood_check(int vars, int degree_bound);

struct GradedEulerReport {
    SparsePolynomial cohomology_side; // sum_k (-1)^k sum_w dim H^k_w t^w
    SparsePolynomial product_side;    // prod_w (1 - t^w)^{dim L_w}
    bool match = false;
};

/// Graded Euler characteristic of the CE complex, computed on both sides
/// independently (weight-refined Betti numbers vs. the exterior-algebra
/// product formula). Requires a weight-graded algebra.
GradedEulerReport graded_euler(const StructureConstants& sc);

} // namespace liecoh
