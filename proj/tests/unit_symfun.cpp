#include "doctest.h"

#include <algorithm>
#include <functional>

#include "liecoh/errors.hpp"
#include "liecoh/symfun.hpp"

using namespace liecoh;

namespace {

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(acc);
            return;
        }
        for (int p = std::min(max_part, remaining); p >= 1; --p) {
            acc.push_back(p);
            rec(remaining - p, p);
            acc.pop_back();
        }
    };
    rec(n, n);
    return out;
}

// determinant of (x_i^{e_j}) by permutation expansion (m <= 3 here)
SparsePolynomial alternant(const std::vector<int>& exponents, int m) {
    SparsePolynomial out(m);
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i)
        perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        SparsePolynomial::Monomial mono(m, 0);
        for (int i = 0; i < m; ++i)
            mono[i] = exponents[perm[i]];
        out.add_term(mono, Rational(sign));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// exact division by (x_a - x_b): synthetic division in x_a at "root" x_b
SparsePolynomial divide_by_difference(const SparsePolynomial& p, int a, int b) {
    int max_deg = 0;
    for (const auto& [mono, c] : p.terms()) {
        (void)c;
        max_deg = std::max(max_deg, mono[a]);
    }
    std::vector<SparsePolynomial> coeffs(max_deg + 1, SparsePolynomial(p.vars()));
    for (const auto& [mono, c] : p.terms()) {
        auto rest = mono;
        int e = rest[a];
        rest[a] = 0;
        coeffs[e].add_term(rest, c);
    }
    SparsePolynomial xb = SparsePolynomial::variable(p.vars(), b);
    std::vector<SparsePolynomial> quotient(std::max(max_deg, 1), SparsePolynomial(p.vars()));
    SparsePolynomial carry(p.vars());
    for (int e = max_deg; e >= 1; --e) {
        quotient[e - 1] = coeffs[e] + carry;
        carry = quotient[e - 1] * xb;
    }
    SparsePolynomial remainder = coeffs[0] + carry;
    REQUIRE(remainder.is_zero());
    SparsePolynomial out(p.vars());
    for (int e = 0; e < static_cast<int>(quotient.size()); ++e)
        for (const auto& [mono, c] : quotient[e].terms()) {
            auto full = mono;
            full[a] = e;
            out.add_term(full, c);
        }
    return out;
}

SparsePolynomial bialternant_schur(const Partition& lambda, int m) {
    std::vector<int> exps(m, 0);
    for (int j = 0; j < m; ++j) {
        int part = j < lambda.rows() ? lambda.parts[j] : 0;
        exps[j] = part + m - 1 - j;
    }
    SparsePolynomial num = alternant(exps, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            num = divide_by_difference(num, i, j);
    return num;
}

} // namespace

TEST_CASE("conjugate: pinned examples and involutivity") {
    CHECK(conjugate(Partition({2, 1})).parts == std::vector<int>{2, 1});
    CHECK(conjugate(Partition({3, 1})).parts == std::vector<int>{2, 1, 1});
    CHECK(conjugate(Partition()).parts.empty());

    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : all_partitions(n))
            CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("self-conjugate enumeration matches the transpose filter") {
    std::vector<Partition> enumerated = self_conjugate_partitions(12);
    std::vector<Partition> filtered;
    filtered.emplace_back();
    for (int n = 1; n <= 12; ++n)
        for (const Partition& p : all_partitions(n))
            if (p.is_self_conjugate())
                filtered.push_back(p);
    std::sort(filtered.begin(), filtered.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.parts < b.parts;
    });
    REQUIRE(enumerated.size() == filtered.size());
    for (size_t i = 0; i < enumerated.size(); ++i)
        CHECK(enumerated[i] == filtered[i]);
}

TEST_CASE("|lambda| + r(lambda) is even for self-conjugate shapes") {
    for (const Partition& p : self_conjugate_partitions(12))
        CHECK((p.size() + p.diagonal_rank()) % 2 == 0);
}

TEST_CASE("schur: pinned small cases") {
    SparsePolynomial s1 = schur(Partition({1}), 2);
    CHECK(s1.coeff({1, 0}) == 1);
    CHECK(s1.coeff({0, 1}) == 1);
    CHECK(s1.terms().size() == 2);

    SparsePolynomial s21 = schur(Partition({2, 1}), 2);
    CHECK(s21.coeff({2, 1}) == 1);
    CHECK(s21.coeff({1, 2}) == 1);
    CHECK(s21.terms().size() == 2);

    SparsePolynomial s22 = schur(Partition({2, 2}), 2);
    CHECK(s22.coeff({2, 2}) == 1);
    CHECK(s22.terms().size() == 1);

    CHECK(schur(Partition({1, 1, 1}), 2).is_zero()); // more rows than variables
}

TEST_CASE("schur via tableaux equals the bialternant ratio") {
    for (int m = 1; m <= 3; ++m)
        for (int n = 0; n <= 6; ++n) {
            std::vector<Partition> shapes = n == 0 ? std::vector<Partition>{Partition()}
                                                   : all_partitions(n);
            for (const Partition& lambda : shapes) {
                if (lambda.rows() > m)
                    continue;
                CHECK(schur(lambda, m) == bialternant_schur(lambda, m));
            }
        }
}

TEST_CASE("littlewood identity: pinned m=2 expansion up to degree 6") {
    LittlewoodResult r = littlewood_check(2, 6);
    CHECK(r.ok);
    CHECK_FALSE(r.first_mismatch.has_value());
    CHECK(r.lhs.to_string() == "1 - x1 - x2 + x1^2*x2 + x1*x2^2 - x1^2*x2^2");
    CHECK(r.rhs.to_string() == r.lhs.to_string());
}

TEST_CASE("littlewood identity: m=1 and m=3") {
    LittlewoodResult one = littlewood_check(1, 5);
    CHECK(one.ok);
    CHECK(one.lhs.to_string() == "1 - x1");

    CHECK(littlewood_check(3, 8).ok);
}

TEST_CASE("graded euler characteristic: pinned heisenberg factorization") {
    GradedEulerReport r = graded_euler(heisenberg(3));
    CHECK(r.match);
    // (1-t)^2 (1-t^2) = 1 - 2t + 2t^3 - t^4
    CHECK(r.product_side.to_string({"t"}) == "1 - 2*t + 2*t^3 - t^4");
    CHECK(r.cohomology_side == r.product_side);
}

TEST_CASE("graded euler characteristic over the weighted zoo") {
    for (const StructureConstants& sc :
         {heisenberg(3), heisenberg(5), filiform(4), filiform(5), free_nilpotent_sc(2, 3),
          free_nilpotent_sc(3, 2), abelian(2)})
        CHECK(graded_euler(sc).match);
}

TEST_CASE("free_nilpotent(2,2) specializes to the heisenberg series") {
    GradedEulerReport a = graded_euler(free_nilpotent_sc(2, 2));
    GradedEulerReport b = graded_euler(heisenberg(3));
    CHECK(a.product_side == b.product_side);
    CHECK(a.cohomology_side == b.cohomology_side);
}

TEST_CASE("graded euler rejects unweighted input") {
    CHECK_THROWS_AS(graded_euler(sl2()), unweighted_input_error);
}

TEST_CASE("polynomial printing is graded-lex with x1 dominant") {
    SparsePolynomial p(2);
    p.add_term({1, 2}, Rational(1));
    p.add_term({2, 1}, Rational(1));
    p.add_term({0, 0}, Rational(-3));
    p.add_term({1, 0}, rat(1, 2));
    CHECK(p.to_string() == "-3 + 1/2*x1 + x1^2*x2 + x1*x2^2");
}

TEST_CASE("partition input validation") {
    CHECK_THROWS_AS(Partition({1, 2}), input_error);
    CHECK_THROWS_AS(Partition({2, 0}), input_error);
}
