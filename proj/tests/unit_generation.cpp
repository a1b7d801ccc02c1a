#include "doctest.h"

#include "liecoh/errors.hpp"
#include "liecoh/generation.hpp"

using namespace liecoh;

namespace {

MinimalAInfinity transfer(const StructureConstants& sc, int arity = 6) {
    CochainComplex cx = ce_complex(sc);
    CohomologyData coh = cohomology(cx);
    TransferData td = retract_data(cx, coh);
    return transferred_operations(cx, td, arity);
}

SparseVec eval_expr(const MinimalAInfinity& ma, const GenerationExpr& e) {
    if (e.is_leaf())
        return SparseVec::unit(e.leaf_class);
    std::vector<SparseVec> args;
    args.reserve(e.children.size());
    for (const auto& child : e.children)
        args.push_back(eval_expr(ma, child));
    return ma.op_multilinear(e.arity, args);
}

} // namespace

TEST_CASE("heisenberg(3) is 1-generated with exact spans") {
    MinimalAInfinity ma = transfer(heisenberg(3));
    GenerationReport report = span_closure(ma);
    CHECK(report.one_generated);
    CHECK(report.certified_exact);
    CHECK(report.rows[1].degree == 2);
    CHECK(report.rows[1].dim_generated == 2); // S^2 = H^2 via m_3 on H^1 triples
    CHECK(report.rows[2].dim_generated == 1); // S^3 = H^3
}

TEST_CASE("abelian algebras are 1-generated through iterated m_2") {
    for (int n = 1; n <= 3; ++n) {
        GenerationReport report = span_closure(transfer(abelian(n)));
        CHECK(report.one_generated);
        CHECK(report.certified_exact);
        for (const auto& cert : report.certificates)
            if (!cert.expr.is_leaf())
                CHECK(cert.expr.arity == 2);
    }
}

TEST_CASE("sl2 is not 1-generated: H^1 = 0 but H^3 != 0") {
    GenerationReport report = span_closure(transfer(sl2()));
    CHECK_FALSE(report.one_generated);
    CHECK(report.certified_exact); // no generators at all, the verdict is absolute
    REQUIRE(report.rows.size() == 3);
    CHECK(report.rows[2].degree == 3);
    CHECK(report.rows[2].dim_h == 1);
    CHECK(report.rows[2].dim_generated == 0);
    CHECK(report.rows[2].cokernel.size() == 1);
}

TEST_CASE("certificate soundness: expressions evaluate to their recorded values") {
    for (const StructureConstants& sc : {heisenberg(3), abelian(3), free_nilpotent_sc(2, 3)}) {
        MinimalAInfinity ma = transfer(sc);
        GenerationReport report = span_closure(ma);
        REQUIRE(report.one_generated);
        for (const auto& cert : report.certificates)
            CHECK(eval_expr(ma, cert.expr) == cert.value);
    }
}

TEST_CASE("free_nilpotent and filiform zoo members are 1-generated") {
    for (const StructureConstants& sc :
         {heisenberg(5), filiform(4), filiform(5), free_nilpotent_sc(2, 2),
          free_nilpotent_sc(2, 3), free_nilpotent_sc(3, 2)}) {
        GenerationReport report = span_closure(transfer(sc));
        CHECK(report.one_generated);
        CHECK(report.certified_exact);
    }
}

TEST_CASE("span monotonicity in the arity bound") {
    for (int bound = 3; bound <= 5; ++bound) {
        GenerationReport lo = span_closure(transfer(heisenberg(3), bound));
        GenerationReport hi = span_closure(transfer(heisenberg(3), bound + 1));
        REQUIRE(lo.rows.size() == hi.rows.size());
        for (size_t i = 0; i < lo.rows.size(); ++i)
            CHECK(lo.rows[i].dim_generated <= hi.rows[i].dim_generated);
    }
}

TEST_CASE("unweighted full closure is still absolute") {
    StructureConstants sc = heisenberg(3);
    sc.weights.reset();
    GenerationReport report = span_closure(transfer(sc));
    CHECK(report.one_generated);
    CHECK(report.certified_exact); // saturation is monotone in the arity bound
}

TEST_CASE("unweighted negative verdict with generators degrades honestly") {
    // sl2 + abelian(1): H^1 is the abelian dual, H^3 contains the sl2
    // volume class, and no m-expression in H^1 reaches it
    StructureConstants sc = sl2();
    sc.dim = 4;
    sc.basis_names.push_back("z");
    GenerationReport report = span_closure(transfer(sc));
    CHECK_FALSE(report.one_generated);
    CHECK_FALSE(report.certified_exact);
    CHECK(report.note.find("arity") != std::string::npos);
}

TEST_CASE("bar filtration check: F^1 H^{>=1}(Bar) vanishes per weight") {
    BarFiltrationReport h = bar_filtration_check(transfer(heisenberg(3)), 5);
    CHECK(h.max_weight_checked == 5);
    CHECK_FALSE(h.capped_by_arity);
    CHECK(h.all_vanish);
    for (const auto& row : h.rows)
        CHECK(row.vanishes);
}

TEST_CASE("bar filtration of a free exterior generator (abelian(1))") {
    // Bar of a one-dimensional degree-1 algebra: everything sits in bar
    // degree 0, so the condition is vacuous
    BarFiltrationReport report = bar_filtration_check(transfer(abelian(1)), 4);
    CHECK(report.all_vanish);
    for (const auto& row : report.rows) {
        REQUIRE(row.bar_dims.size() == 1);
        CHECK(row.bar_dims[0] == 1); // the word (s e*)^{x w}
    }
}

TEST_CASE("bar filtration agrees with the span closure per weight") {
    for (const StructureConstants& sc :
         {heisenberg(3), free_nilpotent_sc(2, 2), free_nilpotent_sc(2, 3), abelian(3)}) {
        MinimalAInfinity ma = transfer(sc);
        GenerationReport span = span_closure(ma);
        BarFiltrationReport bar = bar_filtration_check(ma, 5);
        for (const auto& row : bar.rows) {
            auto it = span.weight_dims.find(row.weight);
            bool span_full_at_w =
                it == span.weight_dims.end() || it->second.first == it->second.second;
            CHECK(span_full_at_w == row.vanishes);
        }
    }
}

TEST_CASE("bar filtration rejects unweighted input") {
    CHECK_THROWS_AS(bar_filtration_check(transfer(sl2()), 3), unweighted_input_error);
}
