#include "liecoh/lie_algebra.hpp"

#include "liecoh/errors.hpp"
#include "liecoh/free_lie.hpp"

namespace liecoh {

SparseVec StructureConstants::bracket(int i, int j) const {
    if (i == j)
        return {};
    bool flip = i > j;
    if (flip)
        std::swap(i, j);
    auto it = brackets.find({i, j});
    if (it == brackets.end())
        return {};
    SparseVec v = it->second;
    if (flip)
        v.negate();
    return v;
}

SparseVec StructureConstants::bracket(const SparseVec& x, const SparseVec& y) const {
    SparseVec out;
    for (const auto& [i, ci] : x.entries())
        for (const auto& [j, cj] : y.entries()) {
            if (i == j)
                continue;
            out.add_scaled(bracket(i, j), ci * cj);
        }
    return out;
}

std::string ValidationFailure::message(const StructureConstants& sc) const {
    auto name = [&](int idx) {
        return idx < static_cast<int>(sc.basis_names.size()) ? sc.basis_names[idx]
                                                             : "e" + std::to_string(idx + 1);
    };
    if (kind == Kind::jacobi) {
        std::string s = "Jacobi identity fails on (" + name(i) + ", " + name(j) + ", " +
                        name(k) + "); defect =";
        for (const auto& [idx, c] : defect.entries())
            s += " " + to_string(c) + "*" + name(idx);
        return s;
    }
    return "weight grading violated: [" + name(i) + ", " + name(j) + "] has a component on " +
           name(k) + " but weight(" + name(k) + ") != weight(" + name(i) + ") + weight(" +
           name(j) + ")";
}

std::optional<ValidationFailure> validate(const StructureConstants& sc) {
    for (const auto& [key, vec] : sc.brackets) {
        auto [i, j] = key;
        if (i < 0 || j >= sc.dim || i >= j)
            throw input_error("structure constants: bracket key (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range or not i<j");
        for (const auto& [k, c] : vec.entries())
            if (k < 0 || k >= sc.dim)
                throw input_error("structure constants: bracket target index out of range");
    }
    if (sc.weights) {
        if (static_cast<int>(sc.weights->size()) != sc.dim)
            throw input_error("structure constants: weights length != dim");
        for (int w : *sc.weights)
            if (w <= 0)
                throw input_error("structure constants: weights must be positive");
        for (const auto& [key, vec] : sc.brackets) {
            auto [i, j] = key;
            for (const auto& [k, c] : vec.entries()) {
                (void)c;
                if ((*sc.weights)[k] != (*sc.weights)[i] + (*sc.weights)[j]) {
                    ValidationFailure f;
                    f.kind = ValidationFailure::Kind::weight;
                    f.i = i;
                    f.j = j;
                    f.k = k;
                    return f;
                }
            }
        }
    }
    for (int i = 0; i < sc.dim; ++i)
        for (int j = i + 1; j < sc.dim; ++j)
            for (int k = j + 1; k < sc.dim; ++k) {
                SparseVec jac = sc.bracket(sc.bracket(i, j), SparseVec::unit(k));
                jac.add_scaled(sc.bracket(sc.bracket(j, k), SparseVec::unit(i)), Rational(1));
                jac.add_scaled(sc.bracket(sc.bracket(k, i), SparseVec::unit(j)), Rational(1));
                if (!jac.is_zero()) {
                    ValidationFailure f;
                    f.kind = ValidationFailure::Kind::jacobi;
                    f.i = i;
                    f.j = j;
                    f.k = k;
                    f.defect = std::move(jac);
                    return f;
                }
            }
    return std::nullopt;
}

const StructureConstants& require_valid(const StructureConstants& sc) {
    if (auto failure = validate(sc))
        throw input_error(failure->message(sc));
    return sc;
}

LowerCentralSeries lower_central_series(const StructureConstants& sc) {
    LowerCentralSeries lcs;
    lcs.terms.push_back(Subspace::full(sc.dim));
    while (true) {
        const Subspace& prev = lcs.terms.back();
        if (prev.dim() == 0)
            break;
        std::vector<SparseVec> gens;
        for (int i = 0; i < sc.dim; ++i)
            for (const SparseVec& v : prev.basis())
                gens.push_back(sc.bracket(SparseVec::unit(i), v));
        Subspace next = Subspace::span(sc.dim, gens);
        bool stabilized = next.dim() == prev.dim();
        lcs.terms.push_back(std::move(next));
        if (stabilized)
            break;
    }
    return lcs;
}

std::vector<int> LowerCentralSeries::dims() const {
    std::vector<int> out;
    out.reserve(terms.size());
    for (const auto& t : terms)
        out.push_back(t.dim());
    return out;
}

bool LowerCentralSeries::terminates_at_zero() const {
    return !terms.empty() && terms.back().dim() == 0;
}

NilpotencyInfo is_nilpotent(const StructureConstants& sc) {
    LowerCentralSeries lcs = lower_central_series(sc);
    NilpotencyInfo info;
    info.nilpotent = lcs.terminates_at_zero();
    info.nil_class = info.nilpotent ? static_cast<int>(lcs.terms.size()) - 1 : 0;
    return info;
}

StructureConstants heisenberg(int dim) {
    if (dim < 3 || dim % 2 == 0)
        throw input_error("heisenberg: dimension must be odd and >= 3");
    StructureConstants sc;
    sc.dim = dim;
    for (int i = 0; i < dim; ++i)
        sc.basis_names.push_back("e" + std::to_string(i + 1));
    for (int p = 0; p + 1 < dim - 1; p += 2)
        sc.brackets[{p, p + 1}] = SparseVec::unit(dim - 1);
    std::vector<int> w(dim, 1);
    w[dim - 1] = 2;
    sc.weights = std::move(w);
    return sc;
}

StructureConstants filiform(int n) {
    if (n < 3)
        throw input_error("filiform: dimension must be >= 3");
    StructureConstants sc;
    sc.dim = n;
    for (int i = 0; i < n; ++i)
        sc.basis_names.push_back("e" + std::to_string(i + 1));
    for (int i = 1; i <= n - 2; ++i)
        sc.brackets[{0, i}] = SparseVec::unit(i + 1);
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i)
        w[i] = i + 1;
    sc.weights = std::move(w);
    return sc;
}

StructureConstants abelian(int n) {
    if (n < 0)
        throw input_error("abelian: dimension must be >= 0");
    StructureConstants sc;
    sc.dim = n;
    for (int i = 0; i < n; ++i)
        sc.basis_names.push_back("e" + std::to_string(i + 1));
    sc.weights = std::vector<int>(n, 1);
    return sc;
}

StructureConstants sl2() {
    StructureConstants sc;
    sc.dim = 3;
    sc.basis_names = {"h", "e", "f"};
    SparseVec he;
    he.set_coeff(1, Rational(2));
    sc.brackets[{0, 1}] = he; // [h,e] = 2e
    SparseVec hf;
    hf.set_coeff(2, Rational(-2));
    sc.brackets[{0, 2}] = hf; // [h,f] = -2f
    sc.brackets[{1, 2}] = SparseVec::unit(0); // [e,f] = h
    return sc;
}

StructureConstants free_nilpotent_sc(int m, int n) {
    FreeNilpotentPresentation pres = free_nilpotent(m, n);
    StructureConstants sc;
    sc.dim = static_cast<int>(pres.basis.size());
    sc.basis_names = pres.names;
    sc.brackets = pres.brackets;
    sc.weights = pres.weights;
    return sc;
}

StructureConstants example(const std::string& name, const std::vector<int>& params) {
    auto expect = [&](size_t count) {
        if (params.size() != count)
            throw input_error("example '" + name + "' takes " + std::to_string(count) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    StructureConstants sc;
    if (name == "heisenberg") {
        expect(1);
        sc = heisenberg(params[0]);
    } else if (name == "filiform") {
        expect(1);
        sc = filiform(params[0]);
    } else if (name == "abelian") {
        expect(1);
        sc = abelian(params[0]);
    } else if (name == "sl2") {
        expect(0);
        sc = sl2();
    } else if (name == "free_nilpotent") {
        expect(2);
        sc = free_nilpotent_sc(params[0], params[1]);
    } else {
        throw input_error("unknown example algebra '" + name + "'");
    }
    require_valid(sc);
    return sc;
}

} // namespace liecoh
