#include "liecoh/bar_pbw.hpp"

#include <functional>
#include <map>

#include "liecoh/errors.hpp"

namespace liecoh {

int BarWeightComplex::dim(int degree) const {
    if (degree < 0 || degree >= degree_count())
        return 0;
    return static_cast<int>(words[degree].size());
}

std::pair<int, int> BarWeightComplex::bidegree(int degree, int pos) const {
    int vertical = 0;
    for (int f : words[degree][pos])
        vertical += factors[f].ext_degree;
    return {vertical, static_cast<int>(words[degree][pos].size())};
}

std::vector<int> BarWeightComplex::dims() const {
    std::vector<int> out;
    for (int d = 0; d < degree_count(); ++d)
        out.push_back(dim(d));
    return out;
}

BarWeightComplex bar_weight_complex(const CochainComplex& cx, int weight) {
    if (!cx.weighted())
        throw unweighted_input_error("bar_weight_complex: requires a weight-graded algebra");
    if (weight < 0)
        throw input_error("bar_weight_complex: weight must be >= 0");

    BarWeightComplex bar;
    bar.weight = weight;
    for (int k = 1; k <= cx.algebra_dim(); ++k)
        for (int i = 0; i < cx.dim(k); ++i)
            bar.factors.push_back({k, i, cx.weight(k, i)});

    // factor lookup by (ext_degree, index)
    std::map<std::pair<int, int>, int> factor_id;
    for (size_t f = 0; f < bar.factors.size(); ++f)
        factor_id[{bar.factors[f].ext_degree, bar.factors[f].index}] = static_cast<int>(f);

    std::map<std::vector<int>, std::pair<int, int>> index; // word -> (degree, pos)
    if (weight == 0) {
        bar.words.push_back({{}}); // the empty word
    } else {
        std::vector<int> word;
        std::function<void(int)> emit = [&](int weight_left) {
            if (weight_left == 0 && !word.empty()) {
                int deg = 0;
                for (int f : word)
                    deg += bar.factors[f].ext_degree - 1;
                if (static_cast<int>(bar.words.size()) <= deg)
                    bar.words.resize(deg + 1);
                index[word] = {deg, static_cast<int>(bar.words[deg].size())};
                bar.words[deg].push_back(word);
            }
            for (size_t f = 0; f < bar.factors.size(); ++f) {
                if (bar.factors[f].weight > weight_left)
                    continue;
                word.push_back(static_cast<int>(f));
                emit(weight_left - bar.factors[f].weight);
                word.pop_back();
            }
        };
        emit(weight);
    }

    const int degree_count = static_cast<int>(bar.words.size());
    bar.differential.resize(degree_count);
    for (int d = 0; d < degree_count; ++d) {
        int target_dim = d + 1 < degree_count ? static_cast<int>(bar.words[d + 1].size()) : 0;
        SparseMatrix m(target_dim, static_cast<int>(bar.words[d].size()));
        for (size_t col = 0; col < bar.words[d].size(); ++col) {
            const std::vector<int>& wrd = bar.words[d][col];
            const int len = static_cast<int>(wrd.size());
            SparseVec out;

            auto emit_target = [&](std::vector<int> target, const Rational& c) {
                auto it = index.find(target);
                if (it == index.end() || it->second.first != d + 1)
                    throw internal_error("bar_weight_complex: differential left the complex");
                out.set_coeff(it->second.second, out.coeff(it->second.second) + c);
            };

            int prefix = 0; // sum of shifted degrees left of the action site
            for (int t = 0; t < len; ++t) {
                const auto& ft = bar.factors[wrd[t]];
                Rational koszul(prefix % 2 == 0 ? 1 : -1);

                // vertical: b_1 = -delta on factor t
                const SparseVec& dcol = cx.delta(ft.ext_degree).col(ft.index);
                for (const auto& [tgt, c] : dcol.entries()) {
                    std::vector<int> target = wrd;
                    target[t] = factor_id.at({ft.ext_degree + 1, tgt});
                    emit_target(std::move(target), koszul * -c);
                }

                // horizontal: b_2 = (-1)^{deg} wedge of factors t, t+1
                if (t + 1 < len) {
                    const auto& fn = bar.factors[wrd[t + 1]];
                    SparseVec wedge = cx.wedge_basis(ft.ext_degree, ft.index, fn.ext_degree, fn.index);
                    if (!wedge.is_zero()) {
                        Rational c = koszul * wedge.entries()[0].second;
                        if (ft.ext_degree % 2 != 0)
                            c = -c;
                        std::vector<int> target(wrd.begin(), wrd.begin() + t);
                        target.push_back(
                            factor_id.at({ft.ext_degree + fn.ext_degree, wedge.entries()[0].first}));
                        target.insert(target.end(), wrd.begin() + t + 2, wrd.end());
                        emit_target(std::move(target), c);
                    }
                }
                prefix += ft.ext_degree - 1;
            }
            m.set_col(static_cast<int>(col), std::move(out));
        }
        bar.differential[d] = std::move(m);
    }

    for (int d = 0; d + 1 < degree_count; ++d)
        for (int col = 0; col < bar.dim(d); ++col)
            if (!bar.differential[d + 1].apply(bar.differential[d].col(col)).is_zero())
                throw internal_error("bar_weight_complex: d^2 != 0 at weight " +
                                     std::to_string(weight));
    return bar;
}

BarWeightComplex bar_weight_complex(const StructureConstants& sc, int weight) {
    require_valid(sc);
    if (!sc.weighted())
        throw unweighted_input_error("bar_weight_complex: requires a weight-graded algebra");
    if (!is_nilpotent(sc).nilpotent)
        throw input_error("bar_weight_complex: algebra is not nilpotent");
    return bar_weight_complex(ce_complex(sc), weight);
}

std::vector<std::int64_t> sym_dimensions(const std::vector<int>& weights, int max_weight) {
    std::vector<std::int64_t> dims(max_weight + 1, 0);
    dims[0] = 1;
    for (int w : weights) {
        if (w <= 0)
            throw input_error("sym_dimensions: weights must be positive");
        for (int t = w; t <= max_weight; ++t)
            dims[t] += dims[t - w];
    }
    return dims;
}

PBWReport pbw_check(const StructureConstants& sc, int max_weight) {
    require_valid(sc);
    if (!sc.weighted())
        throw unweighted_input_error("pbw_check: requires a weight-graded algebra");
    if (!is_nilpotent(sc).nilpotent)
        throw input_error("pbw_check: algebra is not nilpotent");
    if (max_weight < 0)
        throw input_error("pbw_check: max_weight must be >= 0");

    CochainComplex cx = ce_complex(sc);
    std::vector<std::int64_t> sym = sym_dimensions(*sc.weights, max_weight);

    PBWReport report;
    report.verdict = true;
    for (int w = 0; w <= max_weight; ++w) {
        BarWeightComplex bar = bar_weight_complex(cx, w);
        PBWRow row;
        row.weight = w;
        row.sym = sym[w];

        std::vector<int> ranks(bar.degree_count(), 0);
        for (int d = 0; d < bar.degree_count(); ++d)
            ranks[d] = rank(bar.differential[d]);
        for (int d = 0; d < bar.degree_count(); ++d) {
            int h = bar.dim(d) - ranks[d] - (d > 0 ? ranks[d - 1] : 0);
            if (d == 0)
                row.h0 = h;
            else
                row.higher.push_back(h);
        }
        row.ok = row.h0 == row.sym;
        for (int h : row.higher)
            if (h != 0)
                row.ok = false;
        if (!row.ok)
            report.verdict = false;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace liecoh
