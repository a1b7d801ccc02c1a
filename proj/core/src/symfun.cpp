#include "liecoh/symfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "liecoh/chevalley.hpp"
#include "liecoh/errors.hpp"

namespace liecoh {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw input_error("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw input_error("Partition: parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::diagonal_rank() const {
    int r = 0;
    while (r < rows() && parts[r] >= r + 1)
        ++r;
    return r;
}

Partition conjugate(const Partition& lambda) {
    std::vector<int> cols;
    if (!lambda.parts.empty()) {
        cols.resize(lambda.parts[0], 0);
        for (int p : lambda.parts)
            for (int c = 0; c < p; ++c)
                ++cols[c];
    }
    Partition out;
    out.parts = std::move(cols);
    return out;
}

bool Partition::is_self_conjugate() const {
    return conjugate(*this).parts == parts;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
}

std::vector<Partition> self_conjugate_partitions(int max_size) {
    std::vector<Partition> out;
    out.emplace_back(); // the empty diagram

    // rebuild a diagram from its strictly decreasing odd diagonal hooks
    auto from_hooks = [](const std::vector<int>& hooks) {
        int r = static_cast<int>(hooks.size());
        int max_row = 0;
        for (int i = 0; i < r; ++i)
            max_row = std::max(max_row, i + 1 + (hooks[i] - 1) / 2);
        std::vector<int> row_len(max_row, 0);
        for (int i = 0; i < r; ++i) {
            int arm = (hooks[i] - 1) / 2;
            row_len[i] = std::max(row_len[i], i + 1 + arm);
            for (int row = i + 1; row <= i + arm && row < max_row; ++row)
                row_len[row] = std::max(row_len[row], i + 1);
        }
        return Partition(row_len);
    };

    std::vector<int> hooks;
    std::function<void(int, int)> pick = [&](int remaining, int max_hook) {
        if (remaining == 0) {
            out.push_back(from_hooks(hooks));
            return;
        }
        int h = std::min(max_hook, remaining);
        if (h % 2 == 0)
            --h;
        for (; h >= 1; h -= 2) {
            hooks.push_back(h);
            pick(remaining - h, h - 2);
            hooks.pop_back();
        }
    };
    for (int n = 1; n <= max_size; ++n)
        pick(n, n);

    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a.parts < b.parts;
    });
    return out;
}

bool SparsePolynomial::MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db)
        return da < db;
    return a > b; // lex-descending exponents within a degree
}

SparsePolynomial SparsePolynomial::constant(int vars, const Rational& c,
                                            std::optional<int> truncation) {
    SparsePolynomial p(vars, truncation);
    p.add_term(Monomial(vars, 0), c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int vars, int index, std::optional<int> truncation) {
    SparsePolynomial p(vars, truncation);
    Monomial m(vars, 0);
    m[index] = 1;
    p.add_term(m, Rational(1));
    return p;
}

void SparsePolynomial::add_term(const Monomial& exponents, const Rational& c) {
    if (static_cast<int>(exponents.size()) != vars_)
        throw input_error("SparsePolynomial: exponent arity mismatch");
    if (c == 0)
        return;
    if (truncation_ && std::accumulate(exponents.begin(), exponents.end(), 0) > *truncation_)
        return;
    auto [it, inserted] = terms_.emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Rational SparsePolynomial::coeff(const Monomial& exponents) const {
    auto it = terms_.find(exponents);
    return it == terms_.end() ? Rational(0) : it->second;
}

namespace {

std::optional<int> combine_truncation(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b)
        return std::min(*a, *b);
    return a ? a : b;
}

} // namespace

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
    if (vars_ != other.vars_)
        throw input_error("SparsePolynomial: variable count mismatch");
    truncation_ = combine_truncation(truncation_, other.truncation_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
    if (vars_ != other.vars_)
        throw input_error("SparsePolynomial: variable count mismatch");
    truncation_ = combine_truncation(truncation_, other.truncation_);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& other) const {
    if (vars_ != other.vars_)
        throw input_error("SparsePolynomial: variable count mismatch");
    SparsePolynomial out(vars_, combine_truncation(truncation_, other.truncation_));
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) {
            Monomial m(vars_);
            for (int i = 0; i < vars_; ++i)
                m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    out += other;
    return out;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& other) const {
    SparsePolynomial out = *this;
    out -= other;
    return out;
}

std::string SparsePolynomial::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty())
        return "0";
    auto var_name = [&](int i) {
        return i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i + 1);
    };
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        first = false;
        std::string mono;
        for (int i = 0; i < vars_; ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += var_name(i);
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty()) {
            s += liecoh::to_string(a);
        } else {
            if (a != 1)
                s += liecoh::to_string(a) + "*";
            s += mono;
        }
    }
    return s;
}

SparsePolynomial schur(const Partition& lambda, int vars, std::optional<int> degree_bound) {
    SparsePolynomial out(vars, degree_bound);
    if (degree_bound && lambda.size() > *degree_bound)
        return out;
    if (lambda.rows() > vars)
        return out; // no column-strict filling
    if (lambda.rows() == 0) {
        out.add_term(SparsePolynomial::Monomial(vars, 0), Rational(1));
        return out;
    }

    const auto& parts = lambda.parts;
    std::vector<std::vector<int>> tableau(parts.size());
    for (size_t r = 0; r < parts.size(); ++r)
        tableau[r].assign(parts[r], 0);

    SparsePolynomial::Monomial content(vars, 0);
    std::function<void(int, int)> fill = [&](int r, int c) {
        if (r == static_cast<int>(parts.size())) {
            out.add_term(content, Rational(1));
            return;
        }
        int next_r = r, next_c = c + 1;
        if (next_c == parts[r]) {
            next_r = r + 1;
            next_c = 0;
        }
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, tableau[r][c - 1]);         // rows weakly increase
        if (r > 0 && c < parts[r - 1])
            lo = std::max(lo, tableau[r - 1][c] + 1);     // columns strictly increase
        for (int v = lo; v <= vars; ++v) {
            tableau[r][c] = v;
            ++content[v - 1];
            fill(next_r, next_c);
            --content[v - 1];
        }
    };
    fill(0, 0);
    return out;
}

LittlewoodResult littlewood_check(int vars, int degree_bound) {
    if (vars < 1 || degree_bound < 1)
        throw input_error("littlewood_check: need vars >= 1 and degree_bound >= 1");
    LittlewoodResult result{false, SparsePolynomial(vars, degree_bound),
                            SparsePolynomial(vars, degree_bound), std::nullopt};

    SparsePolynomial lhs = SparsePolynomial::constant(vars, Rational(1), degree_bound);
    for (int i = 0; i < vars; ++i) {
        SparsePolynomial f = SparsePolynomial::constant(vars, Rational(1), degree_bound);
        f -= SparsePolynomial::variable(vars, i, degree_bound);
        lhs = lhs * f;
    }
    for (int i = 0; i < vars; ++i)
        for (int j = i + 1; j < vars; ++j) {
            SparsePolynomial f = SparsePolynomial::constant(vars, Rational(1), degree_bound);
            f -= SparsePolynomial::variable(vars, i, degree_bound) *
                 SparsePolynomial::variable(vars, j, degree_bound);
            lhs = lhs * f;
        }

    SparsePolynomial rhs(vars, degree_bound);
    for (const Partition& lambda : self_conjugate_partitions(degree_bound)) {
        int exponent = lambda.size() + lambda.diagonal_rank();
        if (exponent % 2 != 0)
            throw internal_error("littlewood_check: |lambda| + r(lambda) odd for self-conjugate " +
                                 lambda.to_string());
        SparsePolynomial s = schur(lambda, vars, degree_bound);
        if ((exponent / 2) % 2 == 0)
            rhs += s;
        else
            rhs -= s;
    }

    result.lhs = lhs;
    result.rhs = rhs;
    result.ok = lhs == rhs;
    if (!result.ok) {
        SparsePolynomial diff = lhs - rhs;
        result.first_mismatch = diff.terms().begin()->first;
    }
    return result;
}

GradedEulerReport graded_euler(const StructureConstants& sc) {
    require_valid(sc);
    if (!sc.weighted())
        throw unweighted_input_error("graded_euler: requires a weight-graded algebra");

    GradedEulerReport report{SparsePolynomial(1), SparsePolynomial(1), false};

    CochainComplex cx = ce_complex(sc);
    CohomologyData coh = cohomology(cx);
    for (int k = 0; k <= cx.algebra_dim(); ++k) {
        Rational sign(k % 2 == 0 ? 1 : -1);
        for (int w : coh.representative_weights[k])
            report.cohomology_side.add_term({w}, sign);
    }

    report.product_side = SparsePolynomial::constant(1, Rational(1));
    for (int w : *sc.weights) {
        SparsePolynomial f = SparsePolynomial::constant(1, Rational(1));
        SparsePolynomial t(1);
        t.add_term({w}, Rational(1));
        f -= t;
        report.product_side = report.product_side * f;
    }
    report.match = report.cohomology_side == report.product_side;
    return report;
}

} // namespace liecoh
