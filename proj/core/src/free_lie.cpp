#include "liecoh/free_lie.hpp"

#include <algorithm>

#include "liecoh/errors.hpp"

namespace liecoh {

bool is_lyndon(const Word& w) {
    const int n = static_cast<int>(w.size());
    if (n == 0)
        return false;
    Word rot = w;
    for (int s = 1; s < n; ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (!(w < rot))
            return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int m, int max_len) {
    if (m < 1 || max_len < 1)
        throw input_error("lyndon_words: need m >= 1 and max_len >= 1");
    // Duval's generation in lex order, then stable-sorted by length.
    std::vector<Word> out;
    Word w = {0};
    out.push_back(w);
    while (true) {
        // extend periodically to max_len, then increment the last
        // incrementable letter
        Word t;
        t.reserve(max_len);
        for (int i = 0; i < max_len; ++i)
            t.push_back(w[i % w.size()]);
        while (!t.empty() && t.back() == m - 1)
            t.pop_back();
        if (t.empty())
            break;
        ++t.back();
        out.push_back(t);
        w = std::move(t);
    }
    std::stable_sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

namespace {

int moebius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0)
                return 0;
            mu = -mu;
        }
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

std::int64_t ipow(std::int64_t base, int exp) {
    std::int64_t r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

} // namespace

std::int64_t witt_dimension(int m, int n) {
    if (m < 1 || n < 1)
        throw input_error("witt_dimension: need m >= 1 and n >= 1");
    std::int64_t sum = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            sum += moebius(d) * ipow(m, n / d);
    return sum / n;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2)
        throw input_error("standard_factorization: word must have length >= 2");
    for (size_t len = w.size() - 1; len >= 1; --len) {
        Word suffix(w.end() - len, w.end());
        if (is_lyndon(suffix))
            return {Word(w.begin(), w.end() - len), std::move(suffix)};
    }
    throw input_error("standard_factorization: input is not a Lyndon word");
}

std::shared_ptr<const BracketTree> standard_bracketing(const Word& w) {
    if (!is_lyndon(w))
        throw input_error("standard_bracketing: input is not a Lyndon word");
    if (w.size() == 1) {
        auto leaf = std::make_shared<BracketTree>();
        leaf->letter = w[0];
        return leaf;
    }
    auto [u, v] = standard_factorization(w);
    auto node = std::make_shared<BracketTree>();
    node->left = standard_bracketing(u);
    node->right = standard_bracketing(v);
    return node;
}

std::string word_name(const Word& w, int generators) {
    std::string s;
    if (generators <= 26) {
        for (uint8_t c : w)
            s.push_back(static_cast<char>('a' + c));
    } else {
        for (size_t i = 0; i < w.size(); ++i) {
            if (i)
                s.push_back('.');
            s += "x" + std::to_string(static_cast<int>(w[i]));
        }
    }
    return s;
}

std::string bracketing_to_string(const BracketTree& t, int generators) {
    if (t.is_leaf())
        return word_name(Word{static_cast<uint8_t>(t.letter)}, generators);
    return "[" + bracketing_to_string(*t.left, generators) + "," +
           bracketing_to_string(*t.right, generators) + "]";
}

namespace {

using NcPoly = std::map<Word, Rational>;

void nc_add(NcPoly& dst, const Word& w, const Rational& c) {
    auto [it, inserted] = dst.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            dst.erase(it);
    }
}

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
    NcPoly out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            nc_add(out, w, ca * cb);
        }
    return out;
}

NcPoly nc_commutator(const NcPoly& a, const NcPoly& b) {
    NcPoly out = nc_mul(a, b);
    for (auto& [w, c] : nc_mul(b, a))
        nc_add(out, w, -c);
    return out;
}

NcPoly expand(const BracketTree& t) {
    if (t.is_leaf())
        return {{Word{static_cast<uint8_t>(t.letter)}, Rational(1)}};
    return nc_commutator(expand(*t.left), expand(*t.right));
}

} // namespace

std::map<Word, Rational> bracketing_expansion(const Word& w) {
    return expand(*standard_bracketing(w));
}

FreeNilpotentPresentation free_nilpotent(int m, int n) {
    if (m < 1 || n < 1)
        throw input_error("free_nilpotent: need m >= 1 and n >= 1");
    FreeNilpotentPresentation pres;
    pres.generators = m;
    pres.nil_class = n;
    pres.basis = lyndon_words(m, n);

    std::map<Word, int> index_of;
    for (size_t i = 0; i < pres.basis.size(); ++i) {
        const Word& w = pres.basis[i];
        index_of[w] = static_cast<int>(i);
        pres.weights.push_back(static_cast<int>(w.size()));
        pres.names.push_back(word_name(w, m));
    }

    std::map<Word, NcPoly> rho;
    for (const Word& w : pres.basis)
        rho[w] = bracketing_expansion(w);

    // Decompose a homogeneous Lie element against the Lyndon basis by
    // repeatedly peeling its lex-least monomial (which must be Lyndon with
    // the expansion of its standard bracketing matching leading coeff 1).
    auto lyndon_decompose = [&](NcPoly p) {
        SparseVec out;
        while (!p.empty()) {
            const Word w = p.begin()->first;
            const Rational c = p.begin()->second;
            auto it = index_of.find(w);
            if (it == index_of.end() || !is_lyndon(w))
                throw internal_error("free_nilpotent: lex-least monomial '" +
                                     word_name(w, m) + "' is not a Lyndon basis word");
            out.set_coeff(it->second, c);
            for (const auto& [wr, cr] : rho.at(w))
                nc_add(p, wr, -c * cr);
        }
        return out;
    };

    const int count = static_cast<int>(pres.basis.size());
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (pres.basis[i].size() + pres.basis[j].size() > static_cast<size_t>(n))
                continue; // truncated to zero
            NcPoly comm = nc_commutator(rho.at(pres.basis[i]), rho.at(pres.basis[j]));
            SparseVec v = lyndon_decompose(std::move(comm));
            if (!v.is_zero())
                pres.brackets[{i, j}] = std::move(v);
        }
    }
    return pres;
}

} // namespace liecoh
