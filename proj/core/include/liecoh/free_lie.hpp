#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liecoh/linalg.hpp"

namespace liecoh {

/// A word over the alphabet {0, ..., m-1}.
using Word = std::vector<uint8_t>;

/// True iff w is nonempty and strictly smaller than all of its proper
/// rotations (Lyndon property).
bool is_lyndon(const Word& w);

/// All Lyndon words of length <= max_len over m letters, ordered by
/// (length, lex). This order is the basis order used everywhere below.
std::vector<Word> lyndon_words(int m, int max_len);

/// dim of the degree-n graded piece of the free Lie algebra on m
/// generators: (1/n) sum_{d|n} mu(d) m^{n/d}.
std::int64_t witt_dimension(int m, int n);

/// Standard (right Lyndon) bracketing: w = u v with v the longest proper
/// Lyndon suffix, b(w) = [b(u), b(v)]; letters are leaves.
struct BracketTree {
    int letter = -1; // leaf when >= 0
    std::shared_ptr<const BracketTree> left, right;

    bool is_leaf() const { return letter >= 0; }
};

std::shared_ptr<const BracketTree> standard_bracketing(const Word& w);

/// Longest proper Lyndon suffix split: w = (prefix, suffix).
std::pair<Word, Word> standard_factorization(const Word& w);

/// "[a,[a,b]]"-style rendering of a bracketing (m <= 26 uses letters).
std::string bracketing_to_string(const BracketTree& t, int generators);

/// Display name of a basis word: "aab" for m <= 26, "x0.x0.x1" beyond.
std::string word_name(const Word& w, int generators);

/// The free nilpotent Lie algebra L(V)/L^{>n}(V) on the Lyndon basis.
struct FreeNilpotentPresentation {
    int generators = 0; // m
    int nil_class = 0;  // n

    std::vector<Word> basis;                          // (length, lex) order
    std::vector<int> weights;                         // word lengths
    std::vector<std::string> names;                   // word_name per element
    std::map<std::pair<int, int>, SparseVec> brackets; // i<j -> [e_i, e_j]
};

/// Structure constants via the embedding into the degree-truncated free
/// associative algebra: brackets of standard bracketings are expanded as
/// noncommutative polynomials and decomposed against the Lyndon basis,
/// words of combined length > n truncated to zero.
FreeNilpotentPresentation free_nilpotent(int m, int n);

/// Noncommutative polynomial expansion of a basis word's standard
/// bracketing in the tensor algebra. Exposed as an oracle: the lex-least
/// monomial of rho(w) is w itself with coefficient 1.
std::map<Word, Rational> bracketing_expansion(const Word& w);

} // namespace liecoh
