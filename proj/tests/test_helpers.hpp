#pragma once

#include <random>
#include <vector>

#include "liecoh/lie_algebra.hpp"
#include "liecoh/linalg.hpp"

namespace liecoh::testing {

inline SparseVec vec(std::initializer_list<long> dense) {
    SparseVec v;
    int i = 0;
    for (long x : dense) {
        if (x != 0)
            v.set_coeff(i, Rational(x));
        ++i;
    }
    return v;
}

inline SparseMatrix matrix(int rows, int cols, std::initializer_list<long> row_major) {
    SparseMatrix m(rows, cols);
    auto it = row_major.begin();
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (*it != 0)
                m.set(r, c, Rational(*it));
            ++it;
        }
    return m;
}

inline SparseMatrix random_sparse(std::mt19937& rng, int rows, int cols, double density = 0.4) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    SparseMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (coin(rng) < density) {
                int n = num(rng);
                if (n != 0)
                    m.set(r, c, rat(n, den(rng)));
            }
    return m;
}

/// Random two-step nilpotent algebra: n1 generators, n2 central targets,
/// arbitrary bracket coefficients. Jacobi holds identically.
inline StructureConstants random_two_step(std::mt19937& rng, int n1, int n2) {
    std::uniform_int_distribution<int> num(-3, 3);
    StructureConstants sc;
    sc.dim = n1 + n2;
    for (int i = 0; i < sc.dim; ++i)
        sc.basis_names.push_back("e" + std::to_string(i + 1));
    for (int i = 0; i < n1; ++i)
        for (int j = i + 1; j < n1; ++j) {
            SparseVec v;
            for (int k = 0; k < n2; ++k) {
                int c = num(rng);
                if (c != 0)
                    v.set_coeff(n1 + k, Rational(c));
            }
            if (!v.is_zero())
                sc.brackets[{i, j}] = std::move(v);
        }
    std::vector<int> w(sc.dim, 1);
    for (int k = 0; k < n2; ++k)
        w[n1 + k] = 2;
    sc.weights = std::move(w);
    return sc;
}

} // namespace liecoh::testing
