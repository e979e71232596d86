// Copyright 2026 The QKA Simulator Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense linear-algebra oracles for tests. Nothing here calls into the
// simulator's projection or Pauli code paths.

#ifndef QKA_TESTS_ORACLE_H
#define QKA_TESTS_ORACLE_H

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace qka::oracle {

using C = std::complex<double>;
using Vec = std::vector<C>;
using Mat = std::vector<std::vector<C>>;

inline Mat identity(size_t dim) {
    Mat m(dim, std::vector<C>(dim));
    for (size_t k = 0; k < dim; k++) {
        m[k][k] = 1;
    }
    return m;
}

inline Mat pauli_i() {
    return {{1, 0}, {0, 1}};
}
inline Mat pauli_x() {
    return {{0, 1}, {1, 0}};
}
inline Mat pauli_y() {
    return {{0, C(0, -1)}, {C(0, 1), 0}};
}
inline Mat pauli_z() {
    return {{1, 0}, {0, -1}};
}

inline Mat matmul(const Mat &a, const Mat &b) {
    size_t n = a.size(), k = b.size(), m = b[0].size();
    Mat out(n, std::vector<C>(m));
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < m; j++) {
            for (size_t t = 0; t < k; t++) {
                out[i][j] += a[i][t] * b[t][j];
            }
        }
    }
    return out;
}

inline Mat scale(const Mat &a, C s) {
    Mat out = a;
    for (auto &row : out) {
        for (auto &x : row) {
            x *= s;
        }
    }
    return out;
}

inline bool mat_close(const Mat &a, const Mat &b, double tol = 1e-12) {
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a[i].size(); j++) {
            if (std::abs(a[i][j] - b[i][j]) > tol) {
                return false;
            }
        }
    }
    return true;
}

inline Mat kron(const Mat &a, const Mat &b) {
    size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
    Mat out(ar * br, std::vector<C>(ac * bc));
    for (size_t i = 0; i < ar; i++) {
        for (size_t j = 0; j < ac; j++) {
            for (size_t k = 0; k < br; k++) {
                for (size_t l = 0; l < bc; l++) {
                    out[i * br + k][j * bc + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    return out;
}

inline Vec kron(const Vec &a, const Vec &b) {
    Vec out;
    for (const auto &x : a) {
        for (const auto &y : b) {
            out.push_back(x * y);
        }
    }
    return out;
}

inline Vec apply(const Mat &m, const Vec &v) {
    Vec out(m.size());
    for (size_t i = 0; i < m.size(); i++) {
        for (size_t j = 0; j < v.size(); j++) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

inline C dot(const Vec &a, const Vec &b) {
    C total = 0;
    for (size_t k = 0; k < a.size(); k++) {
        total += std::conj(a[k]) * b[k];
    }
    return total;
}

inline double norm2(const Vec &a) {
    return dot(a, a).real();
}

/// Bell vectors written out by hand: psi± = (|00> ± |11>)/√2, phi± = (|01> ± |10>)/√2.
inline std::vector<Vec> bell_vectors() {
    const double h = 1.0 / std::sqrt(2.0);
    return {{h, 0, 0, h}, {h, 0, 0, -h}, {0, h, h, 0}, {0, h, -h, 0}};
}

/// Tensor product of single-qubit matrices, first factor = most significant qubit.
inline Mat kron_all(const std::vector<Mat> &factors) {
    Mat out = factors[0];
    for (size_t k = 1; k < factors.size(); k++) {
        out = kron(out, factors[k]);
    }
    return out;
}

}  // namespace qka::oracle

#endif
