// Copyright 2026 The qclink Authors
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

#include "qclink/linalg.h"

#include <cmath>
#include <stdexcept>

namespace qclink {

EntryDeviation hermiticity_deviation(const QuantumOperator &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermiticity_deviation: operator is not square");
    }
    EntryDeviation worst;
    for (int r = 0; r < a.rows(); r++) {
        for (int c = r; c < a.cols(); c++) {
            double d = std::abs(a(r, c) - std::conj(a(c, r)));
            if (d > worst.value || worst.row < 0) {
                worst = {d, r, c};
            }
        }
    }
    return worst;
}

double min_hermitian_eigenvalue(const QuantumOperator &a) {
    QuantumOperator h = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<QuantumOperator> solver(h, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double max_abs_entry(const QuantumOperator &a) {
    if (a.size() == 0) {
        return 0.0;
    }
    return a.cwiseAbs().maxCoeff();
}

bool all_finite(const QuantumOperator &a) {
    for (Eigen::Index k = 0; k < a.size(); k++) {
        const Complex &z = a.data()[k];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

QuantumOperator anticommutator(const QuantumOperator &a, const QuantumOperator &b) {
    return a * b + b * a;
}

QuantumOperator commutator(const QuantumOperator &a, const QuantumOperator &b) {
    return a * b - b * a;
}

namespace {

QuantumOperator gaussian_matrix(int rows, int cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    QuantumOperator g(rows, cols);
    for (int r = 0; r < rows; r++) {
        for (int c = 0; c < cols; c++) {
            g(r, c) = Complex(normal(rng), normal(rng));
        }
    }
    return g;
}

}  // namespace

QuantumOperator random_unitary(int dim, Rng &rng) {
    if (dim < 1) {
        throw std::invalid_argument("random_unitary: dimension must be positive");
    }
    QuantumOperator g = gaussian_matrix(dim, dim, rng);
    Eigen::HouseholderQR<QuantumOperator> qr(g);
    QuantumOperator q = qr.householderQ();
    QuantumOperator r = qr.matrixQR().triangularView<Eigen::Upper>();
    // Fix the phase ambiguity of QR.
    for (int k = 0; k < dim; k++) {
        double mag = std::abs(r(k, k));
        Complex phase = mag > 0 ? r(k, k) / mag : Complex(1.0, 0.0);
        q.col(k) *= phase;
    }
    return q;
}

StateVector random_unit_vector(int dim, Rng &rng) {
    QuantumOperator g = gaussian_matrix(dim, 1, rng);
    StateVector v = g.col(0);
    return v / v.norm();
}

QuantumOperator random_density_matrix(int dim, int rank, Rng &rng) {
    if (rank < 1 || rank > dim) {
        throw std::invalid_argument("random_density_matrix: rank must lie in [1, dim]");
    }
    QuantumOperator g = gaussian_matrix(dim, rank, rng);
    QuantumOperator rho = g * g.adjoint();
    rho /= rho.trace().real();
    // Symmetrize away rounding so the result is Hermitian to machine precision.
    return 0.5 * (rho + rho.adjoint());
}

}  // namespace qclink
