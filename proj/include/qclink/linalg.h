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

#ifndef QCLINK_LINALG_H
#define QCLINK_LINALG_H

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace qclink {

using Complex = std::complex<double>;

/// Dense operator on the quantum Hilbert space (a d x d complex matrix).
using QuantumOperator = Eigen::MatrixXcd;
using StateVector = Eigen::VectorXcd;

using Rng = std::mt19937_64;

struct EntryDeviation {
    double value = 0.0;
    int row = -1;
    int col = -1;
};

/// Largest |a_ij - conj(a_ji)| together with its location.
EntryDeviation hermiticity_deviation(const QuantumOperator &a);

/// Smallest eigenvalue of the Hermitian part (a + a^*) / 2.
double min_hermitian_eigenvalue(const QuantumOperator &a);

double max_abs_entry(const QuantumOperator &a);

bool all_finite(const QuantumOperator &a);

/// Anticommutator {a, b} = ab + ba.
QuantumOperator anticommutator(const QuantumOperator &a, const QuantumOperator &b);

QuantumOperator commutator(const QuantumOperator &a, const QuantumOperator &b);

/// Haar-ish random unitary via QR of a complex Gaussian matrix.
QuantumOperator random_unitary(int dim, Rng &rng);

StateVector random_unit_vector(int dim, Rng &rng);

/// Random density matrix of the given rank (trace one).
QuantumOperator random_density_matrix(int dim, int rank, Rng &rng);

}  // namespace qclink

#endif
