// Copyright 2026 The jqbattery Authors
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

#ifndef JQB_CORE_DENSITY_MATRIX_H
#define JQB_CORE_DENSITY_MATRIX_H

#include "jqb/core/linalg.h"

namespace jqb {

/// A Hermitian, unit-trace, positive semidefinite matrix.
///
/// Construction validates against the numeric policy and throws
/// std::invalid_argument on violation. The stored matrix is exactly
/// Hermitian (the input is symmetrized after validation).
class DensityMatrix {
   public:
    explicit DensityMatrix(const ComplexMatrix &m, const NumericPolicy &policy = kNumericPolicy);

    /// |psi><psi| for a normalized vector.
    static DensityMatrix pure(const ComplexVector &psi);
    static DensityMatrix maximally_mixed(Eigen::Index dim);
    /// Nearest state in the PSD cone: eigenvalues clipped at 0, then
    /// renormalized to unit trace. Input need only be Hermitian.
    static DensityMatrix project(const ComplexMatrix &m);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    Eigen::Index dim() const {
        return m_.rows();
    }
    double purity() const;
    /// Tr[op rho].
    double expect(const ComplexMatrix &op) const {
        return expectation(op, m_);
    }
    /// U rho U^dagger.
    DensityMatrix conjugated(const ComplexMatrix &u) const;

   private:
    struct Unchecked {};
    DensityMatrix(Unchecked, ComplexMatrix m) : m_(std::move(m)) {
    }
    ComplexMatrix m_;
};

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;
    double r() const;
};

enum class Subsystem { A, B };

/// Partial trace of a state on A (x) B with factor dimensions dim_a, dim_b,
/// keeping the named subsystem.
DensityMatrix partial_trace(const DensityMatrix &rho, Eigen::Index dim_a, Eigen::Index dim_b, Subsystem keep);

/// Two-qubit convenience overload.
DensityMatrix partial_trace(const DensityMatrix &rho, Subsystem keep);

/// e^{-beta H} / Tr e^{-beta H}, beta finite and >= 0.
DensityMatrix gibbs_state(const ComplexMatrix &h, double beta);

/// The beta -> infinity limit: uniform mixture over the ground space.
DensityMatrix ground_state(const ComplexMatrix &h);

BlochVector bloch_coordinates(const DensityMatrix &rho);

/// Uhlmann fidelity Tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0, 1].
double fidelity(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace jqb

#endif
