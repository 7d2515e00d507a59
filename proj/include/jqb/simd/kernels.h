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

#ifndef JQB_SIMD_KERNELS_H
#define JQB_SIMD_KERNELS_H

#include <cstddef>
#include <span>
#include <string_view>

namespace jqb::simd {

// Data-parallel inner loops of the Gaussian-process surrogate. Each kernel
// has a scalar reference implementation and an AVX2 variant; the dispatching
// entry points pick one at runtime. The two must agree to a few ulps (see
// kernels.test.cc).

/// Training points in structure-of-arrays layout: coordinate d of point i is
/// at data[d * stride + i]. stride >= count.
struct PointColumns {
    const double *data = nullptr;
    size_t dims = 0;
    size_t count = 0;
    size_t stride = 0;
};

enum class Backend { Scalar, Avx2 };

/// Best backend supported by the running CPU.
Backend detected_backend();
/// Backend used by the dispatching entry points. Defaults to
/// detected_backend(); JQB_SIMD=scalar in the environment forces Scalar.
Backend active_backend();
std::string_view backend_name(Backend b);

/// out[i] = signal_var * exp(-0.5 * sum_d ((x_id - query_d) * inv_length_d)^2)
void ard_sq_exp(const PointColumns &points, std::span<const double> query, std::span<const double> inv_length,
                double signal_var, std::span<double> out);

/// sum_i a_i b_i
double dot(std::span<const double> a, std::span<const double> b);

/// exp applied elementwise, in place.
void exp_inplace(std::span<double> v);

namespace scalar {
void ard_sq_exp(const PointColumns &points, std::span<const double> query, std::span<const double> inv_length,
                double signal_var, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
void exp_inplace(std::span<double> v);
}  // namespace scalar

namespace avx2 {
/// Callers must check detected_backend() == Backend::Avx2 first.
void ard_sq_exp(const PointColumns &points, std::span<const double> query, std::span<const double> inv_length,
                double signal_var, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
void exp_inplace(std::span<double> v);
}  // namespace avx2

}  // namespace jqb::simd

#endif
