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

#include "jqb/simd/kernels.h"

#include <cmath>
#include <cstdlib>
#include <cstring>

namespace jqb::simd {

namespace scalar {

void ard_sq_exp(const PointColumns &points, std::span<const double> query, std::span<const double> inv_length,
                double signal_var, std::span<double> out) {
    for (size_t i = 0; i < points.count; ++i) {
        out[i] = 0;
    }
    for (size_t d = 0; d < points.dims; ++d) {
        const double *col = points.data + d * points.stride;
        double q = query[d];
        double w = inv_length[d];
        for (size_t i = 0; i < points.count; ++i) {
            double t = (col[i] - q) * w;
            out[i] += t * t;
        }
    }
    for (size_t i = 0; i < points.count; ++i) {
        out[i] = signal_var * std::exp(-0.5 * out[i]);
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void exp_inplace(std::span<double> v) {
    for (double &x : v) {
        x = std::exp(x);
    }
}

}  // namespace scalar

Backend detected_backend() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
    static const Backend b = (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) ? Backend::Avx2
                                                                                                : Backend::Scalar;
    return b;
#else
    return Backend::Scalar;
#endif
}

Backend active_backend() {
    static const Backend b = [] {
        const char *env = std::getenv("JQB_SIMD");
        if (env != nullptr && std::strcmp(env, "scalar") == 0) {
            return Backend::Scalar;
        }
        return detected_backend();
    }();
    return b;
}

std::string_view backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void ard_sq_exp(const PointColumns &points, std::span<const double> query, std::span<const double> inv_length,
                double signal_var, std::span<double> out) {
    if (active_backend() == Backend::Avx2) {
        avx2::ard_sq_exp(points, query, inv_length, signal_var, out);
    } else {
        scalar::ard_sq_exp(points, query, inv_length, signal_var, out);
    }
}

double dot(std::span<const double> a, std::span<const double> b) {
    return active_backend() == Backend::Avx2 ? avx2::dot(a, b) : scalar::dot(a, b);
}

void exp_inplace(std::span<double> v) {
    if (active_backend() == Backend::Avx2) {
        avx2::exp_inplace(v);
    } else {
        scalar::exp_inplace(v);
    }
}

}  // namespace jqb::simd
