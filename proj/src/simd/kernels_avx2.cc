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

#include <cmath>

#include "jqb/simd/kernels.h"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#include <immintrin.h>
#define JQB_HAVE_AVX2_PATH 1
#define JQB_AVX2_TARGET __attribute__((target("avx2,fma")))
#else
#define JQB_HAVE_AVX2_PATH 0
#endif

namespace jqb::simd::avx2 {

#if JQB_HAVE_AVX2_PATH

namespace {

// exp(x) = 2^n exp(r), |r| <= ln2/2, with a Cody-Waite split of ln2 and a
// degree-13 Taylor polynomial for exp(r). Arguments below -708 flush to 0.
JQB_AVX2_TARGET inline __m256d exp_pd(__m256d x) {
    const __m256d hi = _mm256_set1_pd(709.0);
    const __m256d lo = _mm256_set1_pd(-708.0);
    __m256d underflow = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
    x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

    const __m256d log2e = _mm256_set1_pd(1.4426950408889634073599);
    const __m256d ln2_hi = _mm256_set1_pd(6.93145751953125e-1);
    const __m256d ln2_lo = _mm256_set1_pd(1.42860682030941723212e-6);
    __m256d n = _mm256_round_pd(_mm256_mul_pd(x, log2e), _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    __m256d r = _mm256_fnmadd_pd(n, ln2_hi, x);
    r = _mm256_fnmadd_pd(n, ln2_lo, r);

    static constexpr double kCoeff[] = {
        1.0 / 6227020800.0,  // 1/13!
        1.0 / 479001600.0,   // 1/12!
        1.0 / 39916800.0, 1.0 / 3628800.0, 1.0 / 362880.0, 1.0 / 40320.0, 1.0 / 5040.0,
        1.0 / 720.0,      1.0 / 120.0,     1.0 / 24.0,     1.0 / 6.0,     0.5,
        1.0,              1.0,
    };
    __m256d p = _mm256_set1_pd(kCoeff[0]);
    for (int k = 1; k < 14; ++k) {
        p = _mm256_fmadd_pd(p, r, _mm256_set1_pd(kCoeff[k]));
    }

    __m128i n32 = _mm256_cvtpd_epi32(n);
    __m256i n64 = _mm256_cvtepi32_epi64(n32);
    n64 = _mm256_add_epi64(n64, _mm256_set1_epi64x(1023));
    __m256d scale = _mm256_castsi256_pd(_mm256_slli_epi64(n64, 52));
    __m256d out = _mm256_mul_pd(p, scale);
    return _mm256_andnot_pd(underflow, out);
}

JQB_AVX2_TARGET double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d sh = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

JQB_AVX2_TARGET double exp_scalar_tail(double x) {
    alignas(32) double buf[4] = {x, 0, 0, 0};
    _mm256_store_pd(buf, exp_pd(_mm256_load_pd(buf)));
    return buf[0];
}

}  // namespace

JQB_AVX2_TARGET void ard_sq_exp(const PointColumns &points, std::span<const double> query,
                                std::span<const double> inv_length, double signal_var, std::span<double> out) {
    size_t n = points.count;
    size_t i = 0;
    const __m256d half = _mm256_set1_pd(-0.5);
    const __m256d sv = _mm256_set1_pd(signal_var);
    for (; i + 4 <= n; i += 4) {
        __m256d acc = _mm256_setzero_pd();
        for (size_t d = 0; d < points.dims; ++d) {
            __m256d x = _mm256_loadu_pd(points.data + d * points.stride + i);
            __m256d t = _mm256_mul_pd(_mm256_sub_pd(x, _mm256_set1_pd(query[d])), _mm256_set1_pd(inv_length[d]));
            acc = _mm256_fmadd_pd(t, t, acc);
        }
        _mm256_storeu_pd(out.data() + i, _mm256_mul_pd(sv, exp_pd(_mm256_mul_pd(half, acc))));
    }
    for (; i < n; ++i) {
        double acc = 0;
        for (size_t d = 0; d < points.dims; ++d) {
            double t = (points.data[d * points.stride + i] - query[d]) * inv_length[d];
            acc = std::fma(t, t, acc);
        }
        out[i] = signal_var * exp_scalar_tail(-0.5 * acc);
    }
}

JQB_AVX2_TARGET double dot(std::span<const double> a, std::span<const double> b) {
    size_t n = a.size();
    size_t i = 0;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i + 4), _mm256_loadu_pd(b.data() + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i), acc0);
    }
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

JQB_AVX2_TARGET void exp_inplace(std::span<double> v) {
    size_t i = 0;
    for (; i + 4 <= v.size(); i += 4) {
        _mm256_storeu_pd(v.data() + i, exp_pd(_mm256_loadu_pd(v.data() + i)));
    }
    for (; i < v.size(); ++i) {
        v[i] = exp_scalar_tail(v[i]);
    }
}

#else

void ard_sq_exp(const PointColumns &points, std::span<const double> query, std::span<const double> inv_length,
                double signal_var, std::span<double> out) {
    scalar::ard_sq_exp(points, query, inv_length, signal_var, out);
}

double dot(std::span<const double> a, std::span<const double> b) {
    return scalar::dot(a, b);
}

void exp_inplace(std::span<double> v) {
    scalar::exp_inplace(v);
}

#endif

}  // namespace jqb::simd::avx2
