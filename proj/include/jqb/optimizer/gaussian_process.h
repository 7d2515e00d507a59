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

#ifndef JQB_OPTIMIZER_GAUSSIAN_PROCESS_H
#define JQB_OPTIMIZER_GAUSSIAN_PROCESS_H

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace jqb {

/// Squared-exponential kernel with one length scale per dimension:
/// k(x, x') = s2 exp(-1/2 sum_d ((x_d - x'_d) / l_d)^2), plus n2 on the
/// diagonal of the training covariance.
struct GpHyper {
    std::vector<double> log_length;
    double log_signal_var = 0;
    double log_noise_var = -13.8;

    static GpHyper initial(size_t dims);
    /// Clamps into the box the likelihood search is restricted to.
    void clamp();
};

struct GpPrediction {
    double mean = 0;
    double variance = 0;
};

/// Zero-mean GP regression on inputs in the unit cube. Callers standardize
/// targets.
class GaussianProcess {
   public:
    explicit GaussianProcess(size_t dims);

    /// Replaces the training set and factorizes K. Throws std::invalid_argument
    /// on shape mismatch or an empty set.
    void set_data(const std::vector<std::vector<double>> &x, const std::vector<double> &y);
    void set_hyper(const GpHyper &h);
    const GpHyper &hyper() const {
        return hyper_;
    }

    /// Log marginal likelihood at h; fills grad (same order as
    /// pack_hyper) if non-null.
    double log_marginal_likelihood(const GpHyper &h, std::vector<double> *grad = nullptr) const;

    /// Maximizes the log marginal likelihood with iRprop- from the current
    /// hyperparameters. Returns the final value.
    double fit_hyper(int iterations);

    GpPrediction predict(std::span<const double> x) const;
    /// Batched prediction; `points` holds m points, one per row.
    void predict_batch(const Eigen::MatrixXd &points, Eigen::VectorXd &mean, Eigen::VectorXd &variance) const;

    size_t size() const {
        return y_.size();
    }
    size_t dims() const {
        return dims_;
    }

   private:
    void factorize();
    void cross_cov(std::span<const double> q, std::span<double> out) const;

    size_t dims_;
    GpHyper hyper_;
    std::vector<double> cols_;  // training inputs, structure-of-arrays
    std::vector<std::vector<double>> x_;
    Eigen::VectorXd y_;
    Eigen::LLT<Eigen::MatrixXd> llt_;
    Eigen::VectorXd alpha_;
};

std::vector<double> pack_hyper(const GpHyper &h);
GpHyper unpack_hyper(const std::vector<double> &v);

}  // namespace jqb

#endif
