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

#include "jqb/model/sweep.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <thread>

namespace jqb {

namespace {

JqbParams params_at(const SweepGrid &grid, size_t index) {
    size_t np = grid.protocols.size();
    size_t nth = grid.theta.size();
    size_t nt = grid.temperature.size();
    size_t ip = index % np;
    index /= np;
    size_t ith = index % nth;
    index /= nth;
    size_t it = index % nt;
    size_t ig = index / nt;
    return JqbParams::at_temperature(grid.gamma0[ig], grid.temperature[it], grid.theta[ith], grid.protocols[ip]);
}

}  // namespace

std::vector<CycleEnergetics> sweep(const SweepGrid &grid, const SweepOptions &options) {
    size_t n = grid.size();
    std::vector<std::optional<CycleEnergetics>> slots(n);
    auto work = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            CycleEnergetics row = run_cycle(params_at(grid, i));
            if (!options.keep_states) {
                row.states.clear();
            }
            slots[i] = std::move(row);
        }
    };

    unsigned threads = std::max(1u, options.threads);
    if (threads == 1 || n < 2) {
        work(0, n);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(threads);
        size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            size_t b = std::min(n, t * chunk);
            size_t e = std::min(n, b + chunk);
            pool.emplace_back([&, t, b, e] {
                try {
                    work(b, e);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto &th : pool) {
            th.join();
        }
        for (auto &err : errors) {
            if (err) {
                std::rethrow_exception(err);
            }
        }
    }

    std::vector<CycleEnergetics> out;
    out.reserve(n);
    for (auto &s : slots) {
        out.push_back(std::move(*s));
    }
    return out;
}

std::vector<double> linear_grid(double first, double last, double step) {
    if (!(step > 0) || !(last >= first) || !std::isfinite(first) || !std::isfinite(last)) {
        throw std::invalid_argument("linear_grid needs step > 0 and last >= first");
    }
    std::vector<double> out;
    size_t n = static_cast<size_t>(std::floor((last - first) / step + 1e-6)) + 1;
    out.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        // Snap values within rounding of zero so that "exclude 0" filters work.
        double v = first + static_cast<double>(i) * step;
        if (std::abs(v) < step * 1e-9) {
            v = 0.0;
        }
        out.push_back(v);
    }
    return out;
}

std::vector<double> log_grid(double first, double last, size_t n) {
    if (!(first > 0) || !(last >= first) || n == 0) {
        throw std::invalid_argument("log_grid needs 0 < first <= last and n > 0");
    }
    std::vector<double> out(n);
    if (n == 1) {
        out[0] = first;
        return out;
    }
    double lf = std::log(first);
    double ll = std::log(last);
    for (size_t i = 0; i < n; ++i) {
        out[i] = std::exp(lf + (ll - lf) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.back() = last;
    return out;
}

std::vector<CycleEnergetics> pareto_front(const std::vector<CycleEnergetics> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("pareto_front of an empty table");
    }
    std::vector<CycleEnergetics> out;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].efficiency) {
            continue;
        }
        double ei = rows[i].extracted_work;
        double hi = *rows[i].efficiency;
        bool dominated = false;
        for (size_t j = 0; j < rows.size() && !dominated; ++j) {
            if (j == i || !rows[j].efficiency) {
                continue;
            }
            double ej = rows[j].extracted_work;
            double hj = *rows[j].efficiency;
            dominated = ej >= ei && hj >= hi && (ej > ei || hj > hi);
        }
        if (!dominated) {
            out.push_back(rows[i]);
        }
    }
    return out;
}

std::vector<CycleEnergetics> pareto_front(const std::vector<CycleEnergetics> &rows, Protocol protocol) {
    std::vector<CycleEnergetics> subset;
    for (const auto &r : rows) {
        if (r.protocol == protocol) {
            subset.push_back(r);
        }
    }
    return pareto_front(subset);
}

}  // namespace jqb
