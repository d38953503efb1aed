// SPDX-License-Identifier: Apache-2.0
//
// wiretap: secrecy-rate toolkit for complex MIMO wiretap channels
// Copyright (C) 2026 The wiretap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef WIRETAP_EXPERIMENT_HPP
#define WIRETAP_EXPERIMENT_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wiretap/solvers.hpp"

namespace wiretap
{
    enum class SignalingMode
    {
        proper,
        general,
        both
    };

    std::string_view to_string(SignalingMode m);
    SignalingMode parse_signaling_mode(std::string_view s);

    /// The 2x2 legitimate/eavesdropper channel used for the convergence experiment.
    ChannelPair reference_channel();

    struct ExperimentConfig
    {
        explicit ExperimentConfig(ChannelPair ch) : channel(std::move(ch)) {}

        ChannelPair channel;
        std::vector<double> snr_db;
        SignalingMode mode = SignalingMode::both;
        std::vector<SolverMethod> methods{SolverMethod::projected_gradient};
        std::vector<std::uint64_t> seeds{0};
        SolverConfig solver;               // method and seed are overridden per run
        std::optional<std::filesystem::path> output_dir; // no files written when empty
        RateUnit unit = RateUnit::nats;

        void validate() const;
    };

    struct SummaryRow
    {
        SignalingMode mode; // proper or general
        SolverMethod solver;
        double snr_db;
        RateValue rate;
        std::size_t iterations;
        bool converged;
        std::uint64_t seed;
        std::filesystem::path trace_file; // empty when no output directory was given
    };

    std::string trace_csv(const ConvergenceTrace &trace, RateUnit unit);
    std::string summary_csv(const std::vector<SummaryRow> &rows, RateUnit unit);

    /// One run per (SNR, mode, method, seed). Each run's trace is written to
    /// <output_dir>/trace_<mode>_<method>_snr<snr>_seed<seed>.csv and the
    /// table to <output_dir>/summary.csv.
    std::vector<SummaryRow> run_sweep(const ExperimentConfig &cfg);

    // Reference values of the convergence table (nats once the unit is resolved).
    struct TableTarget
    {
        double snr_db;
        double rate;
    };
    inline constexpr TableTarget table_targets[] = {{6.0, 1.936}, {12.0, 2.054}};
    inline constexpr double table_tolerance = 5e-3;
    inline constexpr double agreement_tolerance = 1e-4;
    inline constexpr double reference_min_eig = -2.6117;
    inline constexpr double reference_max_eig = 4.7017;
    inline constexpr double eigen_tolerance = 1e-3;

    struct TableReport
    {
        std::vector<SummaryRow> rows;
        std::optional<RateUnit> resolved_unit; // unit in which every row matches its target
        double min_eig = 0.0;
        double max_eig = 0.0;
        bool eigen_ok = false;
        bool agreement_ok = false;
        double worst_agreement = 0.0;
        bool pass = false;

        std::string render() const;
    };

    /// Runs both solver methods for proper and general signaling at 6 and
    /// 12 dB on reference_channel() and checks the results against the table.
    TableReport reproduce_table(const SolverConfig &base = {});
}

#endif
