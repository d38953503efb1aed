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

#include "wiretap/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace wiretap
{
    std::string_view to_string(SignalingMode m)
    {
        switch (m)
        {
        case SignalingMode::proper: return "proper";
        case SignalingMode::general: return "general";
        default: return "both";
        }
    }

    SignalingMode parse_signaling_mode(std::string_view s)
    {
        if (s == "proper")
            return SignalingMode::proper;
        if (s == "general")
            return SignalingMode::general;
        if (s == "both")
            return SignalingMode::both;
        throw ConfigError("unknown signaling mode '" + std::string(s) + "'");
    }

    ChannelPair reference_channel()
    {
        ComplexMatrix Hr(2, 2), He(2, 2);
        Hr << Complex(1.8, 0.2), Complex(0.8, 0.0),
              Complex(1.5, -0.4), Complex(-0.8, 1.1);
        He << Complex(0.9, -0.7), Complex(-1.2, 1.4),
              Complex(-0.3, 0.0), Complex(-1.1, -0.3);
        return ChannelPair(Hr, He);
    }

    void ExperimentConfig::validate() const
    {
        if (snr_db.empty())
            throw ConfigError("SNR list must not be empty");
        if (methods.empty())
            throw ConfigError("solver method list must not be empty");
        if (seeds.empty())
            throw ConfigError("seed list must not be empty");
        for (double s : snr_db)
            if (!std::isfinite(s))
                throw ConfigError("SNR values must be finite");
        solver.validate();
    }

    namespace
    {
        std::string number(double v, const char *fmt = "%.12g")
        {
            char buf[64];
            std::snprintf(buf, sizeof buf, fmt, v);
            return buf;
        }

        void write_text(const std::filesystem::path &path, const std::string &text)
        {
            std::ofstream out(path, std::ios::binary);
            if (!out)
                throw ConfigError("cannot write '" + path.string() + "'");
            out << text;
        }

        std::vector<SignalingMode> expand(SignalingMode m)
        {
            if (m == SignalingMode::both)
                return {SignalingMode::proper, SignalingMode::general};
            return {m};
        }
    }

    std::string trace_csv(const ConvergenceTrace &trace, RateUnit unit)
    {
        std::string out = "iteration,objective_" + std::string(to_string(unit)) + "\n";
        for (const auto &p : trace.iterates)
            out += std::to_string(p.iteration) + "," + number(RateValue{p.objective}.in(unit)) + "\n";
        return out;
    }

    std::string summary_csv(const std::vector<SummaryRow> &rows, RateUnit unit)
    {
        std::string out = "mode,solver,snr_db,rate,unit,iterations,converged\n";
        for (const auto &r : rows)
        {
            out += std::string(to_string(r.mode)) + "," + std::string(to_string(r.solver)) + "," + number(r.snr_db, "%g") +
                   "," + number(r.rate.in(unit)) + "," + std::string(to_string(unit)) + "," +
                   std::to_string(r.iterations) + "," + (r.converged ? "true" : "false") + "\n";
        }
        return out;
    }

    std::vector<SummaryRow> run_sweep(const ExperimentConfig &cfg)
    {
        cfg.validate();
        if (cfg.output_dir)
            std::filesystem::create_directories(*cfg.output_dir);

        std::vector<SummaryRow> rows;
        for (double snr : cfg.snr_db)
        {
            const PowerBudget budget = PowerBudget::from_snr_db(snr);
            for (SignalingMode mode : expand(cfg.mode))
                for (SolverMethod method : cfg.methods)
                    for (std::uint64_t seed : cfg.seeds)
                    {
                        SolverConfig sc = cfg.solver;
                        sc.method = method;
                        sc.seed = seed;
                        ConvergenceTrace tr = mode == SignalingMode::proper ? maximize_proper(cfg.channel, budget, sc)
                                                                            : maximize_general(cfg.channel, budget, sc);
                        SummaryRow row{mode, method, snr, tr.terminal_rate, tr.iterations(), tr.converged, seed, {}};
                        if (cfg.output_dir)
                        {
                            row.trace_file = *cfg.output_dir / ("trace_" + std::string(to_string(mode)) + "_" +
                                                                std::string(to_string(method)) + "_snr" +
                                                                number(snr, "%g") + "_seed" + std::to_string(seed) + ".csv");
                            write_text(row.trace_file, trace_csv(tr, cfg.unit));
                        }
                        rows.push_back(std::move(row));
                    }
        }
        if (cfg.output_dir)
            write_text(*cfg.output_dir / "summary.csv", summary_csv(rows, cfg.unit));
        return rows;
    }

    TableReport reproduce_table(const SolverConfig &base)
    {
        const ChannelPair ch = reference_channel();
        TableReport rep;

        DegradednessReport deg = degradedness(ch);
        rep.min_eig = deg.min_eig;
        rep.max_eig = deg.max_eig;
        rep.eigen_ok = std::abs(deg.min_eig - reference_min_eig) <= eigen_tolerance &&
                       std::abs(deg.max_eig - reference_max_eig) <= eigen_tolerance;

        for (const auto &target : table_targets)
        {
            const PowerBudget budget = PowerBudget::from_snr_db(target.snr_db);
            for (SolverMethod method : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
            {
                SolverConfig sc = base;
                sc.method = method;
                ConvergenceTrace p = maximize_proper(ch, budget, sc);
                // general signaling starts from a random improper covariance
                SolverConfig gc = sc;
                gc.random_init = true;
                gc.proper_only = false;
                ConvergenceTrace g = maximize_general(ch, budget, gc);
                rep.rows.push_back({SignalingMode::general, method, target.snr_db, g.terminal_rate, g.iterations(),
                                    g.converged, gc.seed, {}});
                rep.rows.push_back({SignalingMode::proper, method, target.snr_db, p.terminal_rate, p.iterations(),
                                    p.converged, sc.seed, {}});
                rep.worst_agreement =
                    std::max(rep.worst_agreement, std::abs(g.terminal_rate.nats - p.terminal_rate.nats));
            }
        }
        rep.agreement_ok = rep.worst_agreement < agreement_tolerance;

        for (RateUnit unit : {RateUnit::nats, RateUnit::bits})
        {
            bool all = true;
            for (const auto &row : rep.rows)
                for (const auto &target : table_targets)
                    if (target.snr_db == row.snr_db && std::abs(row.rate.in(unit) - target.rate) > table_tolerance)
                        all = false;
            if (all)
            {
                rep.resolved_unit = unit;
                break;
            }
        }
        rep.pass = rep.eigen_ok && rep.agreement_ok && rep.resolved_unit.has_value();
        return rep;
    }

    std::string TableReport::render() const
    {
        std::ostringstream os;
        const RateUnit unit = resolved_unit.value_or(RateUnit::nats);
        os << "Maximum achievable secrecy rate (" << to_string(unit) << ")\n";
        os << "signal   solver               SNR=6dB     SNR=12dB    iters(6/12dB)\n";
        for (SolverMethod method : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
            for (SignalingMode mode : {SignalingMode::general, SignalingMode::proper})
            {
                char line[160];
                double r6 = 0, r12 = 0;
                std::size_t i6 = 0, i12 = 0;
                for (const auto &row : rows)
                    if (row.mode == mode && row.solver == method)
                    {
                        if (row.snr_db == 6.0)
                            r6 = row.rate.in(unit), i6 = row.iterations;
                        else
                            r12 = row.rate.in(unit), i12 = row.iterations;
                    }
                std::snprintf(line, sizeof line, "%-8s %-20s %-11.5f %-11.5f %zu/%zu\n", std::string(to_string(mode)).c_str(),
                              std::string(to_string(method)).c_str(), r6, r12, i6, i12);
                os << line;
            }
        os << "target: 1.936 (6 dB), 2.054 (12 dB) within " << table_tolerance << "\n";
        os << "resolved unit: " << (resolved_unit ? std::string(to_string(*resolved_unit)) : std::string("none")) << "\n";
        os << "proper/general worst disagreement: " << number(worst_agreement, "%.3g") << " nats (limit "
           << agreement_tolerance << ") " << (agreement_ok ? "ok" : "FAIL") << "\n";
        os << "degradedness eigenvalues: " << number(min_eig, "%.4f") << " " << number(max_eig, "%.4f")
           << " (expected -2.6117 4.7017) " << (eigen_ok ? "ok" : "FAIL") << "\n";
        os << "verdict: " << (pass ? "PASS" : "FAIL") << "\n";
        return os.str();
    }
}
