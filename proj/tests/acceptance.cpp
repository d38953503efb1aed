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

// Acceptance runner: one [PASS]/[FAIL] line per criterion, exit code 2 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#include "wiretap/experiment.hpp"
#include "wiretap/property_checks.hpp"
#include "wiretap/random_instances.hpp"

using namespace wiretap;

namespace
{
    // pinned tolerances
    constexpr double solver_gap_tolerance = 1e-3; // nats, solver-level agreement on random channels
    constexpr std::size_t solver_channels = 50;
    constexpr std::uint64_t channel_seed = 1;

    int failures = 0;

    void report(const char *id, bool ok, const std::string &detail)
    {
        std::printf("[%s] %s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
        failures += !ok;
    }

    std::string fmt(const char *f, double a, double b = 0.0, double c = 0.0)
    {
        char buf[256];
        std::snprintf(buf, sizeof buf, f, a, b, c);
        return buf;
    }

    bool scope_passes(PropertyScope scope, std::size_t instances, std::string &summary)
    {
        PropertyOptions opt;
        opt.scope = scope;
        opt.instances = instances;
        const PropertyReport rep = check_properties(opt);
        std::size_t ok = 0, passed = 0, total = 0;
        for (const auto &r : rep.results)
        {
            ok += r.ok();
            passed += r.passed;
            total += r.total;
        }
        summary = std::to_string(ok) + "/" + std::to_string(rep.results.size()) + " checks, " + std::to_string(passed) +
                  "/" + std::to_string(total) + " instances";
        return rep.pass();
    }

    struct SolverStudy
    {
        double worst_degraded = 0.0;     // |general - proper| on degraded channels
        double worst_general = 0.0;      // |general - proper| on non-degraded channels
        double worst_saddle = 0.0;       // |saddle - proper| on non-degraded channels
    };

    // Draws 50 degraded then 50 non-degraded channels (dims <= 3, SNR in 0..15 dB)
    // from a single generator and compares the solvers on each.
    SolverStudy solver_study()
    {
        SolverStudy s;
        random::Generator gen(channel_seed);
        for (int degraded = 1; degraded >= 0; --degraded)
            for (std::size_t i = 0; i < solver_channels; ++i)
            {
                const Index nt = random::uniform_index(1, 3, gen);
                const Index nr = random::uniform_index(degraded ? nt : 1, 3, gen);
                const Index ne = random::uniform_index(1, 3, gen);
                const ChannelPair ch = degraded ? random::degraded_channel(nt, nr, ne, gen)
                                                : random::non_degraded_channel(nt, nr, ne, gen);
                const PowerBudget b = PowerBudget::from_snr_db(random::uniform_real(0.0, 15.0, gen));

                SolverConfig cfg;
                cfg.seed = i;
                const double proper = maximize_proper(ch, b, cfg).terminal_rate.nats;
                cfg.random_init = true; // improper starting point
                const double general = maximize_general(ch, b, cfg).terminal_rate.nats;
                if (degraded)
                    s.worst_degraded = std::max(s.worst_degraded, std::abs(general - proper));
                else
                {
                    s.worst_general = std::max(s.worst_general, std::abs(general - proper));
                    const double saddle = saddle_solve(ch, b, SolverConfig{}).value.nats;
                    s.worst_saddle = std::max(s.worst_saddle, std::abs(saddle - proper));
                }
            }
        return s;
    }
}

int main()
{
    try
    {
        const auto t0 = std::chrono::steady_clock::now();
        const TableReport table = reproduce_table();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        double r6 = 0.0, r12 = 0.0;
        for (const auto &row : table.rows)
            if (row.mode == SignalingMode::proper && row.solver == SolverMethod::projected_gradient)
                (row.snr_db == 6.0 ? r6 : r12) = row.rate.nats;
        report("AC1", table.pass && table.resolved_unit == RateUnit::nats,
               fmt("table reproduction: 6 dB %.5f, 12 dB %.5f nats (target +-5e-3), ", r6, r12) +
                   fmt("proper/general disagreement %.2g (limit 1e-4), %.2f s", table.worst_agreement, secs));

        report("AC2", table.eigen_ok,
               fmt("degradedness eigenvalues %.5f %.5f (expected -2.6117 4.7017 +-1e-3)", table.min_eig, table.max_eig));

        std::string summary;
        const bool lemma = scope_passes(PropertyScope::lemma1, 1000, summary);
        report("AC3", lemma, "determinant inequality suite: " + summary);

        const bool dominance = scope_passes(PropertyScope::theorem2, 500, summary);
        const SolverStudy study = solver_study();
        report("AC4", dominance && study.worst_degraded <= solver_gap_tolerance,
               "dominance suite: " + summary +
                   fmt("; improper-start general vs proper on 50 degraded channels: worst %.2g (limit 1e-3)",
                       study.worst_degraded));

        report("AC5", study.worst_general <= solver_gap_tolerance && study.worst_saddle <= solver_gap_tolerance,
               fmt("50 non-degraded channels: general vs proper worst %.2g, saddle vs proper worst %.2g (limit 1e-3)",
                   study.worst_general, study.worst_saddle));

        const bool identities = scope_passes(PropertyScope::identities, 200, summary);
        report("AC6", identities, "identity suite: " + summary);

        const bool gradients = scope_passes(PropertyScope::gradients, 50, summary);
        report("AC7", gradients, "gradient checks: " + summary);

        const bool sampler = scope_passes(PropertyScope::sampler, 3, summary);
        report("AC8", sampler, "sampler statistics (1e5 draws, 0.05 max-abs): " + summary);
    }
    catch (const std::exception &e)
    {
        std::printf("[FAIL] acceptance aborted: %s\n", e.what());
        return 2;
    }
    std::printf("verdict: %s\n", failures == 0 ? "PASS" : "FAIL");
    return failures == 0 ? 0 : 2;
}
