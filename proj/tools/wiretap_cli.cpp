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

// Command-line front end:
//
//   wiretap rate --channel ch.json --covariance k.json [--unit bits]
//   wiretap optimize [--channel ch.json] --snr 6 [--mode both] [--method dc-iteration] [--out trace.csv]
//   wiretap saddle [--channel ch.json] --snr 6
//   wiretap sweep [--channel ch.json] --snr 0 6 12 --out results/ [--method pg dc] [--seed 0 1 2]
//   wiretap reproduce-table
//   wiretap check-properties [--scope lemma1] [--instances 1000] [--inject-fault]
//
// Exit status: 0 success, 1 usage or input error, 2 a checked criterion failed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wiretap/channel_io.hpp"
#include "wiretap/experiment.hpp"
#include "wiretap/property_checks.hpp"
#include "wiretap/solvers.hpp"

namespace
{
    using namespace wiretap;

    constexpr int exit_ok = 0;
    constexpr int exit_usage = 1;
    constexpr int exit_fail = 2;

    struct Options
    {
        std::string channel;
        std::string covariance;
        std::vector<double> snr;
        std::string mode = "both";
        std::vector<std::string> methods{"projected-gradient"};
        std::vector<std::uint64_t> seeds{0};
        double tol = SolverConfig{}.tol_increase;
        std::size_t max_iters = SolverConfig{}.max_iters;
        bool random_init = false;
        std::string out;
        std::string unit = "nats";
        std::string scope = "all";
        std::size_t instances = 1000;
        bool inject_fault = false;
    };

    ChannelPair channel_or_reference(const Options &o)
    {
        return o.channel.empty() ? reference_channel() : load_channel(o.channel);
    }

    SolverConfig solver_config(const Options &o)
    {
        SolverConfig cfg;
        cfg.tol_increase = o.tol;
        cfg.max_iters = o.max_iters;
        cfg.random_init = o.random_init;
        cfg.method = parse_solver_method(o.methods.front());
        cfg.seed = o.seeds.front();
        cfg.validate();
        return cfg;
    }

    std::string fmt(double v)
    {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", v);
        return buf;
    }

    int cmd_rate(const Options &o)
    {
        const ChannelPair ch = load_channel(o.channel);
        const AugmentedCovariance aug = load_covariance(o.covariance);
        const RateUnit unit = parse_rate_unit(o.unit);
        const DegradednessReport deg = degradedness(ch);
        std::cout << "general_rate " << fmt(general_rate(ch, aug).in(unit)) << " " << to_string(unit) << "\n";
        std::cout << "proper_rate  " << fmt(proper_rate(ch, aug.covariance()).in(unit)) << " " << to_string(unit)
                  << "  (same covariance, zero pseudo-covariance)\n";
        std::cout << "degraded     " << (deg.is_degraded ? "yes" : "no") << "  (eigenvalues of Hr^H Hr - He^H He in ["
                  << fmt(deg.min_eig) << ", " << fmt(deg.max_eig) << "])\n";
        return exit_ok;
    }

    int cmd_optimize(const Options &o)
    {
        if (o.snr.size() != 1)
            throw ConfigError("optimize takes exactly one --snr value");
        const ChannelPair ch = channel_or_reference(o);
        const SolverConfig cfg = solver_config(o);
        const RateUnit unit = parse_rate_unit(o.unit);
        const PowerBudget budget = PowerBudget::from_snr_db(o.snr.front());
        const SignalingMode mode = parse_signaling_mode(o.mode);

        auto run = [&](SignalingMode m)
        {
            ConvergenceTrace tr = m == SignalingMode::proper ? maximize_proper(ch, budget, cfg) : maximize_general(ch, budget, cfg);
            std::cout << to_string(m) << " " << to_string(cfg.method) << " rate " << fmt(tr.terminal_rate.in(unit)) << " "
                      << to_string(unit) << " after " << tr.iterations() << " iterations"
                      << (tr.converged ? "" : " (iteration limit reached)") << "\n";
            return tr;
        };
        std::vector<ConvergenceTrace> traces;
        if (mode != SignalingMode::general)
            traces.push_back(run(SignalingMode::proper));
        if (mode != SignalingMode::proper)
            traces.push_back(run(SignalingMode::general));
        if (!o.out.empty())
        {
            if (traces.size() != 1)
                throw ConfigError("--out writes a single trace; choose --mode proper or --mode general");
            std::ofstream f(o.out, std::ios::binary);
            if (!f)
                throw ConfigError("cannot write '" + o.out + "'");
            f << trace_csv(traces.front(), unit);
        }
        return exit_ok;
    }

    int cmd_saddle(const Options &o)
    {
        if (o.snr.size() != 1)
            throw ConfigError("saddle takes exactly one --snr value");
        const ChannelPair ch = channel_or_reference(o);
        const SolverConfig cfg = solver_config(o);
        const RateUnit unit = parse_rate_unit(o.unit);
        const PowerBudget budget = PowerBudget::from_snr_db(o.snr.front());
        const SaddleResult s = saddle_solve(ch, budget, cfg);
        const ConvergenceTrace p = maximize_proper(ch, budget, cfg);
        std::cout << "saddle value       " << fmt(s.value.in(unit)) << " " << to_string(unit)
                  << (s.converged ? "" : " (not converged)") << "\n";
        std::cout << "max proper rate    " << fmt(p.terminal_rate.in(unit)) << " " << to_string(unit) << "\n";
        std::cout << "outer iterations   " << s.outer_values.size() << "\n";
        return exit_ok;
    }

    int cmd_sweep(const Options &o)
    {
        if (o.out.empty())
            throw ConfigError("sweep needs --out <directory>");
        ExperimentConfig cfg(channel_or_reference(o));
        cfg.snr_db = o.snr;
        cfg.mode = parse_signaling_mode(o.mode);
        cfg.methods.clear();
        for (const auto &m : o.methods)
            cfg.methods.push_back(parse_solver_method(m));
        cfg.seeds = o.seeds;
        cfg.solver = solver_config(o);
        cfg.output_dir = o.out;
        cfg.unit = parse_rate_unit(o.unit);
        const auto rows = run_sweep(cfg);
        std::cout << summary_csv(rows, cfg.unit);
        return exit_ok;
    }

    int cmd_reproduce(const Options &o)
    {
        SolverConfig cfg;
        cfg.tol_increase = o.tol;
        cfg.max_iters = o.max_iters;
        cfg.validate();
        const TableReport rep = reproduce_table(cfg);
        std::cout << rep.render();
        return rep.pass ? exit_ok : exit_fail;
    }

    int cmd_check(const Options &o)
    {
        PropertyOptions po;
        po.scope = parse_property_scope(o.scope);
        po.instances = o.instances;
        po.seed = o.seeds.front();
        po.inject_fault = o.inject_fault;
        const PropertyReport rep = check_properties(po);
        std::cout << rep.render();
        return rep.pass() ? exit_ok : exit_fail;
    }
}

int main(int argc, char **argv)
{
    CLI::App app{"Secrecy-rate toolkit for complex MIMO wiretap channels"};
    app.require_subcommand(1);
    Options o;

    auto add_solver = [&](CLI::App *c)
    {
        c->add_option("--channel", o.channel, "channel JSON file (default: built-in 2x2 reference channel)");
        c->add_option("--mode", o.mode, "proper, general or both")->check(CLI::IsMember({"proper", "general", "both"}));
        c->add_option("--method", o.methods, "projected-gradient (pg) or dc-iteration (dc)");
        c->add_option("--seed", o.seeds, "random seed(s) for the starting point");
        c->add_option("--tol", o.tol, "stop once an iteration gains less than this (nats)");
        c->add_option("--max-iters", o.max_iters, "iteration limit");
        c->add_flag("--random-init", o.random_init, "random starting point (improper for general signaling)");
        c->add_option("--unit", o.unit, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));
    };

    auto *rate = app.add_subcommand("rate", "evaluate the secrecy rates of a given input covariance");
    rate->add_option("--channel", o.channel, "channel JSON file")->required();
    rate->add_option("--covariance", o.covariance, "covariance JSON file")->required();
    rate->add_option("--unit", o.unit, "nats or bits")->check(CLI::IsMember({"nats", "bits"}));

    auto *optimize = app.add_subcommand("optimize", "maximize the secrecy rate at one SNR");
    add_solver(optimize);
    optimize->add_option("--snr", o.snr, "SNR in dB (P = nt * 10^(SNR/10))")->required();
    optimize->add_option("--out", o.out, "write the convergence trace to this CSV file");

    auto *saddle = app.add_subcommand("saddle", "solve the noise-correlation min-max problem at one SNR");
    add_solver(saddle);
    saddle->add_option("--snr", o.snr, "SNR in dB")->required();

    auto *sweep = app.add_subcommand("sweep", "run the solvers over a list of SNRs and write CSV traces");
    add_solver(sweep);
    sweep->add_option("--snr", o.snr, "SNR values in dB")->required();
    sweep->add_option("--out", o.out, "output directory")->required();

    auto *reproduce = app.add_subcommand("reproduce-table", "rerun the reference convergence experiment and compare");
    reproduce->add_option("--tol", o.tol, "solver stopping tolerance (nats)");
    reproduce->add_option("--max-iters", o.max_iters, "iteration limit");

    auto *check = app.add_subcommand("check-properties", "randomized checks of the structural results");
    check->add_option("--scope", o.scope, "all, lemma1, theorem2, identities, gradients or sampler")
        ->check(CLI::IsMember({"all", "lemma1", "theorem2", "identities", "gradients", "sampler"}));
    check->add_option("--instances", o.instances, "random instances per property");
    check->add_option("--seed", o.seeds, "random seed");
    check->add_flag("--inject-fault", o.inject_fault, "reverse the checked inequalities (harness self-test)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (o.seeds.empty() || o.methods.empty())
            throw ConfigError("--seed and --method need at least one value");
        if (*rate)
            return cmd_rate(o);
        if (*optimize)
            return cmd_optimize(o);
        if (*saddle)
            return cmd_saddle(o);
        if (*sweep)
            return cmd_sweep(o);
        if (*reproduce)
            return cmd_reproduce(o);
        return cmd_check(o);
    }
    catch (const wiretap::Error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
