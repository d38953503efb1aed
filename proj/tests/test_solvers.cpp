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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "wiretap/experiment.hpp"
#include "wiretap/random_instances.hpp"
#include "wiretap/solvers.hpp"

// Covered tests:
// - Configuration, power budget and method parsing
// - Closed-form and finite-difference gradient checks
// - Projection onto the power-constrained PSD cone
// - Proper and general maximisation with both solver methods
// - Trace monotonicity, determinism and iteration caps
// - Saddle-point solver on degraded, symmetric and reference channels

using namespace wiretap;
using Catch::Matchers::WithinAbs;

namespace
{
    ComplexMatrix scalar(Complex v)
    {
        ComplexMatrix M(1, 1);
        M(0, 0) = v;
        return M;
    }

    SolverConfig config(SolverMethod m, std::uint64_t seed = 0, bool random_init = false)
    {
        SolverConfig cfg;
        cfg.method = m;
        cfg.seed = seed;
        cfg.random_init = random_init;
        return cfg;
    }

    // a parallel, strongly degraded 2x2 channel whose optimum uses both modes
    ChannelPair well_conditioned_channel()
    {
        ComplexMatrix Hr = ComplexMatrix::Zero(2, 2), He = ComplexMatrix::Zero(2, 2);
        Hr(0, 0) = 3.0;
        Hr(1, 1) = 2.0;
        He(0, 0) = 1.0;
        He(1, 1) = 0.5;
        return ChannelPair(Hr, He);
    }

    HermitianMatrix random_hermitian(Index n, random::Generator &gen)
    {
        const ComplexMatrix X = random::complex_gaussian(n, n, gen);
        return HermitianMatrix::symmetrize(X + X.adjoint());
    }

    ComplexMatrix random_symmetric(Index n, random::Generator &gen)
    {
        const ComplexMatrix X = random::complex_gaussian(n, n, gen);
        return X + X.transpose();
    }

    double relative_error(double fd, double exact) { return std::abs(fd - exact) / std::max(std::abs(exact), 1e-3); }

    bool monotone(const ConvergenceTrace &t)
    {
        for (std::size_t i = 1; i < t.iterates.size(); ++i)
            if (t.iterates[i].objective < t.iterates[i - 1].objective - 1e-12)
                return false;
        return true;
    }

    double proper_optimum(const ChannelPair &ch, const PowerBudget &b)
    {
        SolverConfig cfg;
        cfg.tol_increase = 1e-10;
        return maximize_proper(ch, b, cfg).terminal_rate.nats;
    }
}

TEST_CASE("solver configuration and parsing", "[solvers]")
{
    CHECK_NOTHROW(SolverConfig{}.validate());
    SolverConfig bad;
    bad.tol_increase = 0.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = {};
    bad.max_iters = 0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = {};
    bad.armijo_shrink = 1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);

    CHECK(parse_solver_method("pg") == SolverMethod::projected_gradient);
    CHECK(parse_solver_method("dc-iteration") == SolverMethod::dc_iteration);
    CHECK(parse_solver_method(to_string(SolverMethod::projected_gradient)) == SolverMethod::projected_gradient);
    CHECK_THROWS_AS(parse_solver_method("newton"), ConfigError);

    const PowerBudget b = PowerBudget::from_snr_db(6.0);
    CHECK_THAT(b.power(), WithinAbs(2.0 * std::pow(10.0, 0.6), 1e-12));
    CHECK_THAT(b.augmented(), WithinAbs(2.0 * b.power(), 1e-15));
    CHECK_THAT(b.snr_db(), WithinAbs(6.0, 1e-12));
    CHECK_THROWS_AS(PowerBudget(0.0), ConfigError);
    CHECK_THROWS_AS(PowerBudget(std::nan("")), ConfigError);
}

TEST_CASE("rate_gradient_proper examples", "[solvers]")
{
    const ChannelPair ref = reference_channel();
    const HermitianMatrix G0 = rate_gradient_proper(ref, HermitianMatrix::zero(2));
    CHECK((G0.matrix() - degradedness(ref).delta.matrix()).cwiseAbs().maxCoeff() <= 1e-12);

    // 4 / (1 + 4) - 1 / (1 + 1)
    const ChannelPair sc(scalar(2.0), scalar(1.0));
    CHECK_THAT(rate_gradient_proper(sc, HermitianMatrix(scalar(1.0))).matrix()(0, 0).real(), WithinAbs(0.3, 1e-15));
}

TEST_CASE("proper gradient matches finite differences", "[solvers][property]")
{
    random::Generator gen(51);
    const double h = 1e-6;
    for (int trial = 0; trial < 50; ++trial)
    {
        const Index nt = random::uniform_index(1, 4, gen);
        const ChannelPair ch = random::channel(nt, random::uniform_index(1, 4, gen), random::uniform_index(1, 4, gen), gen);
        const HermitianMatrix K = random::psd_with_trace(nt, nt, random::uniform_real(1.0, 10.0, gen), gen);
        const HermitianMatrix E = random_hermitian(nt, gen);
        const double fd = oracle::central_difference(
            [&](double t) { return proper_rate(ch, HermitianMatrix(K.matrix() + t * E.matrix())).nats; }, h);
        const double exact = (rate_gradient_proper(ch, K).matrix() * E.matrix()).trace().real();
        CHECK(relative_error(fd, exact) <= 1e-5);
    }
}

TEST_CASE("general gradient matches finite differences", "[solvers][property]")
{
    random::Generator gen(52);
    const double h = 1e-6;
    for (int trial = 0; trial < 50; ++trial)
    {
        const Index nt = random::uniform_index(1, 3, gen);
        const ChannelPair ch = random::channel(nt, random::uniform_index(1, 3, gen), random::uniform_index(1, 3, gen), gen);
        const AugmentedCovariance aug = random::feasible_augmented(nt, 2 * nt, random::uniform_real(1.0, 10.0, gen), gen);
        const HermitianMatrix dK = random_hermitian(nt, gen);
        const ComplexMatrix dKt = random_symmetric(nt, gen);
        auto at = [&](double t)
        {
            return general_rate(ch, validate_augmented(HermitianMatrix(aug.covariance().matrix() + t * dK.matrix()),
                                                       aug.pseudo_covariance() + t * dKt))
                .nats;
        };
        ComplexMatrix dAug(2 * nt, 2 * nt);
        dAug << dK.matrix(), dKt, dKt.conjugate(), dK.matrix().conjugate();
        const double exact = (rate_gradient_general(ch, aug).matrix() * dAug).trace().real();
        CHECK(relative_error(oracle::central_difference(at, h), exact) <= 1e-5);
    }
}

TEST_CASE("project_to_budget examples", "[solvers]")
{
    random::Generator gen(53);
    const HermitianMatrix K = random::psd_with_trace(3, 2, 4.0, gen);
    CHECK((project_to_budget(K, PowerBudget(4.0)).matrix() - K.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((project_to_budget(K, PowerBudget(9.0)).matrix() - K.matrix()).cwiseAbs().maxCoeff() <= 1e-12);

    const double d[] = {3.0, -1.0};
    const double e[] = {2.0, 0.0};
    CHECK((project_to_budget(HermitianMatrix::diagonal(d), PowerBudget(2.0)).matrix() -
           HermitianMatrix::diagonal(e).matrix())
              .cwiseAbs()
              .maxCoeff() <= 1e-12);
    CHECK_THROWS_AS(project_psd_trace(K, -1.0), ConfigError);
}

TEST_CASE("projection is the nearest feasible point", "[solvers][property]")
{
    random::Generator gen(54);
    for (int trial = 0; trial < 200; ++trial)
    {
        const Index n = random::uniform_index(1, 4, gen);
        const double P = random::uniform_real(0.5, 5.0, gen);
        const HermitianMatrix X = HermitianMatrix::symmetrize(2.0 * random_hermitian(n, gen).matrix());
        const HermitianMatrix Y = project_to_budget(X, PowerBudget(P));
        const double tr = Y.matrix().trace().real();
        CHECK(tr <= P + 1e-9);
        CHECK(min_eigenvalue(Y) >= -1e-10);
        const double dist = (X.matrix() - Y.matrix()).norm();
        bool nearest = true;
        for (int c = 0; c < 1000; ++c)
        {
            const HermitianMatrix Z = random::psd_with_trace(n, random::uniform_index(1, n, gen),
                                                             random::uniform_real(0.0, P, gen), gen);
            nearest = nearest && (X.matrix() - Z.matrix()).norm() >= dist - 1e-9;
        }
        CHECK(nearest);
    }
}

TEST_CASE("maximize_proper examples", "[solvers]")
{
    for (const SolverMethod m : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
    {
        CAPTURE(to_string(m));
        // h_r = 2, h_e = 1, P = 1: full power, rate log(5/2)
        const ConvergenceTrace sc = maximize_proper(ChannelPair(scalar(2.0), scalar(1.0)), PowerBudget(1.0), config(m));
        CHECK_THAT(sc.terminal_rate.nats, WithinAbs(std::log(2.5), 1e-6));
        CHECK_THAT(sc.terminal_point.covariance().matrix()(0, 0).real(), WithinAbs(1.0, 1e-4));
        CHECK(sc.converged);

        const ConvergenceTrace ref = maximize_proper(reference_channel(), PowerBudget::from_snr_db(6.0), config(m));
        CHECK_THAT(ref.terminal_rate.nats, WithinAbs(1.936, table_tolerance));
        CHECK(monotone(ref));
        CHECK(ref.iterates.front().iteration == 0);

        // identical legitimate and eavesdropper channels carry no secret rate
        random::Generator gen(55);
        const ComplexMatrix H = random::complex_gaussian(2, 2, gen);
        CHECK(std::abs(maximize_proper(ChannelPair(H, H), PowerBudget(10.0), config(m)).terminal_rate.nats) <= 1e-6);
    }
}

TEST_CASE("solver traces are monotone and deterministic", "[solvers][property]")
{
    random::Generator gen(56);
    for (int trial = 0; trial < 20; ++trial)
    {
        const ChannelPair ch = random::channel(3, 2, 2, gen);
        const PowerBudget b(random::uniform_real(1.0, 30.0, gen));
        for (const SolverMethod m : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
        {
            const SolverConfig cfg = config(m, 7, true);
            const ConvergenceTrace p = maximize_proper(ch, b, cfg);
            const ConvergenceTrace g = maximize_general(ch, b, cfg);
            CHECK(monotone(p));
            CHECK(monotone(g));
            CHECK(p.terminal_point.covariance().matrix().trace().real() <= b.power() + 1e-9);
            CHECK(g.terminal_point.augmented().matrix().trace().real() <= b.augmented() + 1e-9);

            const ConvergenceTrace again = maximize_general(ch, b, cfg);
            REQUIRE(again.iterates.size() == g.iterates.size());
            bool same = true;
            for (std::size_t i = 0; i < g.iterates.size(); ++i)
                same = same && again.iterates[i].objective == g.iterates[i].objective;
            CHECK(same);
        }
    }
}

TEST_CASE("an iteration cap stops without convergence", "[solvers]")
{
    SolverConfig cfg;
    cfg.max_iters = 1;
    const ConvergenceTrace t = maximize_proper(reference_channel(), PowerBudget::from_snr_db(12.0), cfg);
    CHECK_FALSE(t.converged);
    CHECK(t.iterations() == 1);
    const ConvergenceTrace g = maximize_general(reference_channel(), PowerBudget::from_snr_db(12.0), cfg);
    CHECK_FALSE(g.converged);
    CHECK(g.iterations() == 1);
}

TEST_CASE("maximize_general from an improper start reaches the proper optimum on degraded channels",
          "[solvers][property]")
{
    random::Generator gen(57);
    for (int trial = 0; trial < 20; ++trial)
    {
        const Index nt = random::uniform_index(1, 3, gen);
        const ChannelPair ch = random::degraded_channel(nt, random::uniform_index(nt, 3, gen), random::uniform_index(1, 3, gen), gen);
        const PowerBudget b(random::uniform_real(1.0, 30.0, gen));
        const double best = proper_optimum(ch, b);
        for (const SolverMethod m : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
        {
            const ConvergenceTrace g = maximize_general(ch, b, config(m, trial + 1, true));
            CHECK_FALSE(g.iterates.front().objective == g.terminal_rate.nats);
            CHECK_THAT(g.terminal_rate.nats, WithinAbs(best, 1e-4));
        }
    }
}

TEST_CASE("the pseudo-covariance vanishes at the optimum of a well-conditioned channel", "[solvers]")
{
    const ChannelPair ch = well_conditioned_channel();
    for (const SolverMethod m : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
    {
        CAPTURE(to_string(m));
        SolverConfig cfg = config(m, 3, true);
        cfg.tol_increase = 1e-10;
        const ConvergenceTrace g = maximize_general(ch, PowerBudget(10.0), cfg);
        CHECK(g.iterates.front().objective < g.terminal_rate.nats);
        CHECK(g.terminal_point.pseudo_covariance().norm() < 1e-4);
    }
}

TEST_CASE("maximize_general agrees with maximize_proper on the reference channel", "[solvers]")
{
    const ChannelPair ref = reference_channel();
    for (const double snr : {6.0, 12.0})
        for (const SolverMethod m : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
        {
            const PowerBudget b = PowerBudget::from_snr_db(snr);
            const double p = maximize_proper(ref, b, config(m)).terminal_rate.nats;
            CHECK_THAT(maximize_general(ref, b, config(m, 1, true)).terminal_rate.nats, WithinAbs(p, 1e-4));
        }
}

TEST_CASE("proper-only general maximisation follows the proper trajectory", "[solvers]")
{
    const ChannelPair ref = reference_channel();
    const PowerBudget b = PowerBudget::from_snr_db(12.0);
    for (const SolverMethod m : {SolverMethod::projected_gradient, SolverMethod::dc_iteration})
    {
        SolverConfig cfg = config(m);
        cfg.proper_only = true;
        const ConvergenceTrace g = maximize_general(ref, b, cfg);
        const ConvergenceTrace p = maximize_proper(ref, b, config(m));
        REQUIRE(g.iterates.size() == p.iterates.size());
        double worst = 0.0;
        for (std::size_t i = 0; i < g.iterates.size(); ++i)
            worst = std::max(worst, std::abs(g.iterates[i].objective - p.iterates[i].objective));
        CHECK(worst <= 1e-10);
        CHECK(g.terminal_point.is_proper());
    }
}

TEST_CASE("saddle value equals the proper optimum on degraded channels", "[solvers][property]")
{
    random::Generator gen(58);
    for (int trial = 0; trial < 10; ++trial)
    {
        const Index nt = random::uniform_index(1, 2, gen);
        const ChannelPair ch = random::degraded_channel(nt, random::uniform_index(nt, 3, gen), random::uniform_index(1, 2, gen), gen);
        const PowerBudget b(random::uniform_real(1.0, 20.0, gen));
        const SaddleResult s = saddle_solve(ch, b, SolverConfig{});
        CHECK_THAT(s.value.nats, WithinAbs(proper_optimum(ch, b), 1e-4));
        for (std::size_t i = 1; i < s.outer_values.size(); ++i)
            CHECK(s.outer_values[i] <= s.outer_values[i - 1] + 1e-12);
    }
}

TEST_CASE("saddle solver on symmetric and reference channels", "[solvers]")
{
    const SaddleResult sym = saddle_solve(ChannelPair(scalar(1.3), scalar(1.3)), PowerBudget(5.0), SolverConfig{});
    CHECK(sym.value.nats >= -1e-9);
    CHECK(sym.value.nats <= 1e-4);

    const ChannelPair ref = reference_channel();
    const SaddleResult s = saddle_solve(ref, PowerBudget::from_snr_db(6.0), SolverConfig{});
    CHECK_THAT(s.value.nats, WithinAbs(1.936, 1e-3));
    CHECK(Eigen::JacobiSVD<ComplexMatrix>(s.correlation).singularValues()(0) <= 1.0 - saddle_boundary_margin + 1e-12);
    CHECK(s.covariance.matrix().trace().real() <= PowerBudget::from_snr_db(6.0).power() + 1e-9);
}

TEST_CASE("augmented saddle with and without the pseudo cross-correlation", "[solvers]")
{
    const ChannelPair ref = reference_channel();
    const PowerBudget b = PowerBudget::from_snr_db(6.0);
    const double cp = proper_optimum(ref, b);
    const SaddleResult contracted = saddle_solve_general(ref, b, SolverConfig{}, true);
    const SaddleResult full = saddle_solve_general(ref, b, SolverConfig{}, false);
    CHECK_THAT(contracted.value.nats, WithinAbs(cp, 1e-3));
    // the min-max value upper-bounds the general secrecy rate, which is at least cp
    CHECK(full.value.nats >= cp - 1e-3);
    CHECK(full.value.nats <= contracted.value.nats + 1e-3);
}
