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

#include "wiretap/property_checks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>

#include "wiretap/random_instances.hpp"
#include "wiretap/secrecy_rates.hpp"
#include "wiretap/solvers.hpp"

namespace wiretap
{
    std::string_view to_string(PropertyScope s)
    {
        switch (s)
        {
        case PropertyScope::lemma1: return "lemma1";
        case PropertyScope::theorem2: return "theorem2";
        case PropertyScope::identities: return "identities";
        case PropertyScope::gradients: return "gradients";
        case PropertyScope::sampler: return "sampler";
        default: return "all";
        }
    }

    PropertyScope parse_property_scope(std::string_view s)
    {
        for (PropertyScope p : {PropertyScope::all, PropertyScope::lemma1, PropertyScope::theorem2,
                                PropertyScope::identities, PropertyScope::gradients, PropertyScope::sampler})
            if (s == to_string(p))
                return p;
        throw ConfigError("unknown property scope '" + std::string(s) + "'");
    }

    bool PropertyReport::pass() const
    {
        return !results.empty() && std::all_of(results.begin(), results.end(), [](const auto &r) { return r.ok(); });
    }

    std::string PropertyReport::render() const
    {
        std::ostringstream os;
        for (const auto &r : results)
        {
            char line[256];
            std::snprintf(line, sizeof line, "[%s] %-44s %zu/%zu  worst=%.3e  bound=%.1e\n", r.ok() ? "PASS" : "FAIL",
                          r.name.c_str(), r.passed, r.total, r.worst, r.tolerance);
            os << line;
        }
        os << "verdict: " << (pass() ? "PASS" : "FAIL") << "\n";
        return os.str();
    }

    namespace
    {
        using random::Generator;

        // Records one checked quantity per instance; an instance passes when
        // value <= tolerance, and the largest value seen is the worst case.
        struct Tally
        {
            PropertyResult r;

            Tally(std::string name, double tol)
            {
                r.name = std::move(name);
                r.tolerance = tol;
                r.worst = -std::numeric_limits<double>::infinity();
            }

            void record(double value)
            {
                ++r.total;
                if (value <= r.tolerance)
                    ++r.passed;
                r.worst = std::max(r.worst, value);
            }
        };

        double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

        PartitionSpec random_partition(Index k, Generator &gen)
        {
            std::vector<Index> cuts;
            for (Index i = 1; i < k; ++i)
                cuts.push_back(i);
            std::shuffle(cuts.begin(), cuts.end(), gen);
            std::sort(cuts.begin(), cuts.begin() + 3);
            return PartitionSpec(cuts[0], cuts[1], cuts[2], k);
        }

        // Random Hermitian matrix that only couples blocks S1+S2 with themselves
        // and S3+S4 with themselves.
        HermitianMatrix split_by_partition(const PartitionSpec &part, Generator &gen)
        {
            const Index k = part.size();
            const Index a = part.k2();
            HermitianMatrix top = random::positive_definite(a, gen);
            HermitianMatrix bottom = random::positive_definite(k - a, gen);
            return HermitianMatrix(block_diag(top.matrix(), bottom.matrix()));
        }

        void lemma_suite(const PropertyOptions &o, Generator &gen, std::vector<PropertyResult> &out)
        {
            Tally holds("determinant inequality holds", 0.0);
            Tally equality("equality for block-diagonal matrices", 1e-9);
            Tally strict("strict gap with dense cross block", 0.0);
            Tally entropy("entropy form matches determinant form", 1e-9);

            for (std::size_t i = 0; i < o.instances; ++i)
            {
                const Index k = random::uniform_index(4, 8, gen);
                const PartitionSpec part = random_partition(k, gen);
                const HermitianMatrix K = random::positive_definite(k, gen);
                const InequalityReport rep = fischer_like(K, part);
                // slack relative to the magnitude of the log-determinants
                const double slack = 1e-9 * std::max(1.0, std::abs(rep.log_rhs));
                const double violation = rep.log_lhs - rep.log_rhs - slack;
                holds.record(o.inject_fault ? -violation : violation);

                if (rep.cross_block_norm >= 0.1)
                    strict.record(rep.equality_gap > 0.0 ? -rep.equality_gap : 1.0);

                entropy.record(rel(conditional_entropy_gap(K, part), rep.equality_gap));

                const InequalityReport eq = fischer_like(split_by_partition(part, gen), part);
                equality.record(std::abs(eq.equality_gap));
            }
            out.push_back(holds.r);
            out.push_back(equality.r);
            out.push_back(strict.r);
            out.push_back(entropy.r);
        }

        AugmentedCovariance random_covariance(Index n, double trace, Generator &gen)
        {
            const Index rank = random::uniform_index(1, 2 * n, gen);
            return random::feasible_augmented(n, rank, trace, gen);
        }

        void dominance_suite(const PropertyOptions &o, Generator &gen, std::vector<PropertyResult> &out)
        {
            Tally dom("general rate <= proper rate (degraded)", 1e-9);
            Tally block("block expansion equals general rate", 1e-9);
            Tally bound("determinant bound equals proper rate", 1e-9);

            for (std::size_t i = 0; i < o.instances; ++i)
            {
                const Index nt = random::uniform_index(1, 3, gen);
                const Index nr = random::uniform_index(nt, 4, gen);
                const Index ne = random::uniform_index(1, 3, gen);
                const ChannelPair ch = random::degraded_channel(nt, nr, ne, gen);
                const double power = std::pow(10.0, random::uniform_real(-1.0, 2.0, gen));
                const AugmentedCovariance aug = random_covariance(nt, power, gen);

                const DominanceResult d = degraded_dominance(ch, aug);
                const double excess = d.general.nats - d.proper_same_K.nats;
                dom.record(o.inject_fault ? -excess + 2e-9 : excess);

                const DominanceChain c = degraded_dominance_chain(ch, aug);
                block.record(rel(c.block_form, c.general_rate));
                bound.record(rel(c.fischer_bound, c.proper_rate));
            }
            out.push_back(dom.r);
            out.push_back(block.r);
            out.push_back(bound.r);
        }

        void identity_suite(const PropertyOptions &o, Generator &gen, std::vector<PropertyResult> &out)
        {
            Tally sylvester("det(I+AB) = det(I+BA)", 1e-9);
            Tally expansion("stacked-channel block expansion", 1e-12);
            Tally perm("block permutation keeps determinant", 1e-12);
            Tally udl("noise covariance times UDL inverse = I", 1e-10);
            Tally unitary("widely-linear transform M M^H = 2I", 1e-12);
            Tally composite("real-composite rate equals general rate", 1e-10);

            for (std::size_t i = 0; i < o.instances; ++i)
            {
                {
                    const Index m = random::uniform_index(1, 6, gen), n = random::uniform_index(1, 6, gen);
                    const ComplexMatrix A = 0.5 * random::complex_gaussian(m, n, gen);
                    const ComplexMatrix B = 0.5 * random::complex_gaussian(n, m, gen);
                    const SylvesterSides s = check_sylvester_identity(A, B);
                    sylvester.record(rel(s.lhs, s.rhs));
                }
                {
                    // [A; B] C [A^H B^H] = diag(A, B) [[C, C], [C, C]] diag(A^H, B^H)
                    const Index p = random::uniform_index(1, 4, gen), q = random::uniform_index(1, 4, gen);
                    const Index n = random::uniform_index(1, 4, gen);
                    const ComplexMatrix A = random::complex_gaussian(p, n, gen);
                    const ComplexMatrix B = random::complex_gaussian(q, n, gen);
                    const ComplexMatrix C = random::complex_gaussian(n, n, gen);
                    ComplexMatrix AB(p + q, n), CC(2 * n, 2 * n);
                    AB << A, B;
                    CC << C, C, C, C;
                    const ComplexMatrix D = block_diag(A, B);
                    const ComplexMatrix lhs = AB * C * AB.adjoint();
                    const ComplexMatrix rhs = D * CC * D.adjoint();
                    expansion.record((lhs - rhs).cwiseAbs().maxCoeff());
                }
                {
                    const Index k = random::uniform_index(4, 8, gen);
                    const PartitionSpec part = random_partition(k, gen);
                    const ComplexMatrix M = random::complex_gaussian(k, k, gen);
                    const ComplexMatrix P = symmetric_block_permute(M, part);
                    const Complex d0 = determinant(M), d1 = determinant(P);
                    const ComplexMatrix back = symmetric_block_permute(P, part.swapped_middle());
                    perm.record(std::max(std::abs(d0 - d1) / std::abs(d0), (back - M).cwiseAbs().maxCoeff()));
                }
                {
                    const Index nr = random::uniform_index(1, 4, gen), ne = random::uniform_index(1, 4, gen);
                    const ComplexMatrix A = random::complex_gaussian(nr, ne, gen);
                    // every other instance carries an improper noise component B != 0
                    const ComplexMatrix B =
                        (i % 2 == 0) ? ComplexMatrix::Zero(nr, ne) : random::complex_gaussian(nr, ne, gen);
                    ComplexMatrix Aug(2 * nr, 2 * ne);
                    Aug << A, B, B.conjugate(), A.conjugate();
                    const double sn = Eigen::JacobiSVD<ComplexMatrix>(Aug).singularValues()(0);
                    const double scale = random::uniform_real(0.05, 0.95, gen) / sn;
                    const NoiseCorrelation nc(A * scale, B * scale);
                    const ComplexMatrix Q = noise_covariance(nc.augmented()).matrix();
                    const ComplexMatrix I = ComplexMatrix::Identity(Q.rows(), Q.cols());
                    udl.record((Q * udl_inverse(nc) - I).cwiseAbs().maxCoeff());
                }
                {
                    const Index n = random::uniform_index(1, 6, gen);
                    const ComplexMatrix M = widely_linear_transform(n);
                    unitary.record((M * M.adjoint() - 2.0 * ComplexMatrix::Identity(2 * n, 2 * n)).cwiseAbs().maxCoeff());
                }
                {
                    const Index nt = random::uniform_index(1, 3, gen);
                    const ChannelPair ch =
                        random::channel(nt, random::uniform_index(1, 3, gen), random::uniform_index(1, 3, gen), gen);
                    const AugmentedCovariance aug = random_covariance(nt, random::uniform_real(0.1, 20.0, gen), gen);
                    composite.record(rel(real_composite_rate(ch, aug).nats, general_rate(ch, aug).nats));
                }
            }
            for (Tally *t : {&sylvester, &expansion, &perm, &udl, &unitary, &composite})
                out.push_back(t->r);
        }

        // Relative error of a directional derivative: |fd - exact| / max(|exact|, 1e-3).
        double derivative_error(double fd, double exact) { return std::abs(fd - exact) / std::max(std::abs(exact), 1e-3); }

        void gradient_suite(const PropertyOptions &o, Generator &gen, std::vector<PropertyResult> &out)
        {
            Tally proper("proper-rate gradient vs central differences", 1e-5);
            Tally general("general-rate gradient vs central differences", 1e-5);
            const double h = 1e-6;

            for (std::size_t i = 0; i < o.instances; ++i)
            {
                const Index nt = random::uniform_index(1, 3, gen);
                const ChannelPair ch =
                    random::channel(nt, random::uniform_index(1, 3, gen), random::uniform_index(1, 3, gen), gen);
                {
                    const HermitianMatrix K = random::positive_definite(nt, gen, 0.5);
                    const HermitianMatrix E = HermitianMatrix::symmetrize(random::complex_gaussian(nt, nt, gen));
                    const double exact = (rate_gradient_proper(ch, K).matrix().adjoint() * E.matrix()).trace().real();
                    const double fd =
                        (proper_rate(ch, K + E * h).nats - proper_rate(ch, K - E * h).nats) / (2.0 * h);
                    proper.record(derivative_error(fd, exact));
                }
                {
                    RealMatrix G = random::real_gaussian(2 * nt, 2 * nt, gen);
                    const RealMatrix Kbar = G * G.transpose() + 0.5 * RealMatrix::Identity(2 * nt, 2 * nt);
                    RealMatrix F = random::real_gaussian(2 * nt, 2 * nt, gen);
                    const RealMatrix Ebar = 0.5 * (F + F.transpose());
                    const AugmentedCovariance aug = augmented_from_composite(Kbar);
                    const AugmentedCovariance up = augmented_from_composite(Kbar + h * Ebar);
                    const AugmentedCovariance down = augmented_from_composite(Kbar - h * Ebar);
                    // the composite-to-augmented map is linear, so this is the exact augmented direction
                    const ComplexMatrix E = (up.augmented().matrix() - down.augmented().matrix()) / (2.0 * h);
                    const double exact = (rate_gradient_general(ch, aug).matrix().adjoint() * E).trace().real();
                    const double fd = (general_rate(ch, up).nats - general_rate(ch, down).nats) / (2.0 * h);
                    general.record(derivative_error(fd, exact));
                }
            }
            out.push_back(proper.r);
            out.push_back(general.r);
        }

        void sampler_suite(const PropertyOptions &o, Generator &gen, std::vector<PropertyResult> &out)
        {
            Tally moments("sampler second moments (1e5 draws)", 0.05);
            const std::size_t draws = 100000;
            auto check = [&](const AugmentedCovariance &aug)
            {
                const SampleBatch batch = sample_gaussian(aug, draws, gen());
                const SecondMoments m = estimate_augmented(batch);
                const double err = std::max((m.covariance.matrix() - aug.covariance().matrix()).cwiseAbs().maxCoeff(),
                                            (m.pseudo_covariance - aug.pseudo_covariance()).cwiseAbs().maxCoeff());
                moments.record(err);
            };

            const std::size_t cases = std::min<std::size_t>(o.instances, 3);
            for (std::size_t i = 0; i < cases; ++i)
            {
                const Index n = random::uniform_index(1, 4, gen);
                check(AugmentedCovariance::proper(random::psd_with_trace(n, n, double(n), gen)));
                check(random::feasible_augmented(n, 2 * n, double(n), gen));
            }
            // maximally improper: x = exp(i phi) * real Gaussian vector, so Kt = exp(2 i phi) K
            const Index n = 3;
            RealMatrix G = random::real_gaussian(n, n, gen);
            RealMatrix S = G * G.transpose();
            S *= double(n) / S.trace();
            const Complex rot = std::polar(1.0, 2.0 * random::uniform_real(0.0, std::numbers::pi, gen));
            const HermitianMatrix K = HermitianMatrix::symmetrize(S.cast<Complex>());
            check(validate_augmented(K, rot * S.cast<Complex>()));
            out.push_back(moments.r);
        }
    }

    PropertyReport check_properties(const PropertyOptions &opts)
    {
        if (opts.instances == 0)
            throw ConfigError("the number of instances must be positive");
        PropertyReport rep;
        Generator gen(opts.seed);
        auto want = [&](PropertyScope s) { return opts.scope == PropertyScope::all || opts.scope == s; };
        if (want(PropertyScope::lemma1))
            lemma_suite(opts, gen, rep.results);
        if (want(PropertyScope::theorem2))
            dominance_suite(opts, gen, rep.results);
        if (want(PropertyScope::identities))
            identity_suite(opts, gen, rep.results);
        if (want(PropertyScope::gradients))
            gradient_suite(opts, gen, rep.results);
        if (want(PropertyScope::sampler))
            sampler_suite(opts, gen, rep.results);
        return rep;
    }
}
