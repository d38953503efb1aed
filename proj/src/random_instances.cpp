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

#include "wiretap/random_instances.hpp"

#include <cmath>

#include "wiretap/secrecy_rates.hpp"

namespace wiretap::random
{
    ComplexMatrix complex_gaussian(Index rows, Index cols, Generator &gen)
    {
        std::normal_distribution<double> normal(0.0, 1.0);
        ComplexMatrix M(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i)
                M(i, j) = Complex(normal(gen), normal(gen));
        return M;
    }

    RealMatrix real_gaussian(Index rows, Index cols, Generator &gen)
    {
        std::normal_distribution<double> normal(0.0, 1.0);
        RealMatrix M(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i)
                M(i, j) = normal(gen);
        return M;
    }

    HermitianMatrix positive_definite(Index n, Generator &gen, double floor)
    {
        ComplexMatrix G = complex_gaussian(n, n, gen);
        return HermitianMatrix::symmetrize(G * G.adjoint() + floor * ComplexMatrix::Identity(n, n));
    }

    HermitianMatrix psd_with_trace(Index n, Index rank, double trace, Generator &gen)
    {
        ComplexMatrix G = complex_gaussian(n, rank, gen);
        ComplexMatrix W = G * G.adjoint();
        return HermitianMatrix::symmetrize(W * (trace / W.trace().real()));
    }

    AugmentedCovariance feasible_augmented(Index n, Index rank, double trace, Generator &gen)
    {
        RealMatrix G = real_gaussian(2 * n, rank, gen);
        RealMatrix W = G * G.transpose();
        W *= trace / W.trace();
        return augmented_from_composite(W);
    }

    ChannelPair channel(Index nt, Index nr, Index ne, Generator &gen)
    {
        const double s = 1.0 / std::sqrt(2.0);
        return ChannelPair(s * complex_gaussian(nr, nt, gen), s * complex_gaussian(ne, nt, gen));
    }

    ChannelPair degraded_channel(Index nt, Index nr, Index ne, Generator &gen, double margin)
    {
        if (nr < nt)
            throw DimensionError("a degraded channel needs n_r >= n_t");
        const double s = 1.0 / std::sqrt(2.0);
        ComplexMatrix Hr = s * complex_gaussian(nr, nt, gen);
        ComplexMatrix He = s * complex_gaussian(ne, nt, gen);
        for (int attempt = 0; attempt < 200; ++attempt)
        {
            ChannelPair ch(Hr, He);
            if (degradedness(ch).min_eig > margin)
                return ch;
            Hr *= 1.25;
        }
        return degraded_channel(nt, nr, ne, gen, margin);
    }

    ChannelPair non_degraded_channel(Index nt, Index nr, Index ne, Generator &gen, double margin)
    {
        for (;;)
        {
            ChannelPair ch = channel(nt, nr, ne, gen);
            if (degradedness(ch).min_eig < -margin)
                return ch;
        }
    }

    Index uniform_index(Index lo, Index hi, Generator &gen)
    {
        return std::uniform_int_distribution<Index>(lo, hi)(gen);
    }

    double uniform_real(double lo, double hi, Generator &gen)
    {
        return std::uniform_real_distribution<double>(lo, hi)(gen);
    }
}
