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

#ifndef WIRETAP_RANDOM_INSTANCES_HPP
#define WIRETAP_RANDOM_INSTANCES_HPP

#include <random>

#include "wiretap/augmented_signal.hpp"

namespace wiretap::random
{
    using Generator = std::mt19937_64;

    /// Entries with independent standard normal real and imaginary parts.
    ComplexMatrix complex_gaussian(Index rows, Index cols, Generator &gen);
    RealMatrix real_gaussian(Index rows, Index cols, Generator &gen);

    /// G G^H + floor * I for a square Gaussian G.
    HermitianMatrix positive_definite(Index n, Generator &gen, double floor = 0.1);

    /// Wishart-type PSD matrix of the given rank, scaled to trace `trace`.
    HermitianMatrix psd_with_trace(Index n, Index rank, double trace, Generator &gen);

    /// Random feasible (generically improper) augmented covariance with
    /// tr K = trace. rank is the rank of the real-composite covariance (1..2n);
    /// rank < 2n gives boundary points, rank 1 is maximally improper.
    AugmentedCovariance feasible_augmented(Index n, Index rank, double trace, Generator &gen);

    ChannelPair channel(Index nt, Index nr, Index ne, Generator &gen);

    /// Channel with H_r^H H_r - H_e^H H_e >= margin * I (needs nr >= nt).
    ChannelPair degraded_channel(Index nt, Index nr, Index ne, Generator &gen, double margin = 0.05);

    /// Channel whose smallest degradedness eigenvalue is below -margin.
    ChannelPair non_degraded_channel(Index nt, Index nr, Index ne, Generator &gen, double margin = 0.05);

    /// Uniform integer in [lo, hi].
    Index uniform_index(Index lo, Index hi, Generator &gen);
    double uniform_real(double lo, double hi, Generator &gen);
}

#endif
