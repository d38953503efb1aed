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

#ifndef WIRETAP_CHANNEL_IO_HPP
#define WIRETAP_CHANNEL_IO_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "wiretap/augmented_signal.hpp"

namespace wiretap
{
    // Channel files are JSON documents
    //
    //   { "H_r": [[[re, im], [re, im]], ...], "H_e": [[[re, im], ...], ...] }
    //
    // with one inner array per matrix row and every entry a [re, im] pair.
    // Covariance files use the same encoding under "K" and, optionally,
    // "K_tilde" (absent means a proper signal).

    ChannelPair parse_channel(std::string_view text);
    ChannelPair load_channel(const std::filesystem::path &path);
    std::string serialize_channel(const ChannelPair &ch);
    void save_channel(const std::filesystem::path &path, const ChannelPair &ch);

    AugmentedCovariance parse_covariance(std::string_view text);
    AugmentedCovariance load_covariance(const std::filesystem::path &path);
    std::string serialize_covariance(const AugmentedCovariance &aug);
}

#endif
