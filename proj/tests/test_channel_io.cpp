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

#include <filesystem>
#include <fstream>
#include <string>

#include "wiretap/channel_io.hpp"
#include "wiretap/experiment.hpp"
#include "wiretap/random_instances.hpp"

// Covered tests:
// - Loading the reference channel file
// - Round trips of channels and covariances
// - Error reporting for empty, malformed, incomplete and mismatched files

using namespace wiretap;
using Catch::Matchers::ContainsSubstring;

namespace
{
    const std::filesystem::path data_dir{WIRETAP_DATA_DIR};

    std::filesystem::path scratch_file(const std::string &name, const std::string &contents)
    {
        const auto dir = std::filesystem::temp_directory_path() / "wiretap_channel_io";
        std::filesystem::create_directories(dir);
        const auto path = dir / name;
        std::ofstream(path) << contents;
        return path;
    }

    std::string message_of(const std::string &text)
    {
        try
        {
            parse_channel(text);
        }
        catch (const ConfigError &e)
        {
            return e.what();
        }
        return {};
    }
}

TEST_CASE("the reference channel file matches the built-in channel", "[channel-io]")
{
    const ChannelPair ch = load_channel(data_dir / "reference_channel.json");
    CHECK(ch.legitimate()(0, 0) == Complex(1.8, 0.2));
    CHECK(ch.legitimate() == reference_channel().legitimate());
    CHECK(ch.eavesdropper() == reference_channel().eavesdropper());
}

TEST_CASE("empty and missing files are configuration errors", "[channel-io]")
{
    CHECK_THROWS_AS(load_channel(scratch_file("empty.json", "")), ConfigError);
    CHECK_THROWS_AS(load_channel(data_dir / "no_such_file.json"), ConfigError);
    CHECK_THROWS_AS(parse_channel("[1, 2]"), ConfigError);
}

TEST_CASE("mismatched transmit dimensions are rejected", "[channel-io]")
{
    const std::string text = R"({"H_r": [[[1,0],[0,0]], [[0,0],[1,0]]],
                                 "H_e": [[[1,0],[0,0],[0,0]], [[0,0],[1,0],[0,0]]]})";
    CHECK_THROWS_AS(parse_channel(text), DimensionError);
}

TEST_CASE("channel round trip is exact", "[channel-io][property]")
{
    random::Generator gen(61);
    for (int trial = 0; trial < 50; ++trial)
    {
        const Index nt = random::uniform_index(1, 4, gen);
        const ChannelPair ch = random::channel(nt, random::uniform_index(1, 4, gen), random::uniform_index(1, 4, gen), gen);
        const ChannelPair back = parse_channel(serialize_channel(ch));
        CHECK(back.legitimate() == ch.legitimate());
        CHECK(back.eavesdropper() == ch.eavesdropper());
    }
    const auto path = std::filesystem::temp_directory_path() / "wiretap_channel_io" / "saved.json";
    std::filesystem::create_directories(path.parent_path());
    save_channel(path, reference_channel());
    CHECK(load_channel(path).eavesdropper() == reference_channel().eavesdropper());
}

TEST_CASE("malformed documents report where they fail", "[channel-io]")
{
    CHECK_THAT(message_of("{\n\"H_r\": [[[1, 0]]],\n\"H_e\": [[[1, 0]] \n}"), ContainsSubstring("line 4"));
    CHECK_THAT(message_of(R"({"H_r": [[[1, 0]]]})"), ContainsSubstring("H_e"));
    CHECK_THAT(message_of(R"({"H_r": [], "H_e": [[[1, 0]]]})"), ContainsSubstring("H_r"));
    CHECK_THAT(message_of(R"({"H_r": [[[1, 0]], [[1, 0], [2, 0]]], "H_e": [[[1, 0], [0, 0]]]})"),
               ContainsSubstring("inconsistent"));
    CHECK_THAT(message_of(R"({"H_r": [[[1]]], "H_e": [[[1, 0]]]})"), ContainsSubstring("entry"));
}

TEST_CASE("covariance files with and without a pseudo-covariance", "[channel-io]")
{
    const AugmentedCovariance proper = parse_covariance(R"({"K": [[[2, 0], [0, 1]], [[0, -1], [3, 0]]]})");
    CHECK(proper.is_proper());
    CHECK(proper.covariance().matrix()(0, 1) == Complex(0.0, 1.0));

    const AugmentedCovariance improper = parse_covariance(R"({"K": [[[1, 0]]], "K_tilde": [[[0.5, 0.5]]]})");
    CHECK(improper.pseudo_covariance()(0, 0) == Complex(0.5, 0.5));

    // |Kt| > K violates the augmented PSD condition
    CHECK_THROWS_AS(parse_covariance(R"({"K": [[[1, 0]]], "K_tilde": [[[2, 0]]]})"), InfeasibleSecondOrder);
    CHECK_THROWS_AS(parse_covariance(R"({"K": [[[1, 0], [0, 0]]]})"), DimensionError);
    CHECK_THROWS_AS(parse_covariance(""), ConfigError);

    random::Generator gen(62);
    for (int trial = 0; trial < 20; ++trial)
    {
        const AugmentedCovariance aug = random::feasible_augmented(3, 4, 5.0, gen);
        const AugmentedCovariance back = parse_covariance(serialize_covariance(aug));
        CHECK(back.covariance().matrix() == aug.covariance().matrix());
        CHECK(back.pseudo_covariance() == aug.pseudo_covariance());
    }
}
