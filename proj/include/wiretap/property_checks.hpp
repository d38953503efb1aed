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

#ifndef WIRETAP_PROPERTY_CHECKS_HPP
#define WIRETAP_PROPERTY_CHECKS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wiretap
{
    enum class PropertyScope
    {
        all,
        lemma1,     // determinant inequality on positive definite matrices
        theorem2,   // proper signaling dominates on degraded channels
        identities, // algebraic identities behind the rate expressions
        gradients,  // analytic gradients against finite differences
        sampler     // improper Gaussian sampler second moments
    };

    std::string_view to_string(PropertyScope s);
    PropertyScope parse_property_scope(std::string_view s);

    struct PropertyOptions
    {
        PropertyScope scope = PropertyScope::all;
        std::size_t instances = 1000; // random instances per property
        std::uint64_t seed = 0;
        bool inject_fault = false;    // reverse the checked inequalities (self-test of the harness)
    };

    struct PropertyResult
    {
        std::string name;
        std::size_t passed = 0;
        std::size_t total = 0;
        double worst = 0.0;     // worst observed value of the checked quantity
        double tolerance = 0.0; // bound that quantity is compared against
        bool ok() const noexcept { return total > 0 && passed == total; }
    };

    struct PropertyReport
    {
        std::vector<PropertyResult> results;
        bool pass() const;
        std::string render() const;
    };

    PropertyReport check_properties(const PropertyOptions &opts);
}

#endif
