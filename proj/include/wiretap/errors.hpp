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

#ifndef WIRETAP_ERRORS_HPP
#define WIRETAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wiretap
{
    // Base of every error raised by the library. Each subclass maps to one
    // failure mode of an operation's contract.
    class Error : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

#define WIRETAP_DEFINE_ERROR(Name)          \
    class Name : public Error               \
    {                                       \
    public:                                 \
        using Error::Error;                 \
    }

    WIRETAP_DEFINE_ERROR(InvalidMatrix);
    WIRETAP_DEFINE_ERROR(NotPositiveDefinite);
    WIRETAP_DEFINE_ERROR(NotPositiveSemidefinite);
    WIRETAP_DEFINE_ERROR(IndexError);
    WIRETAP_DEFINE_ERROR(DimensionError);
    WIRETAP_DEFINE_ERROR(PartitionError);
    WIRETAP_DEFINE_ERROR(NotSymmetric);
    WIRETAP_DEFINE_ERROR(InfeasibleSecondOrder);
    WIRETAP_DEFINE_ERROR(CountError);
    WIRETAP_DEFINE_ERROR(NotDegraded);
    WIRETAP_DEFINE_ERROR(InfeasibleNoiseCorrelation);
    WIRETAP_DEFINE_ERROR(ConfigError);

#undef WIRETAP_DEFINE_ERROR
}

#endif
