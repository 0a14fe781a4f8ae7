// SPDX-License-Identifier: Apache-2.0
//
// xband - cross-band spatial channel similarity toolkit
// Copyright (C) 2026 The xband authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xband::cli
{
    // Process exit codes
    enum ExitCode : int
    {
        ok = 0,
        analysis_failure = 1,
        usage_error = 2,
        io_error = 3,
        validation_error = 4,
    };

    // Entry point of the `xband` tool; args excludes the program name
    int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);
}
