// Copyright 2026 The qdesk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

// Deterministic JSON emission. Reports are written by hand rather than
// through a JSON library so that numbers carry exactly 17 significant
// digits (lossless decimal round trip) and output is byte-stable run to run.
namespace qdesk::jsontext {

/// Formats with %.17g; decimal text parses back to the identical double.
std::string number(double v);
std::string number(std::int64_t v);
std::string number(std::uint64_t v);

std::string quoted(std::string_view s);

std::string boolean(bool v);

}  // namespace qdesk::jsontext
