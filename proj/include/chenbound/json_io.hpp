// Copyright 2026 The chenbound Authors
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

// Strict JSON reading and writing for parameters, search specs, results
// and reports. Readers reject unknown keys and name the offending path.

#pragma once

#include <json.hpp>
#include <string>

#include "chenbound/analytic_constants.hpp"
#include "chenbound/parameter_optimizer.hpp"
#include "chenbound/report.hpp"
#include "chenbound/theorem_engine.hpp"

namespace chenbound::json_io {

using nlohmann::json;
using nlohmann::ordered_json;

// Numbers may be JSON numbers or strings such as "10^4.27".
double read_real(const json& v, const std::string& path);

// Missing keys keep the values already in `into`.
void read_params(const json& j, ChenParams& into, const std::string& path = "params");
ordered_json write_params(const ChenParams& p);

// "box" may be "around", "degenerate" or an object of ranges
// {"u": {"lo": .., "hi": .., "scale": "log"}, ...}.
void read_search(const json& j, SearchSpec& into, const std::string& path = "search");
ordered_json write_search(const SearchSpec& s);

ordered_json write_result(const SearchResult& r, const SearchSpec& s);
ordered_json write_report(const VerificationReport& r);
ordered_json write_constants(const ConstantsBundle& b, const std::vector<ConstantCheck>& checks);
ordered_json write_sensitivity(const std::vector<SensitivityRow>& rows);

// Parses text, turning syntax errors into UsageError.
json parse(const std::string& text, const std::string& source);

}  // namespace chenbound::json_io
