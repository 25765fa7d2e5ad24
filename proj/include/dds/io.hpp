// Copyright 2026 The DDS Workbench Authors
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

#include <filesystem>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dds {

/// Shortest round-trip decimal form ("nan"/"inf" for non-finite values).
std::string format_double(double value);

/// Comma-joined row terminated by '\n'.
std::string csv_row(std::initializer_list<std::string> fields);
std::string csv_row(const std::vector<std::string> &fields);

std::string read_text_file(const std::filesystem::path &path);

/// Writes to a sibling temporary file and renames it over `path`, creating
/// parent directories as needed.
void write_file_atomic(const std::filesystem::path &path, std::string_view content);

}  // namespace dds
