// Copyright 2026 The qnet authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Deterministic CSV output: UTF-8, LF line endings, '.' decimal separator,
// 12 significant digits, no locale involvement.

#pragma once

#include <fstream>
#include <string>
#include <vector>

namespace qnet {

// Locale-independent formatting with 12 significant digits.
std::string format_value(double v);

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::vector<std::string>& header);

    void write_row(const std::vector<double>& values);
    void write_row(const std::vector<double>& values, const std::string& status);
    void flush();

private:
    std::ofstream out_;
    std::size_t columns_ = 0;
    bool has_status_ = false;
};

} // namespace qnet
