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

#include "qnet/csv.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace qnet {

std::string format_value(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    if (res.ec != std::errc{}) throw std::runtime_error("format_value: conversion failed");
    return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& header)
    : out_(path, std::ios::binary) {
    if (!out_) throw std::runtime_error("csv: cannot open " + path);
    columns_ = header.size();
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << header[i];
    }
    out_ << '\n';
}

void CsvWriter::write_row(const std::vector<double>& values) {
    if (values.size() != columns_) throw std::invalid_argument("csv: column count mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out_ << ',';
        out_ << format_value(values[i]);
    }
    out_ << '\n';
}

void CsvWriter::write_row(const std::vector<double>& values, const std::string& status) {
    if (values.size() + 1 != columns_) throw std::invalid_argument("csv: column count mismatch");
    for (const double v : values) out_ << format_value(v) << ',';
    out_ << status << '\n';
}

void CsvWriter::flush() { out_.flush(); }

} // namespace qnet
