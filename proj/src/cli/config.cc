// Copyright 2026 The jqbattery Authors
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

#include "jqb/cli/config.h"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include "jqb/model/sweep.h"

namespace jqb::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t p = s.find(sep, start);
        out.push_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
        if (p == std::string_view::npos) {
            break;
        }
        start = p + 1;
    }
    return out;
}

double parse_number(std::string_view s) {
    s = trim(s);
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
        throw UsageError("not a number: '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "csv") {
        return Format::Csv;
    }
    if (s == "jsonl" || s == "json-lines") {
        return Format::JsonLines;
    }
    throw UsageError("unknown format '" + std::string(s) + "' (expected csv or jsonl)");
}

double parse_value(std::string_view s) {
    s = trim(s);
    size_t p = s.find("pi");
    if (p == std::string_view::npos) {
        return parse_number(s);
    }
    double factor = 1;
    std::string_view head = trim(s.substr(0, p));
    if (head == "-") {
        factor = -1;
    } else if (!head.empty()) {
        if (head.back() != '*') {
            throw UsageError("cannot parse '" + std::string(s) + "'");
        }
        factor = parse_number(head.substr(0, head.size() - 1));
    }
    double v = factor * std::numbers::pi;
    std::string_view tail = trim(s.substr(p + 2));
    if (!tail.empty()) {
        if (tail.front() != '/') {
            throw UsageError("cannot parse '" + std::string(s) + "'");
        }
        double d = parse_number(tail.substr(1));
        if (d == 0) {
            throw UsageError("division by zero in '" + std::string(s) + "'");
        }
        v /= d;
    }
    return v;
}

std::vector<double> parse_grid(std::string_view s) {
    s = trim(s);
    if (s.empty()) {
        throw UsageError("empty grid");
    }
    if (s.find(':') != std::string_view::npos) {
        auto parts = split(s, ':');
        if (parts.size() != 3) {
            throw UsageError("grid must be first:last:step, got '" + std::string(s) + "'");
        }
        try {
            return linear_grid(parse_value(parts[0]), parse_value(parts[1]), parse_value(parts[2]));
        } catch (const std::invalid_argument &e) {
            throw UsageError(std::string("bad grid '") + std::string(s) + "': " + e.what());
        }
    }
    std::vector<double> out;
    for (auto part : split(s, ',')) {
        out.push_back(parse_value(part));
    }
    return out;
}

std::vector<Protocol> parse_protocols(std::string_view s) {
    std::vector<Protocol> out;
    for (auto part : split(s, ',')) {
        try {
            out.push_back(parse_protocol(trim(part)));
        } catch (const std::invalid_argument &e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

uint64_t fnv1a(std::string_view data) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::filesystem::path resolve_output_path(const std::string &requested) {
    if (requested.empty() || requested == "-") {
        return {};
    }
    std::filesystem::path p(requested);
    const char *dir = std::getenv("JQB_OUTPUT_DIR");
    if (p.is_relative() && dir != nullptr && *dir != '\0') {
        return std::filesystem::path(dir) / p;
    }
    return p;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::filesystem::path &path, const std::string &text) {
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot write '" + path.string() + "'");
    }
    out << text;
    out.flush();
    if (!out) {
        throw IoError("error while writing '" + path.string() + "'");
    }
}

}  // namespace jqb::cli
