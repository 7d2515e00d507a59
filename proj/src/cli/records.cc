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

#include "jqb/cli/records.h"

#include <cinttypes>
#include <cstdio>
#include <json.hpp>
#include <stdexcept>

namespace jqb::cli {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

std::string cell_text(const Cell &c, Format f) {
    return std::visit(
        [f](const auto &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, double>) {
                return format_number(v);
            } else if constexpr (std::is_same_v<T, int64_t>) {
                return std::to_string(v);
            } else if constexpr (std::is_same_v<T, bool>) {
                return v ? "true" : "false";
            } else {
                return f == Format::Csv ? v : nlohmann::json(v).dump();
            }
        },
        c);
}

}  // namespace

TableWriter::TableWriter(Format format, std::vector<std::string> columns, const Provenance &p)
    : format_(format), columns_(std::move(columns)) {
    char hash[17];
    std::snprintf(hash, sizeof(hash), "%016" PRIx64, p.config_hash);
    if (format_ == Format::Csv) {
        out_ << "# jqb " << JQB_VERSION << " command=" << p.command << " config_hash=" << hash << " seed=" << p.seed
             << "\n";
        for (size_t i = 0; i < columns_.size(); ++i) {
            out_ << (i ? "," : "") << columns_[i];
        }
        out_ << "\n";
    } else {
        nlohmann::ordered_json j;
        j["provenance"] = {{"version", JQB_VERSION}, {"command", p.command}, {"config_hash", hash}, {"seed", p.seed}};
        out_ << j.dump() << "\n";
    }
}

void TableWriter::row(const std::vector<Cell> &cells) {
    if (cells.size() != columns_.size()) {
        throw std::invalid_argument("row has " + std::to_string(cells.size()) + " cells, table has " +
                                    std::to_string(columns_.size()) + " columns");
    }
    if (format_ == Format::Csv) {
        for (size_t i = 0; i < cells.size(); ++i) {
            out_ << (i ? "," : "") << cell_text(cells[i], format_);
        }
    } else {
        out_ << "{";
        for (size_t i = 0; i < cells.size(); ++i) {
            out_ << (i ? "," : "") << nlohmann::json(columns_[i]).dump() << ":" << cell_text(cells[i], format_);
        }
        out_ << "}";
    }
    out_ << "\n";
}

const std::vector<std::string> &cycle_columns() {
    static const std::vector<std::string> cols = {"protocol", "gamma0", "T",   "theta",   "ergotropy",
                                                  "Ed",       "Ec",     "eta", "eff_work"};
    return cols;
}

std::vector<Cell> cycle_cells(const CycleEnergetics &c) {
    std::vector<Cell> cells = {std::string(protocol_name(c.protocol)), c.gamma0, c.temperature(), c.theta,
                               c.extracted_work, c.e_disconnect, c.e_connect};
    if (c.efficiency) {
        cells.emplace_back(*c.efficiency);
        cells.emplace_back(*c.efficient_work);
    } else {
        cells.emplace_back(std::string("degenerate"));
        cells.emplace_back(std::string("degenerate"));
    }
    return cells;
}

namespace {

std::vector<std::string> split_csv_line(const std::string &line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != '\r') {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

double to_double(const std::string &s, size_t line_no) {
    try {
        size_t used = 0;
        double v = std::stod(s, &used);
        if (used != s.size()) {
            throw std::invalid_argument(s);
        }
        return v;
    } catch (const std::exception &) {
        throw UsageError("line " + std::to_string(line_no) + ": not a number '" + s + "'");
    }
}

}  // namespace

std::vector<CycleEnergetics> read_cycle_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    bool header_seen = false;
    std::vector<CycleEnergetics> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::vector<std::string> f = split_csv_line(line);
        if (!header_seen) {
            if (f != cycle_columns()) {
                throw UsageError("line " + std::to_string(line_no) + ": unexpected header");
            }
            header_seen = true;
            continue;
        }
        if (f.size() != cycle_columns().size()) {
            throw UsageError("line " + std::to_string(line_no) + ": expected 9 fields");
        }
        CycleEnergetics c;
        try {
            c.protocol = parse_protocol(f[0]);
        } catch (const std::invalid_argument &e) {
            throw UsageError("line " + std::to_string(line_no) + ": " + e.what());
        }
        c.gamma0 = to_double(f[1], line_no);
        c.beta = 1.0 / to_double(f[2], line_no);
        c.theta = to_double(f[3], line_no);
        c.extracted_work = to_double(f[4], line_no);
        c.e_disconnect = to_double(f[5], line_no);
        c.e_connect = to_double(f[6], line_no);
        if (f[7] == "degenerate") {
            c.status = CycleStatus::DegenerateCost;
        } else {
            c.efficiency = to_double(f[7], line_no);
            c.efficient_work = to_double(f[8], line_no);
        }
        rows.push_back(std::move(c));
    }
    if (!header_seen) {
        throw UsageError("input has no header line");
    }
    return rows;
}

}  // namespace jqb::cli
