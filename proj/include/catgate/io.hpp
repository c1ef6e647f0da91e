// Copyright 2026 The catgate Authors
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

#ifndef CATGATE_IO_HPP
#define CATGATE_IO_HPP

#include <array>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "catgate/error.hpp"
#include "catgate/grid.hpp"
#include "catgate/states.hpp"

namespace catgate::io {

/// Shortest decimal that parses back to the same double.
inline std::string format_number(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), res.ptr);
}

inline double parse_number(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw Error(ErrorKind::InvalidConfig, "cannot parse number '" + std::string(text) + "'");
    }
    return v;
}

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

/// Writes to `path` through a sibling temporary and a rename, so readers never
/// observe a partial file.
inline void write_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorKind::InvalidConfig, "cannot write " + tmp.string());
        out << contents;
        if (!out) throw Error(ErrorKind::InvalidConfig, "failed writing " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

/// CSV body with '#'-prefixed metadata lines and a header row.
class CsvTable {
public:
    CsvTable(std::vector<std::string> columns, std::vector<std::string> metadata = {})
        : columns_(std::move(columns)), metadata_(std::move(metadata)) {}

    /// Empty optionals become empty fields.
    void add_row(const std::vector<std::optional<double>>& row) { rows_.push_back(row); }
    void add_row(const std::vector<double>& row) {
        rows_.emplace_back(row.begin(), row.end());
    }

    std::string str() const {
        std::ostringstream os;
        for (const auto& m : metadata_) os << "# " << m << '\n';
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            os << (c ? "," : "") << columns_[c];
        }
        os << '\n';
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c) os << ',';
                if (row[c]) os << format_number(*row[c]);
            }
            os << '\n';
        }
        return os.str();
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::string> metadata_;
    std::vector<std::vector<std::optional<double>>> rows_;
};

/// Numeric rows of a CSV file; '#' lines are skipped, as is a first row that
/// does not parse as numbers (a header). Empty fields read as NaN.
inline std::vector<std::vector<double>> read_numeric_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<double> row;
        try {
            for (const auto& field : split(line, ',')) {
                row.push_back(field.empty() ? std::numeric_limits<double>::quiet_NaN()
                                            : parse_number(field));
            }
        } catch (const Error&) {
            if (first) {
                first = false;
                continue;
            }
            throw;
        }
        first = false;
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Custom input table from (x, Re, Im) rows.
inline CustomTable read_amplitude_table(std::istream& in) {
    CustomTable table;
    for (const auto& row : read_numeric_csv(in)) {
        if (row.size() != 3 || !std::isfinite(row[0]) || !std::isfinite(row[1]) ||
            !std::isfinite(row[2])) {
            throw Error(ErrorKind::InvalidConfig, "amplitude table rows must be x,re,im");
        }
        table.x.push_back(row[0]);
        table.amps.emplace_back(row[1], row[2]);
    }
    return table;
}

inline CustomTable read_amplitude_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidConfig, "cannot open " + path.string());
    return read_amplitude_table(in);
}

}  // namespace catgate::io

#endif  // CATGATE_IO_HPP
