#include "micdt/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

namespace micdt {

namespace {

std::vector<std::string> split_line(const std::string& line, char delimiter) {
    std::vector<std::string> cells;
    std::string cell;
    for (char ch : line) {
        if (ch == delimiter) {
            cells.push_back(cell);
            cell.clear();
        } else {
            cell.push_back(ch);
        }
    }
    cells.push_back(cell);
    return cells;
}

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

double parse_cell(const std::string& raw, std::int64_t row, std::int64_t column) {
    const std::string cell = trim(raw);
    if (cell.empty()) throw ParseError("empty cell", row, column);
    const char* begin = cell.data();
    const char* end = begin + cell.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError("non-numeric cell '" + cell + "'", row, column);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite cell '" + cell + "'", row, column);
    }
    return value;
}

}  // namespace

MultichannelSeries load_csv(const std::string& path, const CsvOptions& options) {
    if (!std::filesystem::exists(path)) throw FileNotFoundError(path);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileNotFoundError(path);

    std::vector<std::string> labels;
    std::vector<std::vector<double>> rows;  // sample-major while reading
    std::string line;
    std::size_t width = 0;
    std::int64_t data_row = 0;

    bool want_header = options.has_header;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() && rows.empty() && labels.empty()) continue;  // leading blanks
        if (line.empty()) continue;                                    // trailing blanks

        auto cells = split_line(line, options.delimiter);
        if (want_header) {
            want_header = false;
            labels.reserve(cells.size());
            for (auto& cell : cells) labels.push_back(trim(cell));
            width = cells.size();
            continue;
        }

        ++data_row;
        if (width == 0) width = cells.size();
        if (cells.size() != width) {
            throw ParseError("row has " + std::to_string(cells.size()) + " cells, expected " +
                                 std::to_string(width),
                             data_row, static_cast<std::int64_t>(cells.size()));
        }
        std::vector<double> parsed(width);
        for (std::size_t j = 0; j < width; ++j) {
            parsed[j] = parse_cell(cells[j], data_row, static_cast<std::int64_t>(j + 1));
        }
        rows.push_back(std::move(parsed));
    }

    if (rows.empty()) throw EmptyInputError(path);

    if (labels.empty()) {
        for (std::size_t j = 0; j < width; ++j) labels.push_back("ch" + std::to_string(j + 1));
    }
    if (labels.size() != width) {
        throw ParseError("header has " + std::to_string(labels.size()) + " labels, data has " +
                         std::to_string(width) + " columns");
    }

    // Drop the time column by name, keep file order for the rest.
    std::vector<std::size_t> keep;
    keep.reserve(width);
    bool time_seen = false;
    for (std::size_t j = 0; j < width; ++j) {
        if (options.time_column && labels[j] == *options.time_column) {
            time_seen = true;
            continue;
        }
        keep.push_back(j);
    }
    if (options.time_column && !time_seen) throw UnknownChannelError(*options.time_column);
    if (keep.empty()) throw EmptyInputError("no data columns remain after dropping the time column");

    MultichannelSeries series;
    series.channels.reserve(keep.size());
    for (std::size_t j : keep) series.channels.push_back(labels[j]);
    series.data.resize(static_cast<Eigen::Index>(keep.size()), static_cast<Eigen::Index>(rows.size()));
    for (std::size_t t = 0; t < rows.size(); ++t) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
            series.data(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(t)) = rows[t][keep[c]];
        }
    }
    series.validate();
    return series;
}

std::string series_to_csv(const MultichannelSeries& series, char delimiter, bool with_header) {
    series.validate();
    std::ostringstream out;
    const Eigen::Index c = series.channel_count();
    const Eigen::Index n = series.sample_count();

    if (with_header) {
        for (Eigen::Index i = 0; i < c; ++i) {
            if (i) out << delimiter;
            out << series.channels[static_cast<std::size_t>(i)];
        }
        out << '\n';
    }
    char buf[64];
    for (Eigen::Index t = 0; t < n; ++t) {
        for (Eigen::Index i = 0; i < c; ++i) {
            if (i) out << delimiter;
            std::snprintf(buf, sizeof(buf), "%.17g", series.data(i, t));
            out << buf;
        }
        out << '\n';
    }
    return out.str();
}

void write_csv(const MultichannelSeries& series, const std::string& path, char delimiter,
               bool with_header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileNotFoundError(path);
    out << series_to_csv(series, delimiter, with_header);
}

}  // namespace micdt
