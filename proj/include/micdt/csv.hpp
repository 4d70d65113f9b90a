#pragma once

#include <optional>
#include <string>

#include "micdt/series.hpp"

namespace micdt {

struct CsvOptions {
    char delimiter = ',';
    bool has_header = true;
    std::optional<std::string> time_column;  // dropped by name when present
};

// One sample per row, one channel per column, UTF-8. Without a header the
// channels are labeled "ch1".."chC". No quoting support; sensor dumps do not
// quote numeric cells.
MultichannelSeries load_csv(const std::string& path, const CsvOptions& options = {});

// 17 significant digits, enough for bit-exact double round-trips.
void write_csv(const MultichannelSeries& series, const std::string& path, char delimiter = ',',
               bool with_header = true);

std::string series_to_csv(const MultichannelSeries& series, char delimiter = ',',
                          bool with_header = true);

}  // namespace micdt
