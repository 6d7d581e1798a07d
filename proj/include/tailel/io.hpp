#pragma once

#include "tailel/intervals.hpp"
#include "tailel/montecarlo.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tailel {

/// A single-column numeric CSV. Blank lines and lines starting with '#' are
/// ignored; a non-numeric first data line is taken as a header. Only the
/// first comma-separated field of each line is read.
struct DatasetFile {
    std::string path;
    std::optional<std::string> header;
    std::vector<double> values; ///< accepted values, file order
    std::size_t parsedCount = 0;
    std::size_t rejectedCount = 0; ///< non-numeric, non-finite or <= 0
};

DatasetFile parseDataset(std::string_view text, std::string path = {});
/// Throws DataError if the file cannot be read.
DatasetFile loadDataset(const std::string& path);

/// Locale-independent parse of a decimal number ('.' separator only).
std::optional<double> parseReal(std::string_view token);

/// Fixed notation with 6 decimals; "inf", "-inf" and "nan" otherwise.
std::string formatFixed6(double v);

/// Coverage report as CSV: '#' comment header echoing the plan, then
/// k,method,coverage,mc_stderr,avg_length,degenerate_count.
std::string coverageCsv(const CoverageReport& report);
/// Coverage report as a JSON document (no timing fields, so output is
/// reproducible).
std::string coverageJson(const CoverageReport& report);
/// Reads back the data rows of coverageCsv() output.
std::vector<CoverageRow> parseCoverageCsv(std::string_view text);

} // namespace tailel
