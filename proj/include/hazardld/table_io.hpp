#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace hazardld {

/// Decimal with 17 significant digits ("%.17g"), which round-trips binary64
/// exactly; infinities render as "inf" / "-inf".
[[nodiscard]] std::string format_value(double v);

/// Inverse of format_value; throws on anything but a full numeric token.
[[nodiscard]] double parse_value(std::string_view token);

/// One rectangular numeric table with a header row.
struct csv_table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

[[nodiscard]] std::string to_csv(const csv_table& table);
/// Several tables in one document, separated by single blank lines.
[[nodiscard]] std::string to_csv(const std::vector<csv_table>& tables);

[[nodiscard]] std::vector<csv_table> parse_csv(std::string_view text);

void write_text_file(const std::string& path, std::string_view content);
[[nodiscard]] std::string read_text_file(const std::string& path);

}  // namespace hazardld
