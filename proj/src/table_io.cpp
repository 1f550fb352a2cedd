#include "hazardld/table_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hazardld {

std::string format_value(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_value(std::string_view token) {
    if (token == "inf") return HUGE_VAL;
    if (token == "-inf") return -HUGE_VAL;
    const std::string cell(token);
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (cell.empty() || end != cell.c_str() + cell.size())
        throw std::runtime_error("not a numeric value: \"" + cell + "\"");
    return v;
}

namespace {

void append_table(std::string& out, const csv_table& table) {
    for (std::size_t c = 0; c < table.header.size(); ++c) {
        if (c) out += ',';
        out += table.header[c];
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += format_value(row[c]);
        }
        out += '\n';
    }
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(line.substr(start));
            break;
        }
        fields.emplace_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return fields;
}

}  // namespace

std::string to_csv(const csv_table& table) {
    std::string out;
    append_table(out, table);
    return out;
}

std::string to_csv(const std::vector<csv_table>& tables) {
    std::string out;
    for (std::size_t i = 0; i < tables.size(); ++i) {
        if (i) out += '\n';
        append_table(out, tables[i]);
    }
    return out;
}

std::vector<csv_table> parse_csv(std::string_view text) {
    std::vector<csv_table> tables;
    csv_table current;
    bool in_table = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? nl : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (line.empty()) {
            if (in_table) {
                tables.push_back(std::move(current));
                current = {};
                in_table = false;
            }
            continue;
        }
        if (!in_table) {
            current.header = split_fields(line);
            in_table = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != current.header.size())
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                                     std::to_string(current.header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        std::vector<double> row;
        row.reserve(fields.size());
        for (const auto& f : fields) {
            try {
                row.push_back(parse_value(f));
            } catch (const std::exception& e) {
                throw std::runtime_error("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        current.rows.push_back(std::move(row));
    }
    if (in_table) tables.push_back(std::move(current));
    return tables;
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error(path + ": cannot open for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out)
        throw std::runtime_error(path + ": write failed");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

}  // namespace hazardld
