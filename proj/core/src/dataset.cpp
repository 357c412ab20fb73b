#include "mvrcg/dataset.hpp"

#include <charconv>
#include <cmath>
#include <unordered_set>

#include "mvrcg/errors.hpp"
#include "mvrcg/graph_io.hpp"

namespace mvrcg {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace

Dataset parse_csv(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const auto end = text.find('\n', pos);
        auto line = trim(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
        if (!line.empty()) lines.push_back(line);
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    if (lines.empty()) throw ParseError("csv: missing header row");

    Dataset data;
    std::unordered_set<std::string> names;
    for (auto name : split_fields(lines.front())) {
        if (name.empty()) throw ParseError("csv: empty column name");
        if (!names.emplace(name).second) throw ParseError("csv: duplicate column '" + std::string(name) + "'");
        data.columns.emplace_back(name);
    }

    const auto p = static_cast<Eigen::Index>(data.columns.size());
    data.rows.resize(static_cast<Eigen::Index>(lines.size() - 1), p);
    for (std::size_t r = 1; r < lines.size(); ++r) {
        const auto fields = split_fields(lines[r]);
        if (static_cast<Eigen::Index>(fields.size()) != p) {
            throw ParseError("csv row " + std::to_string(r) + ": expected " + std::to_string(p) + " fields, got " +
                             std::to_string(fields.size()));
        }
        for (Eigen::Index c = 0; c < p; ++c) {
            const auto f = fields[static_cast<std::size_t>(c)];
            double value = 0.0;
            const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
            if (f.empty() || ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(value)) {
                throw ParseError("csv row " + std::to_string(r) + ", column '" + data.columns[static_cast<std::size_t>(c)] +
                                 "': not a number: '" + std::string(f) + "'");
            }
            data.rows(static_cast<Eigen::Index>(r - 1), c) = value;
        }
    }
    return data;
}

Dataset read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

std::string format_csv(const Dataset& data) {
    std::string out;
    for (std::size_t c = 0; c < data.columns.size(); ++c) {
        if (c > 0) out += ',';
        out += data.columns[c];
    }
    out += '\n';
    char buf[64];
    for (Eigen::Index r = 0; r < data.rows.rows(); ++r) {
        for (Eigen::Index c = 0; c < data.rows.cols(); ++c) {
            if (c > 0) out += ',';
            const auto res = std::to_chars(buf, buf + sizeof buf, data.rows(r, c));
            out.append(buf, res.ptr);
        }
        out += '\n';
    }
    return out;
}

void write_csv(const std::filesystem::path& path, const Dataset& data) { write_file_atomic(path, format_csv(data)); }

}  // namespace mvrcg
