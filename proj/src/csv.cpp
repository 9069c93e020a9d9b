#include "fixpoint/csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "fixpoint/errors.hpp"

namespace fixpoint {

std::string format_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_trace_csv(std::span<const IterationTrace> traces) {
    std::string out = "n,scheme,x,err,residual\n";
    for (const auto& trace : traces) {
        const std::string name(scheme_name(trace.scheme));
        for (const auto& rec : trace.records) {
            out += std::to_string(rec.n);
            out += ',';
            out += name;
            out += ',';
            out += format_float(rec.x);
            out += ',';
            if (rec.err) out += format_float(*rec.err);
            out += ',';
            out += format_float(rec.residual);
            out += '\n';
        }
    }
    return out;
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

double parse_double_field(std::string_view field) {
    const std::string s(field);
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || s.empty()) {
        throw ConfigError("trace CSV: malformed numeric field '" + s + "'");
    }
    return v;
}

} // namespace

std::vector<TraceCsvRow> parse_trace_csv(std::string_view text) {
    std::vector<TraceCsvRow> rows;
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        const std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "n,scheme,x,err,residual") {
                throw ConfigError("trace CSV: unexpected header");
            }
            header_seen = true;
            continue;
        }
        const auto fields = split_fields(line);
        if (fields.size() != 5) throw ConfigError("trace CSV: expected 5 fields per row");
        TraceCsvRow row;
        row.n = static_cast<std::size_t>(parse_double_field(fields[0]));
        row.scheme = std::string(fields[1]);
        row.x = parse_double_field(fields[2]);
        row.err = fields[3].empty() ? std::optional<double>{}
                                    : std::optional<double>(parse_double_field(fields[3]));
        row.residual = parse_double_field(fields[4]);
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ConfigError("trace CSV: missing header");
    return rows;
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) throw std::runtime_error("short write to " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

} // namespace fixpoint
