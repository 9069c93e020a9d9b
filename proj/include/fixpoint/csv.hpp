#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fixpoint/schemes.hpp"

namespace fixpoint {

/// 17 significant digits, '.' decimal separator; enough to round-trip any
/// double exactly.
std::string format_float(double v);

/// Trace CSV with header "n,scheme,x,err,residual", one row per (scheme,
/// iteration), LF line endings. The err field is empty when no fixed point
/// was known.
std::string render_trace_csv(std::span<const IterationTrace> traces);

struct TraceCsvRow {
    std::size_t n;
    std::string scheme;
    double x;
    std::optional<double> err;
    double residual;
};

std::vector<TraceCsvRow> parse_trace_csv(std::string_view text);

/// Writes via a temporary file and rename, so partial files never appear
/// under the final name.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

} // namespace fixpoint
