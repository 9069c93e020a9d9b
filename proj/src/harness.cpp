#include "fixpoint/harness.hpp"

#include <stdexcept>

namespace fixpoint {

std::vector<RatioEntry> rate_ratio_empirical(const IterationTrace& a, const IterationTrace& b) {
    if (!a.fixed_point_summary || !b.fixed_point_summary) {
        throw std::invalid_argument("rate_ratio_empirical: both traces need error data");
    }
    if (std::fabs(*a.fixed_point_summary - *b.fixed_point_summary) >
        1e-9 * (1.0 + std::fabs(*a.fixed_point_summary))) {
        throw std::invalid_argument("rate_ratio_empirical: traces target different fixed points");
    }
    const std::size_t len = std::min(a.records.size(), b.records.size());
    std::vector<RatioEntry> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) {
        const auto& ra = a.records[i];
        const auto& rb = b.records[i];
        if (!ra.err || !rb.err) {
            throw std::invalid_argument("rate_ratio_empirical: record without error data");
        }
        if (*rb.err <= 1e-300) {
            out.push_back({ra.n, std::nullopt});
        } else {
            out.push_back({ra.n, *ra.err / *rb.err});
        }
    }
    return out;
}

} // namespace fixpoint
