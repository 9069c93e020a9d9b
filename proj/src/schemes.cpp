#include "fixpoint/schemes.hpp"

namespace fixpoint {

std::string_view scheme_name(SchemeKind kind) noexcept {
    switch (kind) {
        case SchemeKind::picard: return "Picard";
        case SchemeKind::mann: return "Mann";
        case SchemeKind::ishikawa: return "Ishikawa";
        case SchemeKind::picard_mann: return "PicardMann";
        case SchemeKind::sp: return "SP";
        case SchemeKind::cr: return "CR";
        case SchemeKind::picard_s: return "PicardS";
        case SchemeKind::new_two_step: return "NewTwoStep";
    }
    return "?";
}

std::optional<SchemeKind> scheme_from_name(std::string_view name) noexcept {
    for (const SchemeKind k : all_schemes) {
        if (scheme_name(k) == name) return k;
    }
    return std::nullopt;
}

SchemeUsage scheme_usage(SchemeKind kind) noexcept {
    switch (kind) {
        case SchemeKind::picard: return {false, false, false};
        case SchemeKind::mann: return {true, false, false};
        case SchemeKind::ishikawa: return {true, true, false};
        case SchemeKind::picard_mann: return {true, false, false};
        case SchemeKind::sp: return {true, true, true};
        case SchemeKind::cr: return {true, true, true};
        case SchemeKind::picard_s: return {false, true, true};
        case SchemeKind::new_two_step: return {true, true, false};
    }
    return {false, false, false};
}

std::string_view stop_reason_name(StopReason r) noexcept {
    switch (r) {
        case StopReason::tolerance_reached: return "tolerance reached";
        case StopReason::max_iter: return "max_iter";
        case StopReason::divergence_guard: return "divergence guard";
    }
    return "?";
}

} // namespace fixpoint
