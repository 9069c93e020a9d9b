#include "fixpoint/schedule.hpp"

#include <cmath>
#include <stdexcept>

namespace fixpoint {

namespace {

void require_unit_range(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw std::invalid_argument("schedule values must lie in [0,1]");
    }
}

} // namespace

Schedule Schedule::constant(double c) {
    require_unit_range(c);
    Schedule s;
    s.kind_ = Kind::constant;
    s.c_ = c;
    s.attested_ = c > 0.0;
    return s;
}

Schedule Schedule::harmonic() {
    Schedule s;
    s.kind_ = Kind::harmonic;
    s.attested_ = true;
    return s;
}

Schedule Schedule::table(std::vector<double> values, bool divergent_sum_attested) {
    if (values.empty()) throw std::invalid_argument("schedule table must be nonempty");
    for (const double v : values) require_unit_range(v);
    Schedule s;
    s.kind_ = Kind::table;
    s.values_ = std::move(values);
    s.attested_ = divergent_sum_attested;
    return s;
}

double Schedule::value(std::size_t n) const noexcept {
    switch (kind_) {
        case Kind::constant:
            return c_;
        case Kind::harmonic:
            return 1.0 / static_cast<double>(n + 1);
        case Kind::table:
            return n < values_.size() ? values_[n] : values_.back();
    }
    return 0.0;
}

ScheduleSpec ScheduleSpec::constant_all(double c) {
    return ScheduleSpec{Schedule::constant(c), Schedule::constant(c), Schedule::constant(c)};
}

} // namespace fixpoint
