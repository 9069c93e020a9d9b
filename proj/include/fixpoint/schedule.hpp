#pragma once

#include <cstddef>
#include <vector>

namespace fixpoint {

/// One parameter sequence {a_n} with values in [0,1]. The divergent-sum flag
/// records whether Σ a_n = ∞ is known: automatic for positive constants and
/// the harmonic sequence, caller-supplied for tables.
class Schedule {
public:
    enum class Kind { constant, harmonic, table };

    static Schedule constant(double c);
    static Schedule harmonic();
    static Schedule table(std::vector<double> values, bool divergent_sum_attested);

    /// a_n; indexing starts at n = 0. A table repeats its final entry past
    /// the end.
    double value(std::size_t n) const noexcept;

    Kind kind() const noexcept { return kind_; }
    bool divergent_sum_attested() const noexcept { return attested_; }

private:
    Kind kind_ = Kind::constant;
    double c_ = 0.0;
    std::vector<double> values_;
    bool attested_ = false;
};

/// The (α_n, β_n, γ_n) triple consumed by the iteration schemes.
struct ScheduleSpec {
    Schedule alpha;
    Schedule beta;
    Schedule gamma;

    static ScheduleSpec constant_all(double c);
};

} // namespace fixpoint
