#pragma once

#include <stdexcept>
#include <string>

namespace hetsched {

enum class Errc {
    dimension_mismatch,
    structural_zero,
    column_dominance,
    nonpositive_diagonal,
    negative_rate,
    row_sum_mismatch,
    negative_count,
    type_out_of_range,
    infeasible_placement,
    infeasible_type,
    missing_priorities,
    zero_throughput,
    invalid_instance,
    invalid_initial,
    enumeration_too_large,
    bad_range,
    q_too_small,
    invalid_config,
    no_completions,
    parse_error,
    io_error,
};

/// Library-wide exception. `where()` carries the offending (row, column) or
/// (type, resource) pair when one exists; -1 means not applicable.
class Error : public std::runtime_error {
public:
    Error(Errc code, std::string message, int i = -1, int j = -1)
        : std::runtime_error(std::move(message)), code_(code), i_(i), j_(j) {}

    Errc code() const noexcept { return code_; }
    std::pair<int, int> where() const noexcept { return {i_, j_}; }

private:
    Errc code_;
    int i_;
    int j_;
};

} // namespace hetsched
