#pragma once

#include <stdexcept>
#include <string>

namespace airc {

/// Error codes for every failure mode the public API can report.
enum class ErrorCode {
    index_out_of_range,
    self_loop_rejected,
    duplicate_edge_conflict,
    isolated_node_in_plain_mode,
    dimension_mismatch,
    non_finite_input,
    convergence_failure,
    zero_matrix,
    non_contractive,
    invalid_fraction,
    invalid_lambda_order,
    invalid_lambda,
    invalid_beta,
    invalid_slope,
    divergent_series,
    tape_consumed,
    empty_mask,
    empty_edge_set,
    missing_file,
    parse_error,
    inconsistent_lengths,
    label_out_of_range,
    io_error,
    overwrite_refused,
    invalid_argument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool condition, ErrorCode code, const std::string& message) {
    if (!condition) raise(code, message);
}

}  // namespace airc
