#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sg {

enum class ErrorCode {
    syntax,
    reversed_interval,
    invalid_argument,
    unknown_node,
    duplicate_node,
    side_violation,
    self_loop,
    containment,
    weight_support,
    kind_mismatch,
    undefined_horizon,
    not_subset,
    unweighted,
};

std::string_view to_string(ErrorCode code);

/// Input or contract violation. Undefined metric values are not errors;
/// they are reported as an empty optional by the metric functions.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message, int line = 0)
        : std::runtime_error(message), code_(code), line_(line) {}

    ErrorCode code() const { return code_; }
    /// 1-based source line for parse errors, 0 otherwise.
    int line() const { return line_; }

private:
    ErrorCode code_;
    int line_;
};

}  // namespace sg
