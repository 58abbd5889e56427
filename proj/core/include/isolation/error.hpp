#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace isolation {

enum class ErrorCode {
    endpoint_out_of_range,
    self_loop,
    vertex_out_of_range,
    empty_graph,
    precondition_violation,
    contains_induced_forbidden_cycle,
    internal_case_exhaustion,
    invalid_kind,
    bad_spec,
    inadmissible_backbone,
    order_too_large,
    parse_error,
};

auto to_string(ErrorCode code) -> std::string_view;

class IsolationError : public std::runtime_error {
public:
    IsolationError(ErrorCode code, const std::string & message);

    [[nodiscard]] auto code() const noexcept -> ErrorCode { return _code; }

private:
    ErrorCode _code;
};

} // namespace isolation
