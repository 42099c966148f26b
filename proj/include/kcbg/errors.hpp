#pragma once

#include <stdexcept>
#include <string>

namespace kcbg {

// Every failure mode the library reports. Codes are stable; CLI and
// bindings map them to diagnostics.
enum class errc {
    index_out_of_range,
    duplicate_edge,
    not_surplus,
    order_mismatch,
    parse_error,
    invalid_order,
    invalid_a,
    not_integer_a,
    invalid_profile_args,
    invalid_c,
    invalid_kappa,
    not_sorted,
    budget_exceeded,
    unequal_classes,
    not_perfect_matching,
    adjacent_pair,
    same_vertex,
    adjacent_pair_in_set,
    degenerate,
    too_few_vertices,
    not_kcb,
    io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace kcbg
