#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace inmatch {

enum class errc {
    self_loop,
    vertex_out_of_range,
    not_an_edge,
    malformed_header,
    truncated_body,
    trailing_garbage,
    byte_out_of_range,
    graph_too_large,
    bad_token,
    count_mismatch,
    inconsistent_inputs,
    bad_spec,
    budget_exhausted,
    theorem_violation,
    precondition_violated,
    max_degree_exceeded,
};

const char* to_string(errc code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (notably the CLI) can map it onto an exit status.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

class budget_exhausted : public error {
public:
    explicit budget_exhausted(std::size_t nodes)
        : error(errc::budget_exhausted,
                "search budget exhausted after " + std::to_string(nodes) + " nodes"),
          nodes_(nodes) {}

    std::size_t nodes() const noexcept { return nodes_; }

private:
    std::size_t nodes_;
};

} // namespace inmatch
