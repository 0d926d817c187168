#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zsdiv/zerosum.hpp"

namespace zsdiv {

enum class Status { ok, validation, capability, numerical };

// Exit codes: ok = 0, validation_error = 1, capability_exceeded = 2,
// numerical_instability = 3.
int exit_code(Status s);
std::string to_string(Status s);

struct CommandResult {
    Status status = Status::ok;
    std::string command;
    nlohmann::ordered_json payload;
    std::vector<std::string> diagnostics;
};

// Single top-level object {status, command, payload, diagnostics}.
std::string to_json_text(const CommandResult& r);
std::string to_human_text(const CommandResult& r);

struct CommandOptions {
    std::int64_t max_states = default_max_states;
};

CommandResult cmd_davenport(const std::string& group_spec, const CommandOptions& opts = {});
CommandResult cmd_zerosum_count(const std::string& group_spec, const std::string& seq_literal,
                                const std::string& method, const CommandOptions& opts = {});
CommandResult cmd_zerosum_list(const std::string& group_spec, const std::string& seq_literal,
                               bool maximal, const CommandOptions& opts = {});
CommandResult cmd_quad_factor(std::int64_t d, const std::string& elem,
                              const CommandOptions& opts = {});
CommandResult cmd_quad_divisors(std::int64_t d, const std::string& elem,
                                const CommandOptions& opts = {});
CommandResult cmd_quad_decompose(std::int64_t d, const std::string& alpha,
                                 const std::string& beta, const CommandOptions& opts = {});
CommandResult cmd_quad_classgroup(std::int64_t d, const CommandOptions& opts = {});
CommandResult cmd_quad_irreducible(std::int64_t d, const std::string& elem,
                                   const CommandOptions& opts = {});
CommandResult cmd_verify(const std::string& scope, std::uint64_t seed,
                         const CommandOptions& opts = {});

} // namespace zsdiv
