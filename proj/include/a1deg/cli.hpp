#pragma once

#include "a1deg/field.hpp"

#include "json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace a1deg::cli {

inline constexpr std::uint64_t kDefaultSeed = 0xA1DE65EEDull;

enum class Command { degree, local, duplicant, dsum, nsum, verify_ltg, selftest };

struct Request {
    Command command = Command::selftest;
    Field field = Field::rationals();
    // Expressions for degree/local/nsum/verify-ltg, "point=expression"
    // entries for dsum, an optional topic for selftest.
    std::vector<std::string> inputs;
    std::string roots;          // duplicant: "r:e,r:e,..."
    std::string at;             // local: the root to expand at
    std::string lc = "1";       // duplicant: leading coefficient
    std::uint64_t seed = kDefaultSeed;
    long random_count = 0;      // verify-ltg: instances to sample (0 = explicit input)
};

struct RunResult {
    int exit_code = 0;          // 0 ok, 1 verification failed, 2 input error
    nlohmann::json document;
    std::string text;
};

// Pure dispatcher: never touches process state, never prints, never reads
// the clock, so a (command, seed) pair always yields the same document.
RunResult run(const Request& req);

// "Q" or "Fp:<prime>".
Field parse_field_spec(const std::string& spec);

} // namespace a1deg::cli
