#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qtsym::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUnknownVerb = 64;

struct Result {
    int exit_code = kExitOk;
    std::string out;
    std::string err;
};

/// Runs one command. `args` excludes the program name; args[0] is the verb.
/// `input` stands in for standard input.
[[nodiscard]] Result run(const std::vector<std::string>& args, std::string_view input = {});

[[nodiscard]] const std::vector<std::string>& verbs();

struct SelfTestItem {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// The worked examples with published values, each checked live.
[[nodiscard]] std::vector<SelfTestItem> run_selftest();

}  // namespace qtsym::cli
