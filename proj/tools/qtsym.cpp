#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "qtsym/cli.hpp"

namespace {

bool verb_reads_stdin(const std::vector<std::string>& args) {
    if (args.empty()) return false;
    const std::string& verb = args.front();
    if (verb != "filling-stats" && verb != "elevate-filling" && verb != "symmetry") return false;
    for (const auto& a : args) {
        if (a == "--file" || a.rfind("--file=", 0) == 0 || a == "--help" || a == "-h") return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::string input;
    if (verb_reads_stdin(args)) {
        input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    const auto result = qtsym::cli::run(args, input);
    std::cout << result.out;
    std::cerr << result.err;
    return result.exit_code;
}
