#include <iostream>
#include <vector>

#include "protogame/runner.hpp"

int main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    protogame::RunResult result = protogame::run(args);
    if (!result.output.empty()) std::cout << result.output;
    if (!result.diagnostics.empty()) std::cerr << result.diagnostics;
    return result.exit_code;
}
