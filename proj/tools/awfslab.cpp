#include <string>
#include <vector>

#include "awfslab/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return awfslab::cli::run_subcommand(args);
}
