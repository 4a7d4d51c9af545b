#include <iostream>
#include <string>
#include <vector>

#include "dispatch.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const ordered_shuffle::cli::CliResult r = ordered_shuffle::cli::dispatch(args);
    std::cout << r.out;
    std::cerr << r.err;
    return r.exit_code;
}
