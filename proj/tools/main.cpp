#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
    const auto inv = flexcool::cli::run_cli(argc, argv);
    std::cout << inv.out;
    std::cerr << inv.err;
    return inv.exit_code;
}
