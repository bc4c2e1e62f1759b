#include <vector>
#include <string>

#include "debye/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return debye::run_command(args);
}
