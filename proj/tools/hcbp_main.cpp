#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "hcbp/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return hcbp::run_cli(args, std::cout, std::cerr);
    } catch (const std::exception& error) {
        std::cerr << "hcbp: " << error.what() << '\n';
        return 2;
    }
}
