#include "cohom_cli/cli.hpp"

#include <exception>
#include <iostream>

int main(int argc, char** argv)
{
    try {
        return cohom::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "cohom: internal error: " << e.what() << '\n';
        return 4;
    }
}
