#include <iostream>

#include "lff/io/commands.hpp"

int main(int argc, char** argv)
{
    return lff::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
