#include "dlw/cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return dlw::cli::run(argc, argv, std::cout, std::cerr);
}
