#include <iostream>

#include <rsatoy/cli.hpp>

int main(int argc, char** argv)
{
    return rsatoy::cli::run(argc, argv, std::cout, std::cerr);
}
