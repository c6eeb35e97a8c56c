#include <iostream>

#include <qdivisor/cli.hpp>

int main(int argc, char **argv)
{
    return qdivisor::cli::run(argc, argv, std::cout, std::cerr);
}
