#include <mpart/cli.hh>

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return mpart::run_cli(std::move(args), std::cout, std::cerr);
}
