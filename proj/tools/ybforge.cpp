#include <ybforge/cli.hpp>

int main(int argc, char** argv)
{
    return ybforge::cli::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
