#include <iostream>

#include "ydlie/speccli.hpp"

int main(int argc, char **argv)
{
	std::vector<std::string> args(argv + 1, argv + argc);
	return ydlie::run_command(args, std::cout, std::cerr);
}
