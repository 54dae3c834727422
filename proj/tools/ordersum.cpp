#include <iostream>

#include "ordersum/cli.hpp"

int main(int argc, char **argv)
{
  return ordersum::run_cli(argc, argv, std::cout, std::cerr);
}
