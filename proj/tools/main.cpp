#include "cli.hpp"

int main(int argc, char** argv)
{
  return simplex_nodes::cli::run(std::vector<std::string>(argv, argv + argc));
}
