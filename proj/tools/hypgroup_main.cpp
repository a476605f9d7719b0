#include "hypgroup/cli.hpp"

int main(int argc, char** argv) { return hypgroup::run_cli(argc, argv); }
