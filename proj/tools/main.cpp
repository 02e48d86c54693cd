#include "a4link/cli.hpp"

int main(int argc, char** argv) { return a4link::run_cli(argc, argv); }
