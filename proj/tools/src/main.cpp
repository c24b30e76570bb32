#include "graphsig/cli.hpp"

int main(int argc, char** argv) { return graphsig::cli::cli_main(argc, argv); }
