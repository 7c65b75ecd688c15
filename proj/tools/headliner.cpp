#include "headliner/cli.hpp"

int main(int argc, char **argv) { return headliner::cli::run(argc, argv); }
