#include "wittmod/cli.hpp"

int main(int argc, char** argv) { return wittmod::cli_main(argc, argv); }
