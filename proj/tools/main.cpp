#include "compdist/cli.hpp"

int main(int argc, char** argv) { return compdist::cli_main(argc, argv); }
