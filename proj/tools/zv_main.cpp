#include "zv/cli.hpp"

int main(int argc, char** argv) { return zv::cli_main(argc, argv); }
