#include "cag/cli.hpp"

int main(int argc, char** argv) { return cag::cli_main(argc, argv); }
