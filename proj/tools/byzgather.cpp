#include "byzgather/cli.hpp"

int main(int argc, char** argv) { return byzgather::cli_main(argc, argv); }
