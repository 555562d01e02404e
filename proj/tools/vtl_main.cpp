#include "vtl/cli.hpp"

int main(int argc, char** argv) { return vtl::run_cli(argc, argv); }
