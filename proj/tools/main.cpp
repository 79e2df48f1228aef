#include "arxdw/cli.hpp"

int main(int argc, char** argv) { return arxdw::cli::run(argc, argv); }
