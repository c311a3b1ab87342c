#include "cli.hpp"

int main(int argc, char** argv) { return pasa::cli::run_cli(argc, argv); }
