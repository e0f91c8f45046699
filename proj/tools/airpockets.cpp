#include "cli.hpp"

int main(int argc, char** argv) { return airpockets::cli::run_cli(argc, argv); }
