#include "cli.hpp"

int main(int argc, char** argv) { return helixforge::cli::run(argc, argv); }
