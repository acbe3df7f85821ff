#include "ollp/cli.hpp"

int main(int argc, char** argv) { return ollp::cli::run(argc, argv); }
