#include "dmv/cli.hpp"

int main(int argc, char** argv) { return dmv::cli::run(argc, argv); }
