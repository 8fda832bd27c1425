#include "hhpainleve/cli.hpp"

int main(int argc, char** argv) { return hhp::cli::run(argc, argv); }
