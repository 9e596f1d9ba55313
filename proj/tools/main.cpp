#include "cli.hpp"

int main(int argc, char** argv) { return cattaneo::cli::run(argc, argv); }
