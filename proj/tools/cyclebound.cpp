#include "cyclebound/cli.hpp"

int main(int argc, char** argv) { return cyclebound::cli::run(argc, argv); }
