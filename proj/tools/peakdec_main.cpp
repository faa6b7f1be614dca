#include "peakdec/cli.hpp"

int main(int argc, char** argv) { return peakdec::cli::run(argc, argv); }
