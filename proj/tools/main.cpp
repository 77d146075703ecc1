#include "wavefunc/cli.hpp"

int main(int argc, char** argv) { return wavefunc::cli::run(argc, argv); }
