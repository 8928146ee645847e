#include "segre/cli.hpp"

int main(int argc, char **argv) { return segre::cli::run(argc, argv); }
