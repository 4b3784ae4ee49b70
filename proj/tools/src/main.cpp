#include "sympflag/cli/commands.hpp"

int main(int argc, char** argv) { return sympflag::cli::run(argc, argv); }
