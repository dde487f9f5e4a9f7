#include "cli/commands.hpp"

int main(int argc, char** argv) { return gispec::cli::run(argc, argv); }
