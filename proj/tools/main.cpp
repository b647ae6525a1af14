#include "cli.hpp"

int main(int argc, char** argv) { return pego::cli::main_entry(argc, argv); }
