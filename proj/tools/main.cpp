#include "cli.hpp"

int main(int argc, char** argv) { return rigidity::cli::main_entry(argc, argv); }
