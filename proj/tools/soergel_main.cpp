#include "soergel/cli.hpp"

int main(int argc, char** argv) { return soergel::cli::main(argc, argv); }
