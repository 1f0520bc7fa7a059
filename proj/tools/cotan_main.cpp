#include "cotan/cli.hpp"

int main(int argc, char** argv) { return cotan::cli::run(argc, argv); }
