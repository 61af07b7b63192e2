#include "symbisect/cli.hpp"

int main(int argc, char** argv) { return symbisect::cli::run(argc, argv); }
