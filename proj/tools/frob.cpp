#include "frob/cli/app.hpp"

int main(int argc, char** argv) { return frob::cli::run(argc, argv); }
