#include "msing/cli.hpp"

int main(int argc, char** argv) { return msing::cli::run(argc, argv); }
