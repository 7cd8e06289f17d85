#include "cascal/cli.hpp"

int main(int argc, char** argv) { return cascal::run_cli(argc, argv); }
