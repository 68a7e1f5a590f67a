#include "miscluster/cli.hpp"

int main(int argc, char** argv) { return miscluster::run_cli(argc, argv); }
