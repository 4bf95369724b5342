#include "homtqft/cli.hpp"
int main(int argc, char** argv) { return homtqft::cli_run(argc, argv); }
