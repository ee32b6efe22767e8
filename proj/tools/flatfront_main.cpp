#include "flatfront/cli.hpp"

int main(int argc, char** argv) { return flatfront::run_cli(argc, argv); }
