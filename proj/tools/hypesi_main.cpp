#include "hypesi/cli.hpp"

int main(int argc, char** argv) { return hypesi::run(argc, argv); }
