#include "zns/cli.hpp"

int main(int argc, char** argv) { return zns::run(argc, argv); }
