#include "nsq/cli.hpp"

int main(int argc, char** argv) { return nsq::main_cli(argc, argv); }
