#include "mhw/cli.hpp"

int main(int argc, char** argv) { return mhw::run_cli(argc, argv); }
