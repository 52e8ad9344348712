#include "spingrass/cli.hpp"

int main(int argc, char** argv) { return spingrass::cli::run(argc, argv); }
