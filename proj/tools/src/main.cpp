#include "app.hpp"

int main(int argc, char** argv) { return bcsreps::cli::run(argc, argv); }
