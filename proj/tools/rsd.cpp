#include "rsd/run.hpp"

int main(int argc, char** argv) { return rsd::run_cli(argc, argv); }
