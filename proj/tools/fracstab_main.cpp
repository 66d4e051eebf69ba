#include "fracstab/reports.hpp"

int main(int argc, char** argv) { return fracstab::run_cli(argc, argv); }
