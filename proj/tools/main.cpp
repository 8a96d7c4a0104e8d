#include "isoclass/report.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return isoclass::run_cli(argc, argv, std::cout, std::cerr);
}
