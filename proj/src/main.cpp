#include "pomine/cli.hpp"

int main(int argc, char** argv) {
    return pomine::cli::run(argc, argv);
}
