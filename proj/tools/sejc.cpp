#include <iostream>

#include "CLI11.hpp"

int main(int argc, char** argv) {
    CLI::App app{"sejc: S-expression to Java compiler"};
    app.require_subcommand(0, 1);
    CLI11_PARSE(app, argc, argv);
    std::cout << app.help() << "\n";
    return 0;
}
