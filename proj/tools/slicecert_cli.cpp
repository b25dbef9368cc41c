#include "slicecert/chevalley.hpp"

#include <CLI11.hpp>

#include <cstdio>

// Placeholder entry point; subcommands land together with the verification
// catalog modules.
int main(int argc, char** argv) {
    CLI::App app{"slicecert"};
    app.require_subcommand(0);
    CLI11_PARSE(app, argc, argv);
    std::puts("slicecert: no subcommand given");
    return 2;
}
