#include <ila/cli.hpp>

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    ila::Report rep = ila::run_command(args);
    std::cout << rep.text;
    return rep.status;
}
