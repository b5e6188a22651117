#include <string>
#include <vector>

#include "quatknot/cli.hpp"

int main(int argc, char** argv) {
    // CLI11 wants the arguments reversed and without the program name
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    return quatknot::cli::run(std::move(args));
}
