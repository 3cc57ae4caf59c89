#include <vector>

#include "turan/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return turan::cli::dispatch(std::move(args));
}
