#include <string>
#include <vector>

#include "circulant/cli.hpp"

int main(int argc, char** argv) {
    return circulant::cli::run(std::vector<std::string>(argv + 1, argv + argc));
}
