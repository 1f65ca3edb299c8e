#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
    using namespace gravheun::cli;
    RunConfig cfg;
    try {
        cfg = parse_args(argc, argv);
    } catch (const HelpRequested& h) {
        std::cout << h.what();
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "gravheun: usage: " << e.what() << "\nRun with --help for more information.\n";
        return 2;
    }
    return run(cfg, std::cout, std::cerr);
}
