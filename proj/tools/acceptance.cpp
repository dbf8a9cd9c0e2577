// One line per acceptance criterion; exit status 1 if any fails.
#include <iostream>

#include "suite/suite.hpp"

int main(int argc, char** argv)
{
    bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    auto rep = wb::suite::paper_suite(3, true);
    int failed = 0;
    for (const auto& c : rep.checks) {
        bool ok = c.status == wb::dsl::Status::Pass;
        failed += !ok;
        std::cout << (ok ? "PASS " : "FAIL ") << c.check;
        if (!ok)
            std::cout << " -- " << c.witness;
        std::cout << "\n";
        if (verbose || !ok)
            for (const auto& d : c.details)
                std::cout << "      " << d << "\n";
    }
    std::cout << (rep.checks.size() - static_cast<std::size_t>(failed)) << "/" << rep.checks.size()
              << " criteria pass\n";
    return failed ? 1 : 0;
}
