#include <iostream>

#include "awfslab/awfslab.hpp"

using namespace awfslab;

int main() {
    harness::SuiteOptions opt;
    opt.seed = cli::default_seed();
    harness::Coverage cov;
    int status = 0;
    for (const auto& c : harness::acceptance(opt, cov)) {
        std::cout << "criterion " << c.id << ": " << (c.pass() ? "PASS" : "FAIL") << " (" << c.title;
        if (!c.pass() && c.known_unattainable) std::cout << ", known counterexample";
        std::cout << ")\n";
        for (const auto& part : c.parts) {
            std::cout << "  " << part.name << ": " << (part.report.ok() ? "ok" : "violated");
            if (!part.detail.empty()) std::cout << ", " << part.detail;
            std::cout << "\n";
            if (!part.report.ok()) {
                std::string summary = part.report.summary(3);
                std::size_t start = 0;
                while (start < summary.size()) {
                    std::size_t end = summary.find('\n', start);
                    if (end == std::string::npos) end = summary.size();
                    std::cout << "    " << summary.substr(start, end - start) << "\n";
                    start = end + 1;
                }
            }
        }
        if (!c.pass() && !c.known_unattainable) status = 1;
    }
    return status;
}
