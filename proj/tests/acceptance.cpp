#include <iostream>

#include "gwpow/verify/acceptance.hpp"

int main()
{
    bool ok = true;
    for (const auto& r : gwpow::verify::run_acceptance()) {
        std::cout << gwpow::verify::summary_line(r) << "\n";
        for (const auto& f : r.failures) {
            std::cout << "    " << f << "\n";
        }
        for (const auto& n : r.notes) {
            std::cout << "    " << n << "\n";
        }
        ok = ok && (r.report_only || r.passed());
    }
    return ok ? 0 : 1;
}
