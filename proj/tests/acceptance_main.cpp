#include <algorithm>
#include <iostream>

#include "lrq/acceptance.hpp"

int main() {
    auto results = lrq::acceptance::run_all();
    lrq::acceptance::print(std::cout, results);
    auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
    std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
