#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace lrq::acceptance {

struct Result {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0; // 0 when untimed
};

struct Criterion {
    std::string id;
    double limit_seconds;
    std::function<Result()> run;
};

const std::vector<Criterion>& criteria();
/// Runs every criterion; an exception counts as a failure.
std::vector<Result> run_all();
/// One line per criterion: "PASS|FAIL <id> <seconds>s <detail>".
void print(std::ostream& os, const std::vector<Result>& results);

} // namespace lrq::acceptance
