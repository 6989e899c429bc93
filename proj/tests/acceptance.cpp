// Full-size acceptance run: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <exception>
#include <string>

#include "hq/cli.hpp"
#include "hq/selftest.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Two complete `selftest --full` invocations through the command dispatcher.
hq::CriterionOutcome selftest_twice() {
  const std::vector<std::string> args = {"selftest", "--full", "--json", "-"};
  hq::CommandResult first = hq::dispatch(args);
  hq::CommandResult second = hq::dispatch(args);
  const std::string a = first.machine.dump(2), b = second.machine.dump(2);
  if (a != b) return {false, "two full selftest reports differ"};
  if (first.exit_code != 0) return {false, "identical reports, but selftest itself failed"};
  return {true, "two full selftest reports are byte-identical (" + std::to_string(a.size()) + " bytes)"};
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : hq::acceptance_criteria()) {
    const auto start = Clock::now();
    hq::CriterionOutcome o;
    try {
      o = c.id == 9 ? selftest_twice() : c.run(true);
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = seconds_since(start);
    const bool in_time = c.time_limit_seconds <= 0 || elapsed < c.time_limit_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failures;

    std::string limit = c.time_limit_seconds > 0 ? "limit " + std::to_string(static_cast<int>(c.time_limit_seconds)) + " s"
                                                 : "no time limit";
    std::printf("criterion %d [%s] %s (%.2f s, %s, exact): %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title.c_str(),
                elapsed, limit.c_str(), o.detail.c_str(), in_time ? "" : " [time limit exceeded]");
    std::fflush(stdout);
  }
  std::printf("%s: %d of %zu criteria failed\n", failures ? "FAIL" : "PASS", failures,
              hq::acceptance_criteria().size());
  return failures ? 1 : 0;
}
