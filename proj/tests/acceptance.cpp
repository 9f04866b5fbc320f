// Acceptance suite: reruns every reference computation and checks each
// reported number exactly (exact arithmetic, no tolerances), plus the stated
// wall-clock bounds for the large runs.  One line per criterion.

#include <cstdio>
#include <string>
#include <vector>

#include "dialid/experiments.hpp"

using namespace dialid;

namespace {

int failures = 0;

void report(int number, const std::string& name, const ExperimentReport& rep,
            double time_bound_seconds = 0) {
  bool ok = rep.ok();
  std::string detail;
  for (const ExperimentCheck& c : rep.checks)
    if (!c.pass) detail += " [" + c.name + ": expected " + c.expected + ", got " + c.actual + "]";
  if (time_bound_seconds > 0 && rep.seconds >= time_bound_seconds) {
    ok = false;
    detail += " [time " + std::to_string(rep.seconds) + "s exceeds " +
              std::to_string(time_bound_seconds) + "s]";
  }
  std::printf("criterion %2d: %s  %-28s (%s, %zu checks, %.2fs)%s\n", number,
              ok ? "PASS" : "FAIL", name.c_str(), rep.field_name.c_str(), rep.checks.size(),
              rep.seconds, detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

}  // namespace

int main() {
  ExperimentOptions mod101;
  ExperimentOptions rational;
  rational.rational = true;

  report(1, "diproduct1-deg3", run_experiment("diproduct1-deg3", mod101), 0.1);
  report(2, "diproduct2-deg3", run_experiment("diproduct2-deg3", mod101));
  report(3, "diproduct1-deg5", run_experiment("diproduct1-deg5", mod101), 5.0);
  report(4, "diproduct2-deg5", run_experiment("diproduct2-deg5", mod101));
  report(5, "diproducts-deg5-both", run_experiment("diproducts-deg5-both", mod101), 10.0);
  report(6, "jtd-equivalence", run_experiment("jtd-equivalence", mod101));
  report(7, "jordan-dialgebra-deg3", run_experiment("jordan-dialgebra-deg3", rational));
  report(8, "jordan-dialgebra-deg5", run_experiment("jordan-dialgebra-deg5", mod101), 60.0);
  report(9, "jtd-verify", run_experiment("jtd-verify", mod101));
  report(10, "special-reduction", run_experiment("special-reduction", mod101));
  report(11, "differential-instance", run_experiment("differential-instance", mod101));
  report(12, "field-agnosticism", run_experiment("field-agnosticism", mod101));

  if (failures) std::printf("%d criterion(s) FAILED\n", failures);
  else std::printf("all 12 criteria passed\n");
  return failures == 0 ? 0 : 1;
}
