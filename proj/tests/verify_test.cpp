#include <set>
#include <string>

#include "contracta/verify.hpp"
#include "doctest.h"

using namespace contracta;

namespace {

// Order 5 keeps the exhaustive sweeps cheap in the unit suite; the full
// default-order run belongs to the command-line tool and the acceptance gate.
constexpr VerifyOptions kFast{.sweep_order = 5};

void check_section(const VerifyReport& report) {
  CHECK(!report.checks.empty());
  for (const CheckResult& c : report.checks) {
    INFO(c.id << ": " << c.detail);
    CHECK(c.pass);
    CHECK(!c.id.empty());
    CHECK(!c.detail.empty());
  }
  CHECK(report.all_pass());
}

}  // namespace

TEST_CASE("splitting section verifies") { check_section(verify_splitting_section(kFast)); }

TEST_CASE("claw section verifies") { check_section(verify_claw_section(kFast)); }

TEST_CASE("critical section verifies") { check_section(verify_critical_section(kFast)); }

TEST_CASE("line section verifies") { check_section(verify_line_section(kFast)); }

TEST_CASE("the combined report concatenates all sections with unique ids") {
  const VerifyReport all = verify_all(kFast);
  const size_t sum = verify_splitting_section(kFast).checks.size() +
                     verify_claw_section(kFast).checks.size() +
                     verify_critical_section(kFast).checks.size() +
                     verify_line_section(kFast).checks.size();
  CHECK(all.checks.size() == sum);
  std::set<std::string> ids;
  for (const CheckResult& c : all.checks) ids.insert(c.id);
  CHECK(ids.size() == all.checks.size());
  CHECK(all.all_pass());
}
