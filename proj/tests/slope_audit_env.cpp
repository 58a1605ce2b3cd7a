// Every gtest binary ends by checking the slope identity tally of its
// process.
#include <gtest/gtest.h>

#include "eikonal/slope_tools.hpp"

namespace {

class SlopeAuditEnvironment : public ::testing::Environment {
 public:
  void TearDown() override {
    const auto audit = eikonal::slope_audit();
    EXPECT_EQ(audit.violations, 0u) << "of " << audit.evaluations << " slope evaluations";
  }
};

const auto* const registered = ::testing::AddGlobalTestEnvironment(new SlopeAuditEnvironment);

}  // namespace
