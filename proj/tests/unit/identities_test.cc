#include <gtest/gtest.h>

#include "printers.h"
#include "identity_catalog.h"

namespace stabnf::testing {
namespace {

class CatalogIdentity : public ::testing::TestWithParam<size_t> {};

TEST_P(CatalogIdentity, HoldsExactlyForEveryInstance) {
    const Identity id = identity_catalog().at(GetParam());
    IdentityResult r = run_identity(id);
    EXPECT_GT(r.instances, 0u) << id.statement;
    EXPECT_EQ(r.failures, 0u) << id.statement << " first failure: " << r.first_failure;
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogIdentity, ::testing::Range<size_t>(0, identity_catalog().size()));

class PrintedForm : public ::testing::TestWithParam<size_t> {};

TEST_P(PrintedForm, FailsOnSomeInstance) {
    const Identity id = refuted_printed_forms().at(GetParam());
    IdentityResult r = run_identity(id);
    EXPECT_GT(r.failures, 0u) << id.statement;
}

INSTANTIATE_TEST_SUITE_P(Refuted, PrintedForm, ::testing::Range<size_t>(0, refuted_printed_forms().size()));

TEST(Catalog, CorrectedStatementsAreMarked) {
    size_t corrected = 0;
    for (const auto &id : identity_catalog()) {
        corrected += id.correction.empty() ? 0 : 1;
    }
    EXPECT_EQ(corrected, refuted_printed_forms().size());
}

}  // namespace
}  // namespace stabnf::testing
