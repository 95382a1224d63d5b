#include <fstream>
#include <sstream>

#include "canonical.hpp"
#include "doctest.h"

using namespace dlseq;

TEST_CASE("each base rule expands its canonical instance as recorded") {
  Calculus c = assemble_calculus(LanguageProfile{});
  auto instances = testing::canonical_alc_instances();
  CHECK(instances.size() == 18);
  for (const auto& x : instances) {
    CAPTURE(x.rule);
    std::ifstream in(std::string(DLSEQ_GOLDEN_DIR) + "/" + x.rule + ".txt");
    REQUIRE(in);
    std::ostringstream want;
    want << in.rdbuf();
    CHECK(testing::expand_text(c, x) == want.str());
  }
}
