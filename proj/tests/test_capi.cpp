#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

TEST_CASE("module under construction") {
  FAIL("tests not written yet");
}
