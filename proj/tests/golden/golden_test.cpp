// Runs every scenario in the golden directory through the ecodyn binary and
// compares the output file byte for byte with the stored copy. Set
// ECODYN_UPDATE_GOLDEN=1 to rewrite the stored copies.

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<fs::path> scenarios() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(ECODYN_GOLDEN_DIR)) {
    if (e.path().extension() == ".scenario") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string extension_for(const fs::path& scenario) {
  return slurp(scenario).find("\nformat = json") != std::string::npos ? ".json" : ".csv";
}

int run_scenario(const fs::path& scenario, const fs::path& out) {
  const std::string cmd = std::string("env -u ECODYN_DEFAULT_STEPS \"") + ECODYN_BINARY + "\" --scenario \"" +
                          scenario.string() + "\" --out \"" + out.string() + "\"";
  return std::system(cmd.c_str());
}

class Golden : public ::testing::TestWithParam<fs::path> {};

TEST_P(Golden, MatchesStoredOutput) {
  const fs::path scenario = GetParam();
  const std::string name = scenario.stem().string() + extension_for(scenario);
  const fs::path work = fs::path(ECODYN_WORK_DIR);
  fs::create_directories(work);
  const fs::path produced = work / name;
  fs::remove(produced);
  ASSERT_EQ(run_scenario(scenario, produced), 0) << scenario;

  const fs::path expected = fs::path(ECODYN_GOLDEN_DIR) / "expected" / name;
  const char* update = std::getenv("ECODYN_UPDATE_GOLDEN");
  if (update != nullptr && std::string(update) == "1") {
    fs::copy_file(produced, expected, fs::copy_options::overwrite_existing);
  }
  ASSERT_TRUE(fs::exists(expected)) << "no stored output " << expected;
  EXPECT_EQ(slurp(produced), slurp(expected)) << name;
}

TEST_P(Golden, RepeatRunIsByteIdentical) {
  const fs::path scenario = GetParam();
  const fs::path work = fs::path(ECODYN_WORK_DIR) / "repeat";
  fs::create_directories(work);
  const std::string ext = extension_for(scenario);
  const fs::path a = work / (scenario.stem().string() + ".a" + ext);
  const fs::path b = work / (scenario.stem().string() + ".b" + ext);
  ASSERT_EQ(run_scenario(scenario, a), 0);
  ASSERT_EQ(run_scenario(scenario, b), 0);
  EXPECT_EQ(slurp(a), slurp(b));
}

std::string test_name(const ::testing::TestParamInfo<fs::path>& info) { return info.param.stem().string(); }

INSTANTIATE_TEST_SUITE_P(Scenarios, Golden, ::testing::ValuesIn(scenarios()), test_name);

TEST(GoldenCorpus, CoversEveryCommand) {
  std::string all;
  for (const auto& s : scenarios()) all += slurp(s);
  for (const char* c : {"harrod", "harrod-corrected", "harrod-discrete", "harrod-domar", "phillips", "bergstrom",
                        "multiplier", "longwave", "leontief-static", "leontief-dynamic", "leontief-volterra",
                        "fredholm-solve", "fredholm-spectrum", "fredholm-sweep", "dim-check", "scale-check"}) {
    EXPECT_NE(all.find(std::string("command = ") + c + "\n"), std::string::npos) << c;
  }
}

}  // namespace
