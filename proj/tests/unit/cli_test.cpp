#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "cli.hpp"

using namespace outerspatial;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(OUTERSPATIAL_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, DecideExamples) {
  const Outcome tetra = run({"decide", data("tetra.cx")});
  EXPECT_EQ(tetra.code, 0);
  EXPECT_NE(tetra.out.find("certificate\n  rotator"), std::string::npos);

  const Outcome torus = run({"decide", data("torus7.cx")});
  EXPECT_EQ(torus.code, 1);
  EXPECT_NE(torus.out.find("AsphericalSubcomplex"), std::string::npos);

  const Outcome cone = run({"decide", data("cone-k4.cx")});
  EXPECT_EQ(cone.code, 1);
  EXPECT_NE(cone.out.find("NonOuterplanarLink\n  path top\n"), std::string::npos);
  EXPECT_NE(cone.out.find("minor K4"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"decide"}).code, cli::kUsage);
  EXPECT_EQ(run({"render", data("tetra.cx"), "--format", "png"}).code, cli::kUsage);
  EXPECT_EQ(run({"decide", data("no-such-file.cx")}).code, cli::kInputError);
  EXPECT_EQ(run({"--cap", "10", "oracle", data("bipyramid4.cx")}).code, cli::kCapExceeded);
  EXPECT_EQ(run({"oracle", data("crossing.cx")}).code, cli::kCapExceeded);
  EXPECT_EQ(run({"--cap", "1e13", "oracle", data("crossing.cx")}).code, cli::kNotOuterspatial);
  EXPECT_EQ(run({"generate", "bipyramid", "2"}).code, cli::kUsage);
  EXPECT_EQ(run({"generate", "bipyramid", "x"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ParseErrorNamesTheLine) {
  const auto path = std::filesystem::temp_directory_path() / "outerspatial_bad.cx";
  {
    std::ofstream f(path);
    f << "vertex a\nvertex b\nedge ab a c\n";
  }
  const Outcome r = run({"decide", path.string()});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, CertificateReportRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "outerspatial_report.txt";
  for (const char* name : {"tetra.cx", "bipyramid4-equator.cx", "bipyramid3.cx"}) {
    const Outcome d = run({"decide", data(name)});
    ASSERT_EQ(d.code, 0);
    {
      std::ofstream f(path);
      f << d.out;
    }
    const Outcome c = run({"check", data(name), path.string()});
    EXPECT_EQ(c.code, 0) << c.out;
  }
  {
    std::ofstream f(path);
    f << "verdict Outerspatial\ncertificate\n  rotator a a-b a-c a-d\n";
  }
  EXPECT_EQ(run({"check", data("tetra.cx"), path.string()}).code, 1);
  {
    // right first edge, wrong face
    std::ofstream f(path);
    f << "verdict Outerspatial\ncertificate\n  rotator a a-b a-d a-c\n  rotator b a-b b-c b-d\n"
         "  rotator c a-c c-d b-c\n  rotator d a-d b-d c-d\n  outer a b d\n  forest\n    abc\n"
         "      abd\n      acd\n      bcd\n";
  }
  const Outcome bad = run({"check", data("tetra.cx"), path.string()});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("outer face does not match"), std::string::npos) << bad.out;
  std::filesystem::remove(path);
}

TEST(Cli, NestedAndOracle) {
  EXPECT_EQ(run({"nested", data("bipyramid4.cx"), data("bipyramid4-crossing.cycles")}).code, 1);
  EXPECT_EQ(run({"nested", data("bipyramid4.cx"), data("bipyramid4-nested.cycles")}).code, 0);
  EXPECT_EQ(run({"nested", data("bipyramid4.cx"), data("bipyramid4-triangles.cycles")}).code, 0);
  EXPECT_EQ(run({"oracle", data("tetra.cx")}).code, 0);
  EXPECT_EQ(run({"oracle", data("cone-k23.cx")}).code, 1);
}

TEST(Cli, OtherCommands) {
  const Outcome v = run({"validate", data("torus7.cx")});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "valid: 7 vertices, 21 edges, 14 faces\n");
  const Outcome s = run({"surface", data("torus7.cx")});
  EXPECT_EQ(s.out, "component 0: orientable euler 0 genus 1 vertices 7 faces 14\n");
  const Outcome l = run({"links", data("cone-k4.cx")});
  EXPECT_NE(l.out.find("link top: 4 vertices, 6 edges, simple, 2-connected, not outerplanar"), std::string::npos);
  const Outcome dot = run({"render", data("tetra.cx")});
  EXPECT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out.rfind("graph \"embedding\" {", 0), 0u);
  const Outcome svg = run({"render", data("bipyramid4-equator.cx"), "--format", "svg", "--link", "e0"});
  EXPECT_EQ(svg.code, 0);
  EXPECT_NE(svg.out.find("<svg"), std::string::npos);
  EXPECT_EQ(run({"render", data("torus7.cx")}).code, 1);
}

TEST(Cli, GenerateMatchesBundledFiles) {
  const std::vector<std::pair<std::vector<std::string>, std::string>> cases{
      {{"generate", "tetra"}, "tetra.cx"},
      {{"generate", "torus7"}, "torus7.cx"},
      {{"generate", "rp2"}, "rp2.cx"},
      {{"generate", "bipyramid", "3"}, "bipyramid3.cx"},
      {{"generate", "bipyramid-equator", "4"}, "bipyramid4-equator.cx"},
      {{"generate", "cone", "K4"}, "cone-k4.cx"},
      {{"generate", "cone", data("k4.cx")}, "cone-k4.cx"},
      {{"generate", "cone", "K23"}, "cone-k23.cx"},
  };
  for (const auto& [args, file] : cases) {
    std::ifstream f(data(file));
    const std::string expected((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, expected) << file;
  }
  const std::vector<std::string> random{"--seed", "766", "--cap", "1e30", "generate", "random", "--vertices", "9",
                                        "--cycles", "3", "--merges", "0", "--flips", "6"};
  std::ifstream f(data("crossing.cx"));
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  // the bundled copy carries two comment lines on top
  text = text.substr(text.find("vertex"));
  EXPECT_EQ(run(random).out, text);
}

TEST(Cli, DecideAndOracleAgreeOnBundledInputs) {
  int compared = 0;
  for (const auto& entry : std::filesystem::directory_iterator(OUTERSPATIAL_DATA_DIR)) {
    if (entry.path().extension() != ".cx") continue;
    const Outcome oracle = run({"oracle", entry.path().string()});
    if (oracle.code == cli::kCapExceeded) continue;
    EXPECT_EQ(run({"decide", entry.path().string()}).code, oracle.code) << entry.path();
    ++compared;
  }
  EXPECT_GE(compared, 10);
}
