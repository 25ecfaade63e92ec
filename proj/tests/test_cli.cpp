#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "plap/cli.hpp"

using namespace plap;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome cli(std::vector<std::string> args) {
  args.insert(args.begin(), "plap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("plap_test_" + name);
}

}  // namespace

TEST(Potential, ParseAndFormat) {
  const auto d = parse_potential("gaussian:A=2,s=0.5");
  EXPECT_EQ(format_potential(d), "gaussian:A=2,s=0.5");
  EXPECT_EQ(format_potential(parse_potential(format_potential(d))), format_potential(d));
  EXPECT_EQ(format_potential(parse_potential("box")), "box:A=1,R=1");
  const RadialProfile g(parse_potential("gaussian:A=1,s=1"));
  EXPECT_NEAR(g.analytic_integral(1), std::sqrt(2.0 * std::numbers::pi), 1e-12);
  EXPECT_NEAR(g.analytic_integral(2), 2.0 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(RadialProfile(parse_potential("box:A=1,R=1")).analytic_integral(1), 2.0, 1e-15);
  EXPECT_NEAR(RadialProfile(parse_potential("mix:A1=1,s1=1,A2=0.5,s2=2")).analytic_integral(1), 0.0, 1e-12);
}

TEST(Potential, ParseErrorsCarryPosition) {
  try {
    parse_potential("gaussian:A=1,q=2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 13u);
  }
  EXPECT_THROW(parse_potential("lorentz:A=1"), ParseError);
  EXPECT_THROW(parse_potential("gaussian:A=x"), ParseError);
  EXPECT_THROW(parse_potential("gaussian:A"), ParseError);
}

TEST(Csv, RoundTripIsBitExact) {
  std::vector<SweepRecord> r(3);
  r[0] = {0.3, -0.0170422506201, 0.1144, 1.0 / 3.0, 1.1e-11, 69, true, 144.0};
  r[1] = {0.1, -2.5e-3, 0.1 + 0.2, std::nextafter(1.0, 2.0), 4.7e-12, 158, false, 7e300};
  r[2] = {std::numeric_limits<double>::denorm_min(), -1e-300, 0.0, 5e-324, 0.0, 0, true, 1.0};
  const std::string text = emit_csv(r);
  EXPECT_EQ(parse_csv(text), r);
  EXPECT_EQ(text.find('\r'), std::string::npos);
  EXPECT_EQ(text.substr(0, kSweepHeader.size()), kSweepHeader);
  EXPECT_NE(text.find(",true,"), std::string::npos);
  EXPECT_NE(text.find(",false,"), std::string::npos);
  EXPECT_EQ(emit_csv({}), std::string(kSweepHeader) + "\n");
}

TEST(Csv, MalformedInputIsDataError) {
  EXPECT_THROW(parse_csv("alpha,lambda\n1,2\n"), DataError);
  EXPECT_THROW(parse_csv(std::string(kSweepHeader) + "\n0.1,-1,1,1,0,3,maybe,1\n"), DataError);
  EXPECT_THROW(parse_csv(std::string(kSweepHeader) + "\n0.1,-1,1\n"), DataError);
}

TEST(Json, RecordRoundTrip) {
  SweepRecord r{0.07, -1.2345678901234567e-3, 0.3, 0.25, 1e-9, 12, true, 200.0};
  EXPECT_EQ(record_from_json(json::parse(to_json(r).dump())), r);
}

TEST(Cli, SobolevOneDimension) {
  const auto o = cli({"sobolev", "--d", "1", "--p", "3"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_EQ(j["S"].get<double>(), 1.5);
  EXPECT_NEAR(j["E1"].get<double>(), -0.7071067811865476, 1e-15);
}

TEST(Cli, SolveSquareWell) {
  const auto o = cli({"solve", "--d", "1", "--p", "2", "--potential", "box:A=1,R=1", "--alpha", "1", "--grid-n",
                      "8193", "--grid-l", "20"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto j = json::parse(o.out);
  EXPECT_NEAR(j["lambda"].get<double>() / oracle::square_well_lambda(), 1.0, 5e-3);
  EXPECT_TRUE(j["converged"].get<bool>());
  EXPECT_NEAR(j["analytic_integral"].get<double>(), 2.0, 1e-12);
}

TEST(Cli, SolveHardyBelowThreshold) {
  const auto o = cli({"solve", "--d", "3", "--p", "2", "--potential", "hardy:A=1", "--alpha", "0.2"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_GE(json::parse(o.out)["lambda"].get<double>(), -1e-6);
}

TEST(Cli, EmptySweepPrintsHeaderOnly) {
  const auto o = cli({"sweep", "--d", "1", "--p", "2", "--alphas", ""});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, std::string(kSweepHeader) + "\n");
}

TEST(Cli, SweepIsDeterministicAndFits) {
  const std::vector<std::string> base{"sweep", "--d", "1", "--p", "2", "--potential",
                                      "gaussian:A=0.3989422804014327,s=1", "--alphas", "0.4,0.2,0.1,0.05"};
  auto one = base, two = base;
  one.insert(one.end(), {"--threads", "1"});
  two.insert(two.end(), {"--threads", "2"});
  const auto a = cli(one), b = cli(two), c = cli(one);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  EXPECT_EQ(parse_csv(a.out).size(), 4u);

  const auto path = temp("sweep.csv");
  {
    std::ofstream f(path);
    f << a.out;
  }
  const auto fit = cli({"fit", "--d", "1", "--p", "2", "--in", path.string(), "--integral", "1"});
  ASSERT_EQ(fit.code, 0) << fit.err;
  const auto j = json::parse(fit.out);
  EXPECT_NEAR(j["prediction"].get<double>(), -0.25, 1e-15);
  EXPECT_LE(j["relative_error"].get<double>(), 0.1);
  std::filesystem::remove(path);
}

TEST(Cli, OutFlagWritesFile) {
  const auto path = temp("sobolev.json");
  const auto o = cli({"sobolev", "--d", "1", "--p", "2", "--out", path.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(json::parse(read_file(path.string()))["S"].get<double>(), 1.0);
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"solve", "--p", "abc"}).code, 2);
  EXPECT_EQ(cli({"solve", "--potential", "lorentz:A=1"}).code, 2);
  EXPECT_EQ(cli({"solve", "--p", "0.5"}).code, 2);
  EXPECT_EQ(cli({"sobolev", "--d", "2", "--p", "2"}).code, 2);
  EXPECT_EQ(cli({"sweep", "--alphas", "0.1,x"}).code, 2);
  // int V = 0: no weak-coupling limit
  EXPECT_EQ(cli({"sweep", "--d", "1", "--p", "2", "--potential",
                 "mix:A1=0.6994711402007163,s1=1,A2=0.34973557010035815,s2=2", "--alphas", "0.1"})
                .code,
            2);
  EXPECT_EQ(cli({"fit", "--in", "/nonexistent/plap.csv", "--integral", "1"}).code, 4);
  EXPECT_EQ(cli({"sobolev", "--d", "1", "--p", "2", "--out", "/nonexistent/dir/x.json"}).code, 4);

  const auto bad = temp("bad.csv");
  {
    std::ofstream f(bad);
    f << "not,a,sweep\n";
  }
  EXPECT_EQ(cli({"fit", "--in", bad.string(), "--integral", "1"}).code, 3);
  {
    std::ofstream f(bad);
    f << kSweepHeader << "\n0.1,-0.0025,1,1,0,10,true,80\n";
  }
  EXPECT_EQ(cli({"fit", "--in", bad.string(), "--integral", "1"}).code, 2);  // too few records
  std::filesystem::remove(bad);
}

TEST(Cli, ValidatePasses) {
  const auto o = cli({"validate"});
  EXPECT_EQ(o.code, 0) << o.out;
  EXPECT_TRUE(json::parse(o.out)["passed"].get<bool>());
}

TEST(Cli, BinaryExitCodes) {
  const std::string exe = PLAP_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int s = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
  };
  EXPECT_EQ(status("sobolev --d 1 --p 2"), 0);
  EXPECT_EQ(status("bogus"), 2);
  EXPECT_EQ(status("fit --in /nonexistent/plap.csv --integral 1"), 4);
}
