#include <sstream>

#include <gtest/gtest.h>

#include "psiprime/cli.hpp"

using namespace psiprime;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, ComputePsiPrimeJson) {
  const auto r = run({"compute", "Z4xZ3^2", "--psi-prime", "--json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"factors\":{\"2\":\"45\",\"3\":\"32\"}}\n");
}

TEST(Cli, ComputePsi) {
  const auto r = run({"compute", "Z2", "--psi"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
}

TEST(Cli, ComputeOtherSelectors) {
  EXPECT_EQ(run({"compute", "Z3", "--psi-all", "--json"}).out, "{\"psi_k\":[\"7\",\"15\",\"9\"]}\n");
  EXPECT_EQ(run({"compute", "Z3", "--poly", "--json"}).out, "{\"coeffs\":[\"-9\",\"15\",\"-7\",\"1\"]}\n");
  EXPECT_EQ(run({"compute", "Z3", "--poly"}).out, "X^3 - 7X^2 + 15X - 9\n");
  EXPECT_EQ(run({"compute", "Z4", "--psi-k", "2"}).out, "42\n");
  EXPECT_EQ(run({"compute", "[4,9]", "--spectrum", "--json"}).out,
            "{\"order\":\"36\",\"spectrum\":{\"1\":\"1\",\"2\":\"1\",\"3\":\"2\",\"4\":\"2\",\"6\":\"2\",\"9\":\"6\","
            "\"12\":\"4\",\"18\":\"6\",\"36\":\"12\"}}\n");
  EXPECT_EQ(run({"compute", "Z4xZ3^2", "--psi-prime"}).out, "2^45 * 3^32\n");
  EXPECT_EQ(run({"compute", "Z6", "--psi-prime", "--csv"}).out, "prime,exponent\n2,3\n3,4\n");
}

TEST(Cli, MaterializeNeedsDigitLimit) {
  EXPECT_EQ(run({"compute", "Z6", "--psi-prime", "--materialize"}).code, 1);
  EXPECT_EQ(run({"compute", "Z6", "--psi-prime", "--materialize", "--digit-limit", "10"}).out, "648\n");
  EXPECT_EQ(run({"compute", "Z1024", "--psi-prime", "--materialize", "--digit-limit", "10"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"compute", "Z4", "--psi", "--psi-prime"}).code, 1);
  EXPECT_EQ(run({"compute", "Z4", "--json", "--csv"}).code, 1);
  EXPECT_EQ(run({"compute", "Z4", "--jobs", "0"}).code, 1);
  const auto bad = run({"compute", "Z4xY3"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("column 4"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"compute", "Z4", "--psi-k", "9"}).code, 1);
}

TEST(Cli, SizeErrors) {
  EXPECT_EQ(run({"compute", "Z1024", "--psi-all"}).code, 2);
  EXPECT_EQ(run({"verify", "theorem-c", "--prime", "2", "--n", "99"}).code, 2);
  EXPECT_EQ(run({"verify", "conjecture-f", "--max-order", "600"}).code, 2);
}

TEST(Cli, TheoremCTable) {
  const auto r = run({"verify", "theorem-c", "--prime", "2", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "partition  group  exponent\n"
            "[1,1,1]    Z2^3   7\n"
            "[2,1]      Z4xZ2  11\n"
            "[3]        Z8     17\n");
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "36"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("Z4xZ9"), std::string::npos);
  EXPECT_NE(r.out.find("Z2^2xZ3^2"), std::string::npos);
}

TEST(Cli, Sweeps) {
  EXPECT_EQ(run({"verify", "injectivity", "--max-order", "200"}).code, 0);
  const auto c = run({"verify", "collisions", "--max-order", "48", "--json"});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("\"name\":\"Z4xZ3^2\""), std::string::npos);
  EXPECT_NE(c.out.find("\"name\":\"Z2^4xZ3\""), std::string::npos);
  EXPECT_EQ(run({"verify", "conjecture-f", "--max-order", "32"}).code, 0);
  EXPECT_EQ(run({"oracle", "Z4xZ3^2"}).code, 0);
}

TEST(Cli, JsonStableAcrossJobs) {
  for (const char* sub : {"injectivity", "collisions", "conjecture-f"}) {
    const auto a = run({"verify", sub, "--max-order", "64", "--json", "--jobs", "1"});
    const auto b = run({"verify", sub, "--max-order", "64", "--json", "--jobs", "4"});
    const auto c = run({"verify", sub, "--max-order", "64", "--json", "--jobs", "auto"});
    EXPECT_EQ(a.out, b.out) << sub;
    EXPECT_EQ(a.out, c.out) << sub;
  }
}

TEST(Cli, JsonRoundTripsByteForByte) {
  for (const char* group : {"Z4xZ3^2", "Z2^4xZ3", "Z8xZ2", "1", "Z30"}) {
    const auto first = run({"compute", group, "--json"});
    ASSERT_EQ(first.code, 0);
    const auto parsed = Json::parse(first.out);
    const auto again = run({"compute", parsed["group"].dump(), "--json"});
    EXPECT_EQ(again.out, first.out) << group;
    const auto value = run({"compute", group, "--psi-prime", "--json"});
    EXPECT_EQ(factored_to_json(factored_from_json(Json::parse(value.out))).dump() + "\n", value.out);
  }
}
