// Command-line tool: documents, exit statuses and determinism.

#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "doctest.h"
#include "serialize.hpp"
#include "suites.hpp"

using yfuse::cli::Json;

namespace {

struct Outcome {
  int status;
  Json doc;
  std::string text;
};

Outcome invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "yfuse");
  std::ostringstream out, err;
  const int status = yfuse::cli::run(static_cast<int>(args.size()), args.data(), out, err);
  return {status, Json::parse(out.str()), out.str()};
}

}  // namespace

TEST_CASE("tableau command reports the contents of the column tableau") {
  auto r = invoke({"tableau", "--outer", "5,3,3,3,3", "--inner", "3,3,2"});
  CHECK(r.status == yfuse::cli::kOk);
  CHECK(r.doc["command"] == "tableau");
  CHECK(r.doc["contents"] == Json::parse(R"([-3,-4,-2,-3,0,-1,-2,3,4])"));
}

TEST_CASE("fuse command writes exact coefficients keyed by cycle notation") {
  auto r = invoke({"fuse", "--outer", "2"});
  CHECK(r.status == yfuse::cli::kOk);
  CHECK(r.doc["element"] == Json::parse(R"j([["id","1"],["(1 2)","1"]])j"));

  auto col = invoke({"fuse", "--outer", "1,1"});
  CHECK(col.doc["element"] == Json::parse(R"j([["id","1"],["(1 2)","-1"]])j"));
}

TEST_CASE("verify command passes on small instances") {
  CHECK(invoke({"verify", "thm15", "--outer", "1", "--outer-tilde", "1", "-N", "2"}).status == 0);
  CHECK(invoke({"verify", "sec44", "-N", "2", "--n", "2", "--z", "1/2"}).status == 0);
  CHECK(invoke({"verify", "rtt", "--outer", "2", "--outer-tilde", "1", "-N", "2"}).status == 0);
}

TEST_CASE("invalid input exits with status 2 and a typed error") {
  auto bad = invoke({"tableau", "--outer", "3,a"});
  CHECK(bad.status == yfuse::cli::kInvalidInput);
  CHECK(bad.doc["error"]["kind"] == "InvalidInput");

  auto shape = invoke({"tableau", "--outer", "2,3"});
  CHECK(shape.status == yfuse::cli::kInvalidInput);

  CHECK(invoke({"verify", "nonexistent"}).status == yfuse::cli::kInvalidInput);
  CHECK(invoke({"suite", "nonexistent"}).status == yfuse::cli::kInvalidInput);
  CHECK(invoke({"suite", "fusion", "--bounds", "huge"}).status == yfuse::cli::kInvalidInput);
}

TEST_CASE("oversized requests exit with status 3") {
  auto r = invoke({"symmetrizer", "--outer", "3,3", "--outer-tilde", "2", "-N", "3", "--bounds", "tiny"});
  CHECK(r.status == yfuse::cli::kBoundExceeded);
  CHECK(r.doc["error"]["kind"] == "BoundExceeded");
}

TEST_CASE("tiny suite passes and is byte-identical across runs") {
  auto a = invoke({"suite", "all", "--bounds", "tiny"});
  auto b = invoke({"suite", "all", "--bounds", "tiny"});
  CHECK(a.status == yfuse::cli::kOk);
  CHECK(a.text == b.text);
  CHECK(a.doc["checks"].size() == 13);
}

TEST_CASE("partition parsing") {
  CHECK(yfuse::cli::parse_partition("5,3,3") == yfuse::Partition({5, 3, 3}));
  CHECK(yfuse::cli::parse_partition("") == yfuse::Partition({}));
  CHECK_THROWS_AS(yfuse::cli::parse_partition("1,,2"), yfuse::Error);
}
