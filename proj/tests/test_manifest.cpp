#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lalg/errors.hpp"
#include "lalg/manifest.hpp"

#include <string>

using namespace lalg;

namespace {

const char* kSample = R"(# tangent line with a verification task
begin chart
  var = x 1
end

begin algebroid tangent_x
  kind = tangent
end

begin task verify
  object = tangent_x
end

begin task betti
  object = tangent_x
  weights = -1 0 1
end
)";

struct Caught {
  std::string msg;
  int line = 0;
  int col = 0;
};

Caught parse_failure(const std::string& text) {
  try {
    parse_manifest(text);
  } catch (const ParseError& e) {
    return {e.what(), e.line, e.col};
  }
  FAIL("expected a parse error");
  return {};
}

}  // namespace

TEST_CASE("well formed manifests are exposed block by block") {
  Manifest m = parse_manifest(kSample);
  REQUIRE(m.blocks.size() == 4);
  CHECK(m.blocks[0].type == "chart");
  CHECK(m.blocks[0].name.empty());
  CHECK(m.blocks[0].line == 2);

  auto tasks = m.of_type("task");
  REQUIRE(tasks.size() == 2);
  CHECK(tasks[0]->name == "verify");
  CHECK(tasks[1]->name == "betti");

  const ManifestBlock* alg = m.named("tangent_x");
  REQUIRE(alg != nullptr);
  CHECK(alg->type == "algebroid");
  CHECK(m.named("nope") == nullptr);

  const ManifestEntry* kind = alg->find("kind");
  REQUIRE(kind != nullptr);
  CHECK(kind->value == "tangent");
  CHECK(alg->find("missing") == nullptr);

  const ManifestEntry* w = tasks[1]->find("weights");
  REQUIRE(w != nullptr);
  CHECK(w->value == "-1 0 1");
  CHECK(w->line == 16);
}

TEST_CASE("repeated keys keep their order") {
  Manifest m = parse_manifest(
      "begin chart\n var = x 1\n var = y 2\nend\n"
      "begin algebroid a\n kind = tangent\nend\n");
  auto vars = m.blocks[0].all("var");
  REQUIRE(vars.size() == 2);
  CHECK(vars[0]->value == "x 1");
  CHECK(vars[1]->value == "y 2");
}

TEST_CASE("comments and blank lines are ignored") {
  Manifest m = parse_manifest(
      "# header\n\nbegin algebroid a # trailing\n kind = sl2 # note\nend\n");
  REQUIRE(m.blocks.size() == 1);
  CHECK(m.blocks[0].find("kind")->value == "sl2");
}

TEST_CASE("unknown block types are located") {
  Caught c = parse_failure("begin gadget g\nend\n");
  CHECK(c.msg.find("unknown block type gadget") != std::string::npos);
  CHECK(c.line == 1);
  CHECK(c.col == 1);
}

TEST_CASE("unknown task kinds are located") {
  Caught c = parse_failure(
      "begin algebroid a\n kind = sl2\nend\nbegin task frobnicate\nend\n");
  CHECK(c.msg.find("unknown task kind frobnicate") != std::string::npos);
  CHECK(c.line == 4);
}

TEST_CASE("duplicate object names are rejected") {
  Caught c = parse_failure(
      "begin algebroid a\n kind = sl2\nend\n"
      "begin poisson a\n matrix = 0\nend\n");
  CHECK(c.msg.find("duplicate name a") != std::string::npos);
  CHECK(c.line == 4);
}

TEST_CASE("dangling references are located at the value") {
  Caught c = parse_failure(
      "begin algebroid a\n kind = sl2\nend\n"
      "begin task betti\n object = missing_thing\nend\n");
  CHECK(c.msg.find("reference to undefined object missing_thing") !=
        std::string::npos);
  CHECK(c.line == 5);
  CHECK(c.col > 1);
}

TEST_CASE("matched pair references check both feet") {
  Caught c = parse_failure(
      "begin algebroid a\n kind = sl2\nend\n"
      "begin matched_pair mp\n a1 = a\n a2 = b\nend\n");
  CHECK(c.msg.find("undefined object b") != std::string::npos);
  CHECK(c.line == 6);
}

TEST_CASE("missing key value separators are rejected") {
  Caught c = parse_failure("begin chart\n var x 1\nend\n");
  CHECK(c.msg.find("expected key = value") != std::string::npos);
  CHECK(c.line == 2);
  CHECK(c.col == 2);
}

TEST_CASE("unterminated blocks are rejected") {
  Caught c = parse_failure("begin algebroid a\n kind = sl2\n");
  CHECK(c.msg.find("unterminated block algebroid") != std::string::npos);
  CHECK(c.line == 2);
}

TEST_CASE("empty manifests are rejected") {
  Caught c = parse_failure("");
  CHECK(c.msg.find("empty manifest") != std::string::npos);
  CHECK(c.line == 1);
  Caught c2 = parse_failure("# only a comment\n");
  CHECK(c2.msg.find("empty manifest") != std::string::npos);
}

TEST_CASE("at most one chart block is allowed") {
  Caught c = parse_failure(
      "begin chart\n var = x 1\nend\nbegin chart\n var = y 1\nend\n");
  CHECK(c.msg.find("more than one chart block") != std::string::npos);
  CHECK(c.line == 4);
}

TEST_CASE("content must live inside blocks") {
  Caught c = parse_failure("kind = sl2\n");
  CHECK(c.msg.find("content outside a block") != std::string::npos);
  CHECK(c.line == 1);
  Caught c2 = parse_failure("begin algebroid a\nbegin task verify\nend\n");
  CHECK(c2.msg.find("begin inside an open block") != std::string::npos);
  CHECK(c2.line == 2);
  Caught c3 = parse_failure("end\n");
  CHECK(c3.msg.find("end outside a block") != std::string::npos);
}

TEST_CASE("block headers are shape checked") {
  CHECK(parse_failure("begin\nend\n").msg.find("begin needs a block type") !=
        std::string::npos);
  CHECK(parse_failure("begin algebroid a b\nend\n")
            .msg.find("begin takes a type and one name") != std::string::npos);
  CHECK(parse_failure("begin algebroid\nend\n")
            .msg.find("algebroid block needs a name") != std::string::npos);
  CHECK(parse_failure("begin chart c\nend\n")
            .msg.find("chart block takes no name") != std::string::npos);
  CHECK(parse_failure("begin task\nend\n")
            .msg.find("task block needs a task kind") != std::string::npos);
  CHECK(parse_failure("begin chart\n = x\nend\n").msg.find("empty key") !=
        std::string::npos);
}

TEST_CASE("parse errors carry their location in the message") {
  Caught c = parse_failure("begin gadget g\nend\n");
  CHECK(c.msg.find("at line 1, column 1") != std::string::npos);
}
