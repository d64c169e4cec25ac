#include "doctest.h"

#include "lemcluster/conllu.hpp"
#include "support/temp.hpp"

using namespace lemcluster;
using testsupport::TempDir;
using testsupport::write_file;

namespace {

const char* kSample =
    "# newdoc id = demo\n"
    "# sent_id = 1\n"
    "# text = V Praze prší\n"
    "1\tV\tv\tADP\tRR\t_\t2\tcase\t_\t_\n"
    "2\tPraze\tPraha\tPROPN\tNN\tCase=Loc\t3\tobl\t_\t_\n"
    "3\tprší\tpršet\tVERB\tVB\t_\t0\troot\t_\t_\n"
    "\n"
    "# sent_id = 2\n"
    "1-2\tdvou\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "1\tdva\tdva\tNUM\tCl\t_\t3\tnummod\t_\t_\n"
    "2\tz\tz\tADP\tRR\t_\t3\tcase\t_\t_\n"
    "3\tdomů\tdům\tNOUN\tNN\t_\t0\troot\t_\t_\n"
    "3.1\telide\telidovat\tVERB\t_\t_\t_\t_\t_\t_\n"
    "\n";

}  // namespace

TEST_SUITE("conllu") {

TEST_CASE("reads forms and lemmas in corpus order") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path, kSample);

  const auto tokens = read_tokens(path);
  REQUIRE(tokens.size() == 6);
  CHECK(tokens[0].form == "V");
  CHECK(tokens[0].lemma == "v");
  CHECK(tokens[1].form == "Praze");
  CHECK(tokens[1].lemma == "Praha");
  CHECK(tokens[3].form == "dva");
  CHECK(tokens[5].form == "domů");
  CHECK(tokens[5].lemma == "dům");
}

TEST_CASE("skips ranges, empty nodes, comments and blank lines") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path, kSample);
  for (const auto& t : read_tokens(path)) {
    CHECK(t.form != "dvou");
    CHECK(t.form != "elide");
  }
}

TEST_CASE("keeps repeated forms with multiplicity") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path,
             "1\tgo\tgo\t_\t_\t_\t0\troot\t_\t_\n"
             "2\tgo\tgo\t_\t_\t_\t1\tdep\t_\t_\n"
             "\n"
             "1\tgo\tgo\t_\t_\t_\t0\troot\t_\t_\n");
  const auto tokens = read_tokens(path);
  CHECK(tokens.size() == 3);
}

TEST_CASE("underscore lemmas are retained verbatim") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path, "1\tfoo\t_\t_\t_\t_\t0\troot\t_\t_\n");
  const auto tokens = read_tokens(path);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].lemma == "_");
}

TEST_CASE("wrong column count reports the line number") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path,
             "# ok\n"
             "1\tgood\tgood\t_\t_\t_\t0\troot\t_\t_\n"
             "2\tshort\tline\n");
  try {
    read_tokens(path);
    FAIL("expected FormatError");
  } catch (const FormatError& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("bad token ids are rejected") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path, "x\tfoo\tfoo\t_\t_\t_\t0\troot\t_\t_\n");
  CHECK_THROWS_AS(read_tokens(path), FormatError);
}

TEST_CASE("missing file raises an I/O error") {
  CHECK_THROWS_AS(read_tokens("/nonexistent/file.conllu"), IoError);
}

TEST_CASE("tolerates CRLF and a BOM") {
  TempDir dir;
  const auto path = dir.file("t.conllu");
  write_file(path,
             "\xEF\xBB\xBF# comment\r\n"
             "1\tgo\tgo\t_\t_\t_\t0\troot\t_\t_\r\n");
  const auto tokens = read_tokens(path);
  REQUIRE(tokens.size() == 1);
  CHECK(tokens[0].form == "go");
}

}  // TEST_SUITE
