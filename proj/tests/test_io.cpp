#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "drs/fixtures.hpp"
#include "drs/io.hpp"
#include "drs/latfca.hpp"

using namespace drs;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  REQUIRE(f.good());
  std::ostringstream out;
  out << f.rdbuf();
  return out.str();
}

std::string data_path(const std::string& name) {
  return std::string(DRS_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("space JSON round trips for every bundled fixture") {
  struct Row {
    const char* file;
    FiniteRelationSpace s;
  };
  std::vector<Row> rows = {
      {"ex1.json", fixtures::ex1()},   {"ex1_raw.json", fixtures::ex1_raw()},
      {"toy2.json", fixtures::toy2()}, {"ch3.json", fixtures::ch3()},
      {"fork.json", fixtures::fork()}, {"id2.json", fixtures::id2()},
      {"id3.json", fixtures::id3()},
  };
  for (const auto& row : rows) {
    INFO(row.file);
    CHECK(parse_space(emit_space(row.s)) == row.s);

    std::string text = slurp(data_path(row.file));
    SpaceDocument doc = parse_space_document(text);
    CHECK(doc.space == row.s);
    CHECK(doc.source == "bundled");
    std::string stem(row.file);
    stem = stem.substr(0, stem.size() - 5);
    CHECK(doc.name == stem);
    // emission is byte-stable against the shipped file
    CHECK(emit_space(row.s, doc.name, doc.source) == text);
  }
}

TEST_CASE("edge lists parse with line-resolved errors") {
  SpaceDocument d = parse_space_document("a c\na e\n");
  CHECK(d.space.labels() == std::vector<std::string>{"a", "c", "e"});
  CHECK(d.space.pairs() ==
        std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});

  // comments, blank lines, isolated elements
  auto s = parse_space(
      "# header\n"
      "\n"
      "x y # trailing note\n"
      "z\n");
  CHECK(s.labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(s.pairs() == std::vector<std::pair<int, int>>{{0, 1}});

  try {
    parse_space("a b\nb c\na b\n");
    FAIL("duplicate not detected");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::duplicate_pair);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_space("a b c\n");
    FAIL("triple accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::malformed_document);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
}

TEST_CASE("space JSON rejects malformed documents") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_space(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return Error::Kind::precondition;  // not reached on bad input
  };
  CHECK(kind_of("{oops") == Error::Kind::malformed_document);
  CHECK(kind_of("{\"universe\": [\"a\"]}") == Error::Kind::malformed_document);
  CHECK(kind_of("{\"universe\": \"a\", \"relation\": []}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of("{\"universe\": [\"a\"], \"relation\": [[\"a\"]]}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of("{\"universe\": [\"a\"], \"relation\": [], \"metadata\": 3}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of(
            "{\"universe\": [\"a\"], \"relation\": [[\"a\", \"z\"]]}") ==
        Error::Kind::unknown_label);
  CHECK(kind_of("{\"universe\": [\"a\", \"a\"], \"relation\": []}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of("{\"universe\": [\"a\"], \"relation\": [[\"a\", \"a\"], "
                "[\"a\", \"a\"]]}") == Error::Kind::duplicate_pair);
  // leading whitespace still sniffs as JSON
  CHECK(kind_of("  \n {bad") == Error::Kind::malformed_document);
}

TEST_CASE("information tables parse, validate and induce equivalences") {
  InfoTable t = parse_table(slurp(data_path("info1.json")));
  CHECK(t.objects.size() == 4);
  CHECK(t.attributes == std::vector<std::string>{"color", "size"});
  CHECK_FALSE(t.deterministic());
  CHECK(t.values[0][3] == std::vector<std::string>{"blue", "red"});

  auto both = table_to_space(t, {"color", "size"});
  CHECK(both ==
        FiniteRelationSpace::from_labels(
            t.objects, {{"x1", "x1"}, {"x1", "x2"}, {"x2", "x1"},
                        {"x2", "x2"}, {"x3", "x3"}, {"x4", "x4"}}));
  auto size_only = table_to_space(t, {"size"});
  CHECK(size_only.related(0, 3));  // x1 and x4 share the size value
  CHECK(size_only.related(3, 1));
  CHECK_FALSE(size_only.related(0, 2));

  RelationProfile p = classify(both);
  CHECK(p.reflexive);
  CHECK(p.symmetric);
  CHECK(p.transitive);

  CHECK_THROWS_AS(table_to_space(t, {}), Error);
  try {
    table_to_space(t, {"weight"});
    FAIL("unknown attribute accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::unknown_label);
  }
}

TEST_CASE("information table shape errors carry the offending cell") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_table(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return Error::Kind::precondition;
  };
  CHECK(kind_of("{\"objects\": [\"x\"], \"attributes\": [\"a\"]}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of("{\"objects\": [\"x\"], \"attributes\": [\"a\"], "
                "\"values\": {\"a\": {}}}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of("{\"objects\": [\"x\"], \"attributes\": [\"a\"], "
                "\"values\": {\"b\": {\"x\": [\"1\"]}}}") ==
        Error::Kind::unknown_label);
  CHECK(kind_of("{\"objects\": [\"x\"], \"attributes\": [\"a\"], "
                "\"values\": {\"a\": {\"y\": [\"1\"]}}}") ==
        Error::Kind::unknown_label);
  CHECK(kind_of("{\"objects\": [\"x\"], \"attributes\": [\"a\"], "
                "\"values\": {\"a\": {\"x\": \"1\"}}}") ==
        Error::Kind::malformed_document);

  try {
    parse_table(
        "{\"objects\": [\"x\", \"y\"], \"attributes\": [\"a\"], "
        "\"values\": {\"a\": {\"x\": [\"1\"]}}}");
    FAIL("missing cell accepted");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("(a,y)") != std::string::npos);
  }
}

TEST_CASE("random small tables always induce equivalences") {
  std::mt19937_64 rng(20260823);
  std::uniform_int_distribution<int> nobj(2, 6), val(0, 2), width(1, 2);
  for (int round = 0; round < 30; ++round) {
    InfoTable t;
    int n = nobj(rng);
    for (int i = 0; i < n; ++i) t.objects.push_back("o" + std::to_string(i));
    for (int a = 0; a < 3; ++a) t.attributes.push_back("a" + std::to_string(a));
    for (int a = 0; a < 3; ++a) {
      std::vector<std::vector<std::string>> row;
      for (int i = 0; i < n; ++i) {
        std::vector<std::string> cell;
        int w = width(rng);
        for (int k = 0; k < w; ++k) cell.push_back(std::to_string(val(rng)));
        std::sort(cell.begin(), cell.end());
        cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
        row.push_back(cell);
      }
      t.values.push_back(row);
    }
    RelationProfile p = classify(table_to_space(t, {"a0", "a1"}));
    CHECK(p.reflexive);
    CHECK(p.symmetric);
    CHECK(p.transitive);
  }
}

TEST_CASE("operation tables round trip and validate") {
  auto g = fixtures::table1();
  CHECK(parse_groupoid(emit_groupoid(g)) == g);
  CHECK(parse_groupoid(slurp(data_path("table1.json"))) == g);

  auto kind_of = [](const std::string& text) {
    try {
      parse_groupoid(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return Error::Kind::precondition;
  };
  CHECK(kind_of("{\"universe\": [\"a\", \"b\"], \"table\": [[\"a\", \"b\"]]}") ==
        Error::Kind::malformed_document);
  CHECK(kind_of("{\"universe\": [\"a\"], \"table\": [[\"z\"]]}") ==
        Error::Kind::unknown_label);
  CHECK(kind_of("{\"universe\": [\"a\"]}") == Error::Kind::malformed_document);
}

TEST_CASE("DOT exports are deterministic and carry the expected arrows") {
  std::string dot = export_dot(fixtures::ex1());
  CHECK(dot.rfind("digraph space {", 0) == 0);
  CHECK(dot.find("  \"e\" -> \"f\";\n") != std::string::npos);
  CHECK(dot.find("  \"a\";\n") != std::string::npos);
  CHECK(dot == export_dot(fixtures::ex1()));

  // absorption arrows of the canonical table match the relation
  auto ch = fixtures::ch3();
  std::string order = export_dot(build_updg(ch));
  for (auto [a, b] : ch.pairs())
    CHECK(order.find("  \"" + ch.label(a) + "\" -> \"" + ch.label(b) +
                     "\";\n") != std::string::npos);

  std::string hasse =
      export_dot(fixtures::id2(), image_lattice(fixtures::id2(), Op::tri_up));
  CHECK(hasse ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  \"{}\";\n"
        "  \"{1}\";\n"
        "  \"{2}\";\n"
        "  \"{1,2}\";\n"
        "  \"{}\" -> \"{1}\";\n"
        "  \"{}\" -> \"{2}\";\n"
        "  \"{1}\" -> \"{1,2}\";\n"
        "  \"{2}\" -> \"{1,2}\";\n"
        "}\n");
}

TEST_CASE("JSON views expose reports, specs and classes") {
  auto claims = latfca_claims();
  const ClaimSpec* hyp = nullptr;
  for (const auto& c : claims)
    if (c.id == "lf-po-hyp") hyp = &c;
  REQUIRE(hyp != nullptr);

  Json spec = json_of(*hyp);
  CHECK(spec["claim"] == "lf-po-hyp");
  CHECK(spec["module"] == "latfca");
  CHECK(spec["expect"] == "fail");

  AuditOptions opts;
  Json rep = json_of(hyp->run({}, opts));
  CHECK(rep["claim"] == "lf-po-hyp");
  CHECK(rep["verdict"] == "fails");
  CHECK(rep["sweep_size"] == 8);
  CHECK_FALSE(rep.contains("seed"));
  REQUIRE(rep.contains("witness"));
  CHECK(rep["witness"]["space"]["relation"].size() == 6);
  CHECK(rep["witness"]["sets"].empty());
  CHECK(rep["witness"]["detail"] ==
        "distributive image lattice but relation not transitive");

  opts.mode = AuditMode::sampled;
  opts.seed = 7;
  Json sampled = json_of(hyp->run({}, opts));
  CHECK(sampled["seed"] == 7);

  auto e1 = fixtures::ex1();
  Json cls = json_of(e1, class_of(e1, bit(0)));
  CHECK(cls["kind"] == "standard");
  CHECK(cls["lower"] == Json::array({"a"}));
  CHECK(cls["upper"] == Json::array({"a", "b", "c", "e"}));
  bool found = false;
  for (const auto& m : cls["members"])
    if (m == Json::array({"a"})) found = true;
  CHECK(found);

  Json sp = json_of(fixtures::toy2());
  CHECK(sp["universe"] == Json::array({"1", "2"}));
  CHECK(sp["relation"].size() == 3);
}
