#include "eqslice/checkerboard.hpp"

#include "eqslice/linalg.hpp"
#include "fixtures.hpp"

#include <doctest.h>

using namespace eqslice;

namespace {

CheckerboardPresentation toy_one_crossing() {
  CheckerboardPresentation p;
  p.name = "toy";
  p.n = 1;
  p.edges_plus = {{1, 2}, {2, 1}};
  p.edges_minus = {{1, 2}, {1, 2}};
  return p;
}

}  // namespace

TEST_CASE("parse bundled 12a1105 presentation") {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  CHECK(p.name == "12a1105");
  CHECK(p.n == 6);
  CHECK(p.edges_plus.size() == 12);
  CHECK(p.edges_minus.size() == 12);
}

TEST_CASE("parse errors carry structured codes") {
  SUBCASE("wrong edge count") {
    std::string text = R"({"name":"bad","n":2,
      "edges_plus":[[1,2],[1,2],[2,3]],
      "edges_minus":[[2,3],[3,1],[2,1],[2,1]]})";
    try {
      parse_presentation(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.code() == ParseErrorCode::WrongEdgeCount);
    }
  }
  SUBCASE("self-loop") {
    std::string text = R"({"name":"bad","n":2,
      "edges_plus":[[3,3],[1,2],[2,3],[3,1]],
      "edges_minus":[[2,3],[3,1],[2,1],[2,1]]})";
    try {
      parse_presentation(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.code() == ParseErrorCode::SelfLoop);
    }
  }
  SUBCASE("index out of range") {
    std::string text = R"({"name":"bad","n":2,
      "edges_plus":[[1,4],[1,2],[2,3],[3,1]],
      "edges_minus":[[2,3],[3,1],[2,1],[2,1]]})";
    CHECK_THROWS_AS(parse_presentation(text), ParseError);
  }
  SUBCASE("not json") { CHECK_THROWS_AS(parse_presentation("not json"), ParseError); }
}

TEST_CASE("serialization round-trips") {
  auto p = load_presentation(fixtures::data_file("figure8.json"));
  auto q = parse_presentation(serialize_presentation(p));
  CHECK(q.n == p.n);
  CHECK(q.edges_plus == p.edges_plus);
  CHECK(q.edges_minus == p.edges_minus);
}

TEST_CASE("reduced incidence matrices reproduce the 12a1105 matrices") {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  CHECK(reduced_incidence(p, Side::plus) == fixtures::kJPlus);
  CHECK(reduced_incidence(p, Side::minus) == fixtures::kJMinus);
}

TEST_CASE("full incidence columns sum to zero") {
  for (const char* name : {"12a1105.json", "figure8.json"}) {
    auto p = load_presentation(fixtures::data_file(name));
    for (Side side : {Side::plus, Side::minus}) {
      IntMatrix j = full_incidence(p, side);
      for (std::size_t c = 0; c < j.cols(); ++c) {
        Int sum = 0;
        for (std::size_t r = 0; r < j.rows(); ++r) sum += j(r, c);
        CHECK(sum == 0);
      }
    }
  }
}

TEST_CASE("toy one-crossing presentation") {
  auto p = toy_one_crossing();
  IntMatrix j = reduced_incidence(p, Side::plus);
  REQUIRE(j.rows() == 1);
  REQUIRE(j.cols() == 2);
  CHECK(abs_int(j(0, 0)) == 1);
  CHECK(abs_int(j(0, 1)) == 1);
  CHECK(goeritz(p, Side::plus).matrix == IntMatrix{{2}});
  CHECK(validate(p).passed());
}

TEST_CASE("goeritz forms of 12a1105") {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  GoeritzForm plus = goeritz(p, Side::plus);
  CHECK(plus.matrix == fixtures::kGoeritzPlus);
  CHECK(determinant(plus.matrix) == 289);

  GoeritzForm minus = goeritz(p, Side::minus);
  CHECK(is_positive_definite(minus.matrix));
  CHECK(minus.matrix.diagonal() == fixtures::vec({3, 3, 4, 4, 3, 2}));
  CHECK(determinant(minus.matrix) == 289);
}

TEST_CASE("reduced incidence is surjective over the integers for connected graphs") {
  for (const char* name : {"12a1105.json", "figure8.json"}) {
    auto p = load_presentation(fixtures::data_file(name));
    for (Side side : {Side::plus, Side::minus}) {
      auto snf = smith_normal_form(reduced_incidence(p, side));
      for (std::size_t i = 0; i < p.n; ++i) CHECK(snf.d(i, i) == 1);
    }
  }
}

TEST_CASE("validate accepts the bundled presentations") {
  for (const char* name : {"12a1105.json", "figure8.json"}) {
    auto p = load_presentation(fixtures::data_file(name));
    ValidationReport report = validate(p);
    for (const auto& c : report.checks) {
      INFO(name, ": ", c.name, " ", c.detail);
      CHECK(c.passed);
    }
  }
}

TEST_CASE("validate rejects a reversed edge") {
  auto p = load_presentation(fixtures::data_file("12a1105.json"));
  std::swap(p.edges_minus[3].first, p.edges_minus[3].second);
  ValidationReport report = validate(p);
  CHECK_FALSE(report.passed());
  bool orth_failed = false;
  for (const auto& c : report.checks)
    if (c.name.find("orthogonality") != std::string::npos && !c.passed) orth_failed = true;
  CHECK(orth_failed);
}

TEST_CASE("validate rejects a disconnected graph") {
  // Two crossings between vertices 1 and 2 twice: vertex 3 never appears.
  CheckerboardPresentation p;
  p.n = 2;
  p.edges_plus = {{1, 2}, {2, 1}, {1, 2}, {2, 1}};
  p.edges_minus = {{1, 2}, {1, 2}, {1, 2}, {1, 2}};
  ValidationReport report = validate(p);
  CHECK_FALSE(report.passed());
  CHECK_FALSE(report.checks[0].passed);  // plus graph connected
}

TEST_CASE("figure-eight goeritz form") {
  auto p = load_presentation(fixtures::data_file("figure8.json"));
  GoeritzForm plus = goeritz(p, Side::plus);
  REQUIRE(plus.matrix.rows() == 2);
  CHECK(is_positive_definite(plus.matrix));
  CHECK(determinant(plus.matrix) == 5);
}
