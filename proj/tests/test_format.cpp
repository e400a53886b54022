#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "levels/aufhebung.hpp"
#include "levels/format.hpp"

using namespace levels;
using fixtures::lit;

namespace {

template <class M>
void round_trip(const SkeletalComplex<M>& X) {
  const auto text = print_complex(X);
  auto parsed = parse_complex(text);
  REQUIRE(std::holds_alternative<SkeletalComplex<M>>(parsed));
  const auto& Y = std::get<SkeletalComplex<M>>(parsed);
  CHECK(Y.skeletal_level() == X.skeletal_level());
  CHECK(Y.truncation() == X.truncation());
  REQUIRE(Y.generators().size() == X.generators().size());
  for (std::size_t i = 0; i < X.generators().size(); ++i) {
    CHECK(Y.generators()[i].id == X.generators()[i].id);
    CHECK(Y.generators()[i].faces == X.generators()[i].faces);
  }
  CHECK(print_complex(parsed) == text);
}

// (line, column) of the ParseError raised by the text.
std::pair<int, int> error_at(const std::string& text) {
  try {
    parse_complex(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_CASE("print and parse round trip") {
  round_trip(fixtures::triangle());
  round_trip(fixtures::square());
  round_trip(fixtures::globes());
  round_trip(fixtures::cyclic_triangle());
  round_trip(build_simplicial_counterexample(3).complex);
  round_trip(underlying_simplicial(build_cyclic_counterexample(2).complex));
  for (std::uint64_t s = 0; s < 20; ++s) {
    round_trip(random_skeletal_complex<SimplexMorphism>(2, {}, s));
    round_trip(random_skeletal_complex<CubeMorphism>(2, {}, s));
    round_trip(random_skeletal_complex<GlobeMorphism>(3, {}, s));
    round_trip(random_skeletal_complex<CyclicMorphism>(2, {}, s));
  }
}

TEST_CASE("file syntax") {
  const std::string text =
      "# a loop on a vertex\n"
      "\n"
      "shape cubical\n"
      "skeletal 1   # one-dimensional\n"
      "gen v dim 0\n"
      "gen x dim 1 faces v[] v[]\n";
  auto any = parse_complex(text);
  CHECK(shape_of(any) == Shape::cubical);
  const auto& X = std::get<SkeletalComplex<CubeMorphism>>(any);
  CHECK(X.truncation() == 4);
  CHECK(X.generators().size() == 2);
  CHECK(validate(X).ok);

  auto Y = std::get<SkeletalComplex<SimplexMorphism>>(parse_complex("shape simplicial\nskeletal 0\ntruncate 3\ngen v dim 0 faces\n"));
  CHECK(Y.truncation() == 3);
}

TEST_CASE("parse errors carry line and column") {
  const std::string head = "shape simplicial\nskeletal 1\n";
  CHECK(error_at(head + "gen v dim 0\ngen e dim 1 faces v[] w[]\n") == std::pair{4, 23});
  CHECK(error_at(head + "gen v dim 0\ngen e dim 1 faces v[]\n") == std::pair{4, 5});
  CHECK(error_at(head + "gen v dim 0\ngen e dim 1 faces v[] v[] v[]\n") == std::pair{4, 27});
  CHECK(error_at(head + "gen v dim 0\nskeletal 2\n") == std::pair{4, 1});
  CHECK(error_at(head + "gen v dim 0\ngen v dim 0\n") == std::pair{4, 5});
  CHECK(error_at(head + "gen v dim x\n") == std::pair{3, 11});
  CHECK(error_at(head + "gen v dim 0\ngen e dim 1 faces v[] v[q]\n") == std::pair{4, 25});
  CHECK(error_at(head + "gen v dim 0\ngen e dim 1 faces v[s0] v[]\n") == std::pair{4, 19});
  CHECK(error_at(head + "gen v dim 0\ngen e dim 1 faces v[ v[]\n") == std::pair{4, 23});
  CHECK(error_at("skeletal 1\ngen v dim 0\n") == std::pair{2, 1});
  CHECK(error_at("shape hexagonal\n") == std::pair{1, 7});
  CHECK(error_at("shape simplicial\nshape cubical\n") == std::pair{2, 1});
  CHECK(error_at("shape simplicial\nskeletal 2\ntruncate 1\n") == std::pair{3, 1});
  CHECK(error_at("shape simplicial\nfoo 1\n") == std::pair{2, 1});
  try {
    parse_complex(head + "gen v dim 0\ngen e dim 1 faces v[] w[]\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("unknown generator 'w'") != std::string::npos);
    CHECK(std::string(e.what()).rfind("line 4, column 23", 0) == 0);
  }
}

TEST_CASE("cell and sphere literals") {
  auto X = fixtures::triangle();
  auto c = parse_cell(X, "a0[s0 s0]");
  CHECK(c.dim() == 2);
  CHECK(c == lit(X, "a0", 2, "s0 s0"));
  CHECK(parse_cell(X, "T[]").dim() == 2);
  CHECK(parse_cell(X, "T[]", 2) == lit(X, "T", 2));
  CHECK_THROWS_AS(parse_cell(X, "T[d0]"), ParseError);
  CHECK_THROWS_AS(parse_cell(X, "T"), ParseError);
  CHECK_THROWS_AS(parse_cell(X, "Q[]"), ParseError);

  auto s = parse_sphere(X, "e12[], e02[] ,e01[]");
  CHECK(s.k == 2);
  CHECK(s == boundary(X, lit(X, "T", 2)));
  CHECK(print_sphere(X, s) == "e12[], e02[], e01[]");
  CHECK_THROWS_AS(parse_sphere(X, "e12[], e02[]"), ParseError);
  CHECK_THROWS_AS(parse_sphere(X, "e12[], a0[], e01[]"), ParseError);
  CHECK_THROWS_AS(parse_sphere(X, "e12[], , e01[]"), ParseError);

  auto C = build_cubical_counterexample(1);
  CHECK(parse_sphere(C.complex, print_sphere(C.complex, C.sphere)) == C.sphere);
  auto Y = build_cyclic_counterexample(2);
  CHECK(parse_sphere(Y.complex, print_sphere(Y.complex, Y.sphere)) == Y.sphere);
}
