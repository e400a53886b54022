#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "fixtures.hpp"
#include "levels/aufhebung.hpp"
#include "levels/verify.hpp"

using namespace levels;
using fixtures::lit;

namespace {

// Naive sphere count: every tuple of (k-1)-cells, checked with is_sphere.
template <class M>
std::uint64_t naive_sphere_count(const SkeletalComplex<M>& X, int k) {
  const auto cells = cells_of_dim(X, k - 1);
  const int arity = sphere_arity(ShapeTraits<M>::shape, k);
  std::vector<std::size_t> idx(static_cast<std::size_t>(arity), 0);
  std::uint64_t count = 0;
  while (true) {
    Sphere<M> s{k, {}};
    for (auto i : idx) s.faces.push_back(cells[i]);
    if (is_sphere(X, s)) ++count;
    std::size_t q = 0;
    while (q < idx.size() && ++idx[q] == cells.size()) idx[q++] = 0;
    if (q == idx.size()) break;
  }
  return count;
}

// Every boundary sphere of a tabulated complex, run through both fillers.
template <class M>
void oracle_sweep(const SkeletalComplex<M>& X, int top, int* filled_out = nullptr) {
  int filled = 0;
  for (int k = 1; k <= top; ++k) {
    auto report = coskeletal_up_to(X, k - 1, k);
    REQUIRE(report.levels.size() == 1);
    CHECK(report.violations.empty());
    filled += static_cast<int>(report.levels.front().constructive_agreed);
  }
  if (filled_out) *filled_out = filled;
}

}  // namespace

TEST_CASE("is_sphere and boundary") {
  auto X = fixtures::triangle();
  for (int k = 1; k <= 4; ++k)
    for (const auto& c : cells_of_dim(X, k)) CHECK(is_sphere(X, boundary(X, c)));

  auto T = lit(X, "T", 2);
  auto s = boundary(X, T);
  std::swap(s.faces[0], s.faces[1]);
  auto check = is_sphere(X, s);
  CHECK_FALSE(check.ok);
  REQUIRE(check.violated);
  CHECK(check.violated->find("(i=") != std::string::npos);

  auto v = lit(X, "a0", 1, "s0");
  auto b = boundary(X, v);
  CHECK(b.faces == std::vector{lit(X, "a0", 0), lit(X, "a0", 0)});
  CHECK_THROWS_AS(boundary(X, lit(X, "a0", 0)), ArgumentError);
  CHECK_THROWS_AS(is_sphere(X, Sphere<SimplexMorphism>{2, {T, T}}), ArgumentError);
  CHECK_THROWS_AS(is_sphere(X, Sphere<SimplexMorphism>{2, {T, T, T}}), ArgumentError);

  // all faces one degenerate cell whose faces coincide
  auto d = lit(X, "a1", 2, "s0 s0");
  CHECK(is_sphere(X, Sphere<SimplexMorphism>{3, {d, d, d, d}}));

  // x beta_i has x at positions (i, 0) and (i, 1)
  auto C = fixtures::square();
  for (int i = 1; i <= 2; ++i) {
    auto xb = act(C, lit(C, "x", 1), CubeMorphism::degeneracy(2, i));
    auto bc = boundary(C, xb);
    for (int u = 1; u <= 2; ++u)
      for (int sign = 0; sign <= 1; ++sign) {
        const auto& f = bc.faces[static_cast<std::size_t>(2 * (u - 1) + sign)];
        if (u == i)
          CHECK(f == lit(C, "x", 1));
        else
          CHECK(is_degenerate(C, f));
      }
  }
  // boundary of a degenerate simplex read off the relations
  for (int m = 0; m <= 2; ++m) {
    auto c = act(X, T, SimplexMorphism::degeneracy(3, m));
    auto bc = boundary(X, c);
    CHECK(bc.faces[static_cast<std::size_t>(m)] == T);
    CHECK(bc.faces[static_cast<std::size_t>(m + 1)] == T);
    for (int i = 0; i < m; ++i) CHECK(bc.faces[static_cast<std::size_t>(i)] == act(X, face(X, T, i), SimplexMorphism::degeneracy(2, m - 1)));
    for (int i = m + 2; i <= 3; ++i) CHECK(bc.faces[static_cast<std::size_t>(i)] == act(X, face(X, T, i - 1), SimplexMorphism::degeneracy(2, m)));
  }
}

TEST_CASE("cubical constructive filler") {
  SkeletalComplex<CubeMorphism> X(1);
  X.add_generator("v", 0, {});
  X.add_generator("x", 1, {lit(X, "v", 0), lit(X, "v", 0)});
  auto c = lit(X, "x", 3, "b1 b1");
  REQUIRE(c.epi.deletes() == std::vector<int>{1, 2});
  auto s = boundary(X, c);
  auto res = constructive_filler_cubical(X, s);
  REQUIRE(res.status == FillStatus::filled);
  CHECK(*res.filler == c);
  CHECK(res.trace.front() == "r=1 m=1 M={1}");
  auto oracle = brute_force_fill(X, s);
  REQUIRE(oracle.witnesses.size() == 1);
  CHECK(oracle.witnesses.front() == c);

  // point case
  for (int k = 1; k <= 4; ++k) {
    auto p = X.make_cell(0, cube_epis(k - 1, 0).front());
    Sphere<CubeMorphism> ps{k, std::vector<Cell<CubeMorphism>>(static_cast<std::size_t>(2 * k), p)};
    if (k == 1) continue;  // vertices are not degenerate
    auto r = constructive_filler_cubical(X, ps);
    REQUIRE(r.status == FillStatus::filled);
    CHECK(*r.filler == X.make_cell(0, cube_epis(k, 0).front()));
  }

  auto ce = build_cubical_counterexample(1);
  auto nr = constructive_filler_cubical(ce.complex, ce.sphere);
  CHECK(nr.status == FillStatus::not_applicable);
  CHECK(brute_force_fill(ce.complex, ce.sphere).status == FillStatus::no_filler);
}

TEST_CASE("simplicial constructive filler") {
  SkeletalComplex<SimplexMorphism> X(2);
  X.add_generator("v", 0, {});
  X.add_generator("x", 2, std::vector<Cell<SimplexMorphism>>(3, lit(X, "v", 1, "s0")));
  REQUIRE(validate(X).ok);
  // a degeneracy-2 cell always has a face of degeneracy 1, so its boundary is
  // outside the filler's hypothesis and only the oracle fills it
  auto c2 = X.make_cell(1, SimplexMorphism::from_canonical(4, 2, {}, {0, 1}));
  auto s2 = boundary(X, c2);
  auto r2 = constructive_filler_simplicial(X, s2);
  CHECK(r2.status == FillStatus::not_applicable);
  auto o2 = brute_force_fill(X, s2);
  REQUIRE(o2.witnesses.size() == 1);
  CHECK(o2.witnesses.front() == c2);

  auto c = X.make_cell(1, SimplexMorphism::from_canonical(5, 2, {}, {0, 1, 2}));
  auto s = boundary(X, c);
  auto res = constructive_filler_simplicial(X, s);
  REQUIRE(res.status == FillStatus::filled);
  CHECK(*res.filler == c);
  auto oracle = brute_force_fill(X, s);
  REQUIRE(oracle.witnesses.size() == 1);
  CHECK(oracle.witnesses.front() == c);

  for (int k = 3; k <= 5; ++k) {
    auto p = X.make_cell(0, simplex_epis(k - 1, 0).front());
    Sphere<SimplexMorphism> ps{k, std::vector<Cell<SimplexMorphism>>(static_cast<std::size_t>(k + 1), p)};
    auto r = constructive_filler_simplicial(X, ps);
    REQUIRE(r.status == FillStatus::filled);
    CHECK(*r.filler == X.make_cell(0, simplex_epis(k, 0).front()));
  }

  auto ce = build_simplicial_counterexample(3);
  CHECK(constructive_filler_simplicial(ce.complex, ce.sphere).status == FillStatus::not_applicable);
  CHECK(brute_force_fill(ce.complex, ce.sphere).status == FillStatus::no_filler);
}

TEST_CASE("globular filler") {
  auto X = fixtures::globes();
  for (int k = 3; k <= 5; ++k)
    for (const auto& c : cells_of_dim(X, k - 1)) {
      if (!is_degenerate(X, c)) continue;
      Sphere<GlobeMorphism> s{k, {c, c}};
      auto r = constructive_filler_globular(X, s);
      REQUIRE(r.status == FillStatus::filled);
      auto o = brute_force_fill(X, s);
      REQUIRE(o.witnesses.size() == 1);
      CHECK(o.witnesses.front() == *r.filler);
    }
  auto ce = build_globular_counterexample(2);
  CHECK(constructive_filler_globular(ce.complex, ce.sphere).status == FillStatus::not_applicable);
  CHECK(brute_force_fill(ce.complex, ce.sphere).status == FillStatus::no_filler);
}

TEST_CASE("oracle equivalence over every enumerated sphere") {
  int filled = 0;
  oracle_sweep(fixtures::triangle(), 6, &filled);
  CHECK(filled > 0);
  oracle_sweep(fixtures::square(), 5, &filled);
  CHECK(filled > 0);
  oracle_sweep(build_cubical_counterexample(1).complex, 4);
  oracle_sweep(build_simplicial_pattern(2).complex, 5);
  oracle_sweep(fixtures::globes(), 5);
}

TEST_CASE("sphere enumeration agrees with the naive count") {
  auto C = build_cubical_counterexample(1).complex;
  TabulatedPresheaf<CubeMorphism> TC(C, 3);
  for (int k = 1; k <= 3; ++k) {
    std::uint64_t n = 0;
    SphereEnumerator<CubeMorphism>(TC, k).enumerate(1'000'000, [&](const std::vector<int>&) { ++n; });
    CHECK(n == naive_sphere_count(C, k));
  }
  auto X = fixtures::triangle();
  TabulatedPresheaf<SimplexMorphism> TX(X, 3);
  for (int k = 1; k <= 3; ++k) {
    std::uint64_t n = 0;
    SphereEnumerator<SimplexMorphism>(TX, k).enumerate(1'000'000, [&](const std::vector<int>&) { ++n; });
    CHECK(n == naive_sphere_count(X, k));
  }
  auto G = fixtures::globes();
  TabulatedPresheaf<GlobeMorphism> TG(G, 4);
  for (int k = 1; k <= 4; ++k) {
    std::uint64_t n = 0;
    SphereEnumerator<GlobeMorphism>(TG, k).enumerate(1'000'000, [&](const std::vector<int>&) { ++n; });
    CHECK(n == naive_sphere_count(G, k));
  }
}

TEST_CASE("coskeletal_up_to") {
  SkeletalComplex<SimplexMorphism> one(0);
  one.add_generator("v", 0, {});
  auto r0 = coskeletal_up_to(one, 1, 2);
  CHECK(r0.coskeletal);
  CHECK_FALSE(r0.partial);

  auto ce = build_cubical_counterexample(1);
  auto up = coskeletal_up_to(ce.complex, 2, 4);
  CHECK(up.coskeletal);
  CHECK(up.violations.empty());
  CoskeletalOptions all;
  all.max_witnesses = 1000;
  auto down = coskeletal_up_to(ce.complex, 1, 4, all);
  CHECK_FALSE(down.coskeletal);
  bool found = false;
  for (const auto& w : down.witnesses)
    if (w.k == 2 && w.kind == "no_filler" && w.faces == std::vector<std::string>{"x[]", "x[]", "y[]", "y[]"}) found = true;
  CHECK(found);

  CHECK_THROWS_AS(coskeletal_up_to(ce.complex, 1, 5), TruncationError);

  // a tiny budget forces sampling and marks the report partial
  CoskeletalOptions tight;
  tight.sphere_budget = 3;
  tight.samples = 50;
  auto partial = coskeletal_up_to(fixtures::triangle(), 2, 4, tight);
  CHECK(partial.partial);
  CHECK(partial.levels.back().mode == "sampled");
  CHECK(to_json(partial).dump() == to_json(coskeletal_up_to(fixtures::triangle(), 2, 4, tight)).dump());
}
