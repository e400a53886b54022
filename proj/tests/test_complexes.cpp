#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "levels/combinatorics.hpp"
#include "levels/tabulate.hpp"
#include "oracle.hpp"

using namespace levels;
using fixtures::lit;

namespace {

template <class M>
M random_morphism(std::mt19937_64& rng, int dom, int cod) {
  using T = ShapeTraits<M>;
  std::vector<int> mids;
  for (int m = 0; m <= std::min(dom, cod); ++m)
    if (!T::epis(dom, m).empty() && !T::monos(m, cod).empty()) mids.push_back(m);
  const int m = mids[rng() % mids.size()];
  auto epis = T::epis(dom, m);
  auto monos = T::monos(m, cod);
  return compose(monos[rng() % monos.size()], epis[rng() % epis.size()]);
}

template <class M>
void check_functoriality(const SkeletalComplex<M>& X, int top, int trials, unsigned seed) {
  TabulatedPresheaf<M> T(X, top);
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const int k = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
    if (T.size(k) == 0) continue;
    const int id = static_cast<int>(rng() % T.size(k));
    const int b = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
    const int a = static_cast<int>(rng() % static_cast<unsigned>(top + 1));
    auto f = random_morphism<M>(rng, b, k);
    auto g = random_morphism<M>(rng, a, b);
    const auto& c = T.cell(k, id);
    auto lhs = act(X, c, compose(f, g));
    REQUIRE(lhs == act(X, act(X, c, f), g));
    REQUIRE(T.find(a, lhs) == T.apply(k, id, compose(f, g)));
    REQUIRE(T.apply(b, T.apply(k, id, f), g) == T.apply(k, id, compose(f, g)));
  }
}

// Every cell decomposes through exactly `orbit(dim)` (non-degenerate, epi)
// pairs in the tables, one of which is the stored representation.
template <class M, class Orbit>
void check_ez(const SkeletalComplex<M>& X, int top, Orbit orbit) {
  TabulatedPresheaf<M> T(X, top);
  for (int k = 0; k <= top; ++k)
    for (int x = 0; x < static_cast<int>(T.size(k)); ++x) {
      const auto& c = T.cell(k, x);
      auto found = ez_decompose_tabulated(T, k, x);
      const int gdim = X.generator(c.generator).dim;
      REQUIRE(static_cast<int>(found.size()) == orbit(gdim));
      bool stored = false;
      for (const auto& d : found) {
        CHECK(d.dim == gdim);
        if (T.cell(d.dim, d.cell) == X.generator_cell(c.generator) && d.epi == c.epi) stored = true;
      }
      CHECK(stored);
      CHECK(T.degenerate(k, x) == is_degenerate(X, c));
    }
}

}  // namespace

TEST_CASE("validate") {
  SkeletalComplex<SimplexMorphism> one(0);
  one.add_generator("v", 0, {});
  CHECK(validate(one).ok);

  SkeletalComplex<CubeMorphism> cube(1);
  cube.add_generator("v", 0, {});
  cube.add_generator("x", 1, {lit(cube, "v", 0), lit(cube, "v", 0)});
  cube.add_generator("y", 1, {lit(cube, "v", 0), lit(cube, "v", 0)});
  CHECK(validate(cube).ok);

  CHECK(validate(fixtures::triangle()).ok);
  CHECK(validate(fixtures::square()).ok);
  CHECK(validate(fixtures::globes()).ok);
  CHECK(validate(fixtures::cyclic_triangle()).ok);

  // perturb the triangle: swap two faces
  auto X = fixtures::triangle();
  SkeletalComplex<SimplexMorphism> bad(2);
  for (const auto& g : X.generators()) {
    auto faces = g.faces;
    if (g.id == "T") std::swap(faces[0], faces[2]);
    bad.add_generator(g.id, g.dim, faces);
  }
  auto report = validate(bad);
  CHECK_FALSE(report.ok);
  REQUIRE(!report.issues.empty());
  CHECK(report.issues.front().generator == "T");
  CHECK(report.issues.front().message.find("(i=") != std::string::npos);

  SkeletalComplex<SimplexMorphism> over(0);
  over.add_generator("v", 0, {});
  over.add_generator("e", 1, {lit(over, "v", 0), lit(over, "v", 0)});
  CHECK_FALSE(validate(over).ok);

  CHECK_THROWS_AS(one.add_generator("v", 0, {}), ArgumentError);
  CHECK_THROWS_AS(one.add_generator("e", 1, {lit(one, "v", 0)}), ArgumentError);
  CHECK_THROWS_AS(SkeletalComplex<SimplexMorphism>(2, 1), ArgumentError);
  CHECK(SkeletalComplex<SimplexMorphism>(3).truncation() == 8);
}

TEST_CASE("act examples") {
  auto X = fixtures::square();
  auto yb = act(X, X.generator_cell(*X.find("x")), CubeMorphism::degeneracy(2, 2));
  for (int sign = 0; sign <= 1; ++sign) CHECK(act(X, yb, CubeMorphism::face(2, 2, sign)) == X.generator_cell(*X.find("x")));
  auto c = lit(X, "q", 4, "b1 b3");
  CHECK(act(X, c, CubeMorphism::identity(4)) == c);
  CHECK_THROWS_AS(act(X, c, CubeMorphism::identity(3)), CompositionError);
  CHECK_THROWS_AS(act(X, c, cube_epis(7, 4).front()), TruncationError);
}

TEST_CASE("functoriality") {
  check_functoriality(fixtures::triangle(), 5, 10000, 11);
  check_functoriality(fixtures::square(), 5, 10000, 12);
  check_functoriality(fixtures::globes(), 5, 10000, 13);
  check_functoriality(fixtures::cyclic_triangle(), 5, 10000, 14);
}

TEST_CASE("tabulation") {
  SkeletalComplex<SimplexMorphism> one(0);
  one.add_generator("v", 0, {});
  TabulatedPresheaf<SimplexMorphism> T1(one, 2);
  CHECK(T1.size(2) == 1);
  CHECK(T1.cell(2, 0).epi.epis() == std::vector<int>{0, 1});

  SkeletalComplex<CubeMorphism> C(1);
  C.add_generator("v", 0, {});
  C.add_generator("x", 1, {lit(C, "v", 0), lit(C, "v", 0)});
  CHECK(cells_of_dim(C, 2).size() == 3);
  C.add_generator("y", 1, {lit(C, "v", 0), lit(C, "v", 0)});
  TabulatedPresheaf<CubeMorphism> T2(C, 2);
  CHECK(T2.size(2) == 5);

  for (int k = 0; k <= 5; ++k) {
    auto X = fixtures::triangle();
    std::size_t expected = 0;
    for (const auto& g : X.generators()) expected += static_cast<std::size_t>(levels::detail::binomial(k, k - g.dim));
    CHECK(cells_of_dim(X, k).size() == expected);
  }

  CHECK(TabulatedPresheaf<SimplexMorphism>(fixtures::triangle(), 6).check_relations().empty());
  CHECK(TabulatedPresheaf<CubeMorphism>(fixtures::square(), 5).check_relations().empty());
  CHECK(TabulatedPresheaf<GlobeMorphism>(fixtures::globes(), 5).check_relations().empty());
  CHECK(TabulatedPresheaf<CyclicMorphism>(fixtures::cyclic_triangle(), 5).check_relations().empty());

  CHECK_THROWS_AS(TabulatedPresheaf<SimplexMorphism>(fixtures::triangle(), 6, {.max_cells = 20}), ResourceError);
  CHECK_THROWS_AS(TabulatedPresheaf<SimplexMorphism>(fixtures::triangle(), 8), TruncationError);
}

TEST_CASE("EZ decomposition") {
  SkeletalComplex<SimplexMorphism> one(0);
  one.add_generator("v", 0, {});
  auto c = act(one, one.generator_cell(0), normalize(SimplexWord{sigma(0), sigma(0)}, 2));
  auto [y, e] = ez_decompose(one, c);
  CHECK(y == one.generator_cell(0));
  CHECK(e.epis() == std::vector<int>{0, 1});
  auto g = fixtures::triangle().generator_cell(6);
  CHECK(ez_decompose(fixtures::triangle(), g).second.is_identity());

  check_ez(fixtures::triangle(), 6, [](int) { return 1; });
  check_ez(fixtures::square(), 5, [](int) { return 1; });
  check_ez(fixtures::globes(), 5, [](int) { return 1; });
  // a cyclic cell decomposes once per automorphism of the generator's dimension
  check_ez(fixtures::cyclic_triangle(), 5, [](int d) { return d + 1; });
}

TEST_CASE("degeneracy laws") {
  auto X = fixtures::triangle();
  TabulatedPresheaf<SimplexMorphism> T(X, 6);
  for (int k = 0; k <= 5; ++k)
    for (const auto& c : T.cells(k)) {
      for (int j = 0; j <= k; ++j) CHECK(dgn(X, act(X, c, SimplexMorphism::degeneracy(k + 1, j))) == dgn(X, c) + 1);
      for (int i = 0; i <= k && k >= 1; ++i) {
        const int d = dgn(X, face(X, c, i));
        CHECK(d >= dgn(X, c) - 1);
        CHECK(d <= dgn(X, c) + 1);
      }
    }
  auto C = fixtures::square();
  TabulatedPresheaf<CubeMorphism> TC(C, 6);
  for (int k = 0; k <= 5; ++k)
    for (const auto& c : TC.cells(k)) {
      for (int j = 1; j <= k + 1; ++j) CHECK(dgn(C, act(C, c, CubeMorphism::degeneracy(k + 1, j))) == dgn(C, c) + 1);
      for (int idx = 0; idx < 2 * k; ++idx) CHECK(dgn(C, face(C, c, idx)) >= dgn(C, c) - 1);
    }
}

TEST_CASE("simplicial reduction") {
  auto X = fixtures::triangle();
  TabulatedPresheaf<SimplexMorphism> T(X, 6);
  // x sigma_i is properly reduced by i
  for (int k = 0; k <= 4; ++k)
    for (const auto& c : T.cells(k))
      for (int i = 0; i <= k; ++i) CHECK(properly_reduces(X, act(X, c, SimplexMorphism::degeneracy(k + 1, i)), i));
  for (const auto& g : X.generators()) {
    auto c = X.generator_cell(*X.find(g.id));
    for (int i = 0; i <= g.dim && g.dim >= 1; ++i) CHECK_FALSE(reduces(X, c, i));
  }
  for (int k = 1; k <= 5; ++k)
    for (const auto& c : T.cells(k)) {
      const auto& eps = c.epi;
      std::vector<int> flat;
      for (int j = 0; j < k; ++j)
        if (eps.eval(j) == eps.eval(j + 1)) flat.push_back(j);
      CHECK(properly_reducing_indices(X, c) == flat);
      CHECK(static_cast<int>(flat.size()) == dgn(X, c));
      for (int i = 0; i <= k; ++i) {
        // reduces iff x = x d_i s_i or x = x d_i s_{i-1}
        bool alt = (i < k && act(X, face(X, c, i), SimplexMorphism::degeneracy(k, i)) == c) ||
                   (i > 0 && act(X, face(X, c, i), SimplexMorphism::degeneracy(k, i - 1)) == c);
        CHECK(reduces(X, c, i) == alt);
        if (properly_reduces(X, c, i)) CHECK(reduces(X, c, i + 1));
        if (reduces(X, c, i) && !properly_reduces(X, c, i)) CHECK(properly_reduces(X, c, i - 1));
      }
    }
  auto v = X.generator_cell(0);
  CHECK_THROWS_AS(reduces(X, act(X, v, SimplexMorphism::degeneracy(1, 0)), 2), ArgumentError);
}

TEST_CASE("cubical reduction equivalences and the face-swap trick") {
  auto X = fixtures::square();
  TabulatedPresheaf<CubeMorphism> T(X, 5);
  for (int k = 1; k <= 5; ++k)
    for (const auto& c : T.cells(k))
      for (int i = 1; i <= k; ++i) {
        const bool r1 = reduces(X, c, i);
        auto a0 = face(X, c, 2 * (i - 1)), a1 = face(X, c, 2 * (i - 1) + 1);
        const bool r2 = dgn(X, a0) == dgn(X, c) - 1 && dgn(X, a1) == dgn(X, c) - 1;
        const auto& del = c.epi.deletes();
        const bool r3 = std::find(del.begin(), del.end(), i) != del.end();
        auto b = CubeMorphism::degeneracy(k, i);
        const bool r5 = act(X, a0, b) == c || act(X, a1, b) == c;
        const bool r6 = act(X, a0, b) == c && act(X, a1, b) == c;
        CHECK(r1 == r2);
        CHECK(r1 == r3);
        CHECK(r1 == r5);
        CHECK(r1 == r6);
      }
  for (int k = 1; k <= 4; ++k)
    for (const auto& x : T.cells(k))
      for (const auto& y : T.cells(k))
        for (int i = 1; i <= k; ++i) {
          if (!reduces(X, x, i) || !reduces(X, y, i)) continue;
          for (int a = 0; a <= 1; ++a)
            for (int b = 0; b <= 1; ++b)
              if (face(X, x, 2 * (i - 1) + a) == face(X, y, 2 * (i - 1) + b)) CHECK(x == y);
        }
}

TEST_CASE("degenerate cells are determined by their faces") {
  auto check = [](const auto& X, int top) {
    using M = std::decay_t<decltype(X.generators().front().faces.front().epi)>;
    TabulatedPresheaf<M> T(X, top);
    for (int k = 1; k <= top; ++k) {
      std::map<std::vector<int>, int> seen;
      for (int x = 0; x < static_cast<int>(T.size(k)); ++x) {
        if (!T.degenerate(k, x)) continue;
        std::vector<int> key;
        for (int idx = 0; idx < T.face_count(k); ++idx) key.push_back(T.face(k, x, idx));
        auto [it, fresh] = seen.emplace(key, x);
        CHECK(fresh);
      }
    }
  };
  check(fixtures::triangle(), 6);
  check(fixtures::square(), 6);
}
