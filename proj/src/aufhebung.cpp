#include "levels/aufhebung.hpp"

#include <algorithm>

namespace levels {

namespace {

std::vector<int> range(int lo, int hi) {  // [lo, hi]
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

template <class M>
Cell<M> on_vertex(const SkeletalComplex<M>& X, int v, int dim) {
  return X.make_cell(v, ShapeTraits<M>::epis(dim, 0).front());
}

template <class M>
std::vector<Cell<M>> all_on_vertex(const SkeletalComplex<M>& X, int v, int dim, int count) {
  return std::vector<Cell<M>>(static_cast<std::size_t>(count), on_vertex(X, v, dim));
}

// Shared generators of the simplicial and cyclic patterns.
template <class M>
void add_pattern(SkeletalComplex<M>& X, int n) {
  const int v = X.add_generator("v", 0, {});
  const int xp = X.add_generator("x'", n - 1, n >= 2 ? all_on_vertex(X, v, n - 2, n) : std::vector<Cell<M>>{});
  const int yp = X.add_generator("y'", n - 1, n >= 2 ? all_on_vertex(X, v, n - 2, n) : std::vector<Cell<M>>{});
  auto xf = all_on_vertex(X, v, n - 1, n + 1);
  xf.front() = X.generator_cell(xp);
  X.add_generator("x", n, xf);
  auto yf = all_on_vertex(X, v, n - 1, n + 1);
  yf.back() = X.generator_cell(yp);
  X.add_generator("y", n, yf);
}

}  // namespace

Counterexample<CubeMorphism> build_cubical_counterexample(int n) {
  if (n < 1) throw ArgumentError("cubical counterexample needs n >= 1");
  SkeletalComplex<CubeMorphism> X(n);
  const int v = X.add_generator("v", 0, {});
  const int x = X.add_generator("x", n, all_on_vertex(X, v, n - 1, 2 * n));
  const int y = X.add_generator("y", n, all_on_vertex(X, v, n - 1, 2 * n));
  Sphere<CubeMorphism> s{2 * n, {}};
  const auto left = CubeMorphism::from_canonical(2 * n - 1, n, {}, range(1, n - 1));
  const auto right = CubeMorphism::from_canonical(2 * n - 1, n, {}, range(n + 1, 2 * n - 1));
  for (int u = 1; u <= 2 * n; ++u)
    for (int sign = 0; sign <= 1; ++sign) s.faces.push_back(u <= n ? X.make_cell(x, left) : X.make_cell(y, right));
  return {std::move(X), std::move(s)};
}

Counterexample<SimplexMorphism> build_simplicial_pattern(int n) {
  if (n < 2) throw ArgumentError("simplicial pattern needs n >= 2");
  SkeletalComplex<SimplexMorphism> X(n);
  add_pattern(X, n);
  const int x = *X.find("x"), y = *X.find("y");
  const auto left = SimplexMorphism::from_canonical(2 * n - 2, n, {}, range(0, n - 3));
  const auto right = SimplexMorphism::from_canonical(2 * n - 2, n, {}, range(n, 2 * n - 3));
  Sphere<SimplexMorphism> s{2 * n - 1, {}};
  for (int u = 0; u <= 2 * n - 1; ++u) s.faces.push_back(u < n ? X.make_cell(x, left) : X.make_cell(y, right));
  return {std::move(X), std::move(s)};
}

Counterexample<SimplexMorphism> build_simplicial_counterexample(int n) {
  if (n < 3) throw ArgumentError("simplicial counterexample needs n >= 3");
  return build_simplicial_pattern(n);
}

Counterexample<SimplexMorphism> build_low_simplicial_counterexample(int n) {
  if (n < 0 || n > 1) throw ArgumentError("low simplicial counterexample needs n in {0, 1}");
  SkeletalComplex<SimplexMorphism> X(n);
  const int a = X.add_generator("a", 0, {});
  const int b = X.add_generator("b", 0, {});
  if (n == 0) {
    Sphere<SimplexMorphism> s{1, {X.generator_cell(b), X.generator_cell(a)}};
    return {std::move(X), std::move(s)};
  }
  const int c = X.add_generator("c", 0, {});
  const int ab = X.add_generator("ab", 1, {X.generator_cell(b), X.generator_cell(a)});
  const int bc = X.add_generator("bc", 1, {X.generator_cell(c), X.generator_cell(b)});
  const int ac = X.add_generator("ac", 1, {X.generator_cell(c), X.generator_cell(a)});
  Sphere<SimplexMorphism> s{2, {X.generator_cell(bc), X.generator_cell(ac), X.generator_cell(ab)}};
  return {std::move(X), std::move(s)};
}

Counterexample<GlobeMorphism> build_globular_counterexample(int n) {
  if (n < 0) throw ArgumentError("globular counterexample needs n >= 0");
  SkeletalComplex<GlobeMorphism> X(n);
  std::vector<Cell<GlobeMorphism>> f;
  if (n >= 1) f = all_on_vertex(X, X.add_generator("v", 0, {}), n - 1, 2);
  const int x = X.add_generator("x", n, f);
  const int y = X.add_generator("y", n, f);
  Sphere<GlobeMorphism> s{n + 1, {X.generator_cell(x), X.generator_cell(y)}};
  return {std::move(X), std::move(s)};
}

Counterexample<CyclicMorphism> build_cyclic_counterexample(int n) {
  if (n < 1) throw ArgumentError("cyclic counterexample needs n >= 1");
  SkeletalComplex<CyclicMorphism> X(n);
  add_pattern(X, n);
  if (n == 1) {
    Sphere<CyclicMorphism> s{1, {X.generator_cell(*X.find("x'")), X.generator_cell(*X.find("y'"))}};
    return {std::move(X), std::move(s)};
  }
  const int x = *X.find("x"), y = *X.find("y");
  const auto left = CyclicMorphism::from_delta(SimplexMorphism::from_canonical(2 * n - 2, n, {}, range(0, n - 3)));
  const auto right = CyclicMorphism::from_delta(SimplexMorphism::from_canonical(2 * n - 2, n, {}, range(n, 2 * n - 3)));
  Sphere<CyclicMorphism> s{2 * n - 1, {}};
  for (int u = 0; u <= 2 * n - 1; ++u) s.faces.push_back(u < n ? X.make_cell(x, left) : X.make_cell(y, right));
  return {std::move(X), std::move(s)};
}

// ---- underlying simplicial set ------------------------------------------------

namespace {

// Cyclic epis onto [d] whose lift is strictly increasing: the d+1 rotations
// when k = d, the d+1 extra-degenerate shapes when k = d+1.
std::vector<CyclicMorphism> simplicially_nondegenerate(int k, int d) {
  std::vector<CyclicMorphism> out;
  for (auto& e : cyclic_epis(k, d)) {
    bool strict = true;
    for (int j = 0; j < k && strict; ++j) strict = e.eval_lift(j) < e.eval_lift(j + 1);
    if (strict) out.push_back(std::move(e));
  }
  return out;
}

std::string underlying_id(const std::string& h, int k, int d, int r) {
  if (k == d) return r == 0 ? h : h + ".r" + std::to_string(r);
  return h + ".e" + std::to_string(r);
}

// (generator id, simplicial epi) of a cyclic cell.
std::pair<std::string, SimplexMorphism> split_cell(const SkeletalComplex<CyclicMorphism>& X, const Cell<CyclicMorphism>& c) {
  const int k = c.dim();
  const auto& g = X.generator(c.generator);
  std::vector<int> flat;
  for (int j = 0; j < k; ++j)
    if (c.epi.eval_lift(j) == c.epi.eval_lift(j + 1)) flat.push_back(j);
  const int kk = k - static_cast<int>(flat.size());
  const auto eps = SimplexMorphism::from_canonical(k, kk, {}, flat);
  const auto core = compose(c.epi, CyclicMorphism::from_delta(sections_of(eps).front()));
  const auto shapes = simplicially_nondegenerate(kk, g.dim);
  for (std::size_t r = 0; r < shapes.size(); ++r)
    if (shapes[r] == core) return {underlying_id(g.id, kk, g.dim, kk == g.dim ? core.rotation() : static_cast<int>(r)), eps};
  throw AlgorithmViolation("cyclic cell " + to_literal(X, c) + " has no simplicial decomposition");
}

}  // namespace

Cell<SimplexMorphism> underlying_cell(const SkeletalComplex<CyclicMorphism>& X, const SkeletalComplex<SimplexMorphism>& U,
                                      const Cell<CyclicMorphism>& c) {
  auto [id, eps] = split_cell(X, c);
  auto g = U.find(id);
  if (!g) throw ArgumentError("'" + id + "' is not a generator of the underlying complex");
  return U.make_cell(*g, eps);
}

SkeletalComplex<SimplexMorphism> underlying_simplicial(const SkeletalComplex<CyclicMorphism>& X) {
  SkeletalComplex<SimplexMorphism> U(X.skeletal_level() + 1, std::max(X.truncation(), X.skeletal_level() + 1));
  struct Pending {
    int dim;
    int gen;
    int rank;
    Cell<CyclicMorphism> cell;
  };
  std::vector<Pending> todo;
  for (int g = 0; g < static_cast<int>(X.generators().size()); ++g) {
    const int d = X.generator(g).dim;
    int rank = 0;
    for (int k : {d, d + 1})
      for (auto& e : simplicially_nondegenerate(k, d)) todo.push_back({k, g, rank++, X.make_cell(g, e)});
  }
  std::stable_sort(todo.begin(), todo.end(), [](const Pending& a, const Pending& b) { return a.dim < b.dim; });
  for (const auto& p : todo) {
    const auto& g = X.generator(p.gen);
    const int r = p.dim == g.dim ? p.cell.epi.rotation() : p.rank - (g.dim + 1);
    std::vector<Cell<SimplexMorphism>> faces;
    for (int i = 0; i <= p.dim && p.dim >= 1; ++i)
      faces.push_back(underlying_cell(X, U, detail::act_unchecked(X, p.cell, CyclicMorphism::from_delta(SimplexMorphism::face(p.dim, i)))));
    U.add_generator(underlying_id(g.id, p.dim, g.dim, r), p.dim, std::move(faces));
  }
  return U;
}

// ---- certification -------------------------------------------------------

std::pair<int, int> claimed_bounds(Shape shape, int n) {
  if (n < 0) throw ArgumentError("skeletal level must be non-negative");
  switch (shape) {
    case Shape::simplicial:
      if (n == 0) return {0, 1};
      if (n == 1) return {1, 2};
      return {2 * n - 2, 2 * n - 1};
    case Shape::cubical:
      if (n < 1) throw ArgumentError("cubical bounds need n >= 1");
      return {2 * n - 1, 2 * n};
    case Shape::globular:
      return {n, n + 1};
    case Shape::cyclic:
      if (n < 1) throw ArgumentError("cyclic bounds need n >= 1");
      return {2 * n - 2, 2 * n + 1};
  }
  throw ArgumentError("unknown shape");
}

nlohmann::ordered_json to_json(const BoundClaim& c) {
  nlohmann::ordered_json j;
  j["shape"] = to_string(c.shape);
  j["n"] = c.n;
  j["claimed_lower"] = c.claimed_lower;
  j["claimed_upper"] = c.claimed_upper;
  j["lower_fail"] = c.lower_fail ? nlohmann::ordered_json(*c.lower_fail) : nlohmann::ordered_json(nullptr);
  j["upper_hold"] = c.upper_hold ? nlohmann::ordered_json(*c.upper_hold) : nlohmann::ordered_json(nullptr);
  if (c.shape == Shape::cyclic)
    j["observed_level"] = c.observed_level ? nlohmann::ordered_json(*c.observed_level) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const Certificate& c) {
  nlohmann::ordered_json j;
  j["claim"] = to_json(c.claim);
  j["holds"] = c.holds;
  j["subjects"] = nlohmann::ordered_json::array();
  for (const auto& s : c.subjects) {
    nlohmann::ordered_json o;
    o["label"] = s.label;
    o["report"] = to_json(s.report);
    if (s.designated_status) {
      o["designated_sphere"] = s.designated_faces;
      o["designated_status"] = *s.designated_status;
    }
    if (s.underlying) {
      o["observed_level"] = s.observed_level ? nlohmann::ordered_json(*s.observed_level) : nlohmann::ordered_json(nullptr);
      o["underlying_agrees"] = s.underlying_agrees;
      o["underlying_report"] = to_json(*s.underlying);
    }
    j["subjects"].push_back(o);
  }
  return j;
}

}  // namespace levels
