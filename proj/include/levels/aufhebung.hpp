#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "json.hpp"
#include "levels/verify.hpp"

namespace levels {

template <class M>
struct Counterexample {
  SkeletalComplex<M> complex;
  Sphere<M> sphere;  // designated sphere without a filler
};

// Vertex v and n-cubes x, y whose faces are all the degenerate (n-1)-cube on v.
Counterexample<CubeMorphism> build_cubical_counterexample(int n);

// Vertex v, (n-1)-simplices x', y' and n-simplices x, y with x d0 = x',
// y dn = y', every other face degenerate on v. Requires n >= 3.
Counterexample<SimplexMorphism> build_simplicial_counterexample(int n);

// The same generators for any n >= 2; for n = 2 the designated 3-sphere is
// (x, x, y, y).
Counterexample<SimplexMorphism> build_simplicial_pattern(int n);

// Vertex v and two parallel n-globes on it.
Counterexample<GlobeMorphism> build_globular_counterexample(int n);

// The simplicial pattern closed freely under rotation, n >= 1. For n = 1 the
// designated 1-sphere is the vertex pair (x', y').
Counterexample<CyclicMorphism> build_cyclic_counterexample(int n);

// Low simplicial cases: for n = 0 two vertices, for n = 1 a hollow triangle;
// the designated sphere is the missing edge or 2-simplex.
Counterexample<SimplexMorphism> build_low_simplicial_counterexample(int n);

// The counterexample certifying the lower bound for the shape at n:
// the builders above, the n = 2 pattern or the low cases for simplicial sets.
template <class M>
Counterexample<M> designated_counterexample(int n) {
  constexpr Shape shape = ShapeTraits<M>::shape;
  if constexpr (shape == Shape::cubical) {
    return build_cubical_counterexample(n);
  } else if constexpr (shape == Shape::simplicial) {
    if (n <= 1) return build_low_simplicial_counterexample(n);
    return build_simplicial_pattern(n);
  } else if constexpr (shape == Shape::globular) {
    return build_globular_counterexample(n);
  } else {
    return build_cyclic_counterexample(n);
  }
}

// Restriction of a cyclic complex along the inclusion of the simplex
// category. A cyclic generator h of dimension d contributes its rotations
// (ids h, h.r1, ..., h.rd) and d+1 cells of dimension d+1 that are
// degenerate only through the extra degeneracy (ids h.e0, ..., h.ed).
SkeletalComplex<SimplexMorphism> underlying_simplicial(const SkeletalComplex<CyclicMorphism>& X);

// Image of a cyclic cell in the underlying simplicial complex.
Cell<SimplexMorphism> underlying_cell(const SkeletalComplex<CyclicMorphism>& X, const SkeletalComplex<SimplexMorphism>& U,
                                      const Cell<CyclicMorphism>& c);

struct RandomParams {
  int max_per_dim = 2;     // generators per dimension drawn from [lo, max]
  int attempts = 200;      // sphere samples per generator before giving up
  std::optional<int> truncation;
};

// Seeded n-skeletal complex: at least one vertex, then 0..max_per_dim
// generators in every dimension 1..n (at least one in dimension n), each
// attached along a randomly sampled sphere of existing cells.
template <class M>
SkeletalComplex<M> random_skeletal_complex(int n, const RandomParams& params, std::uint64_t seed) {
  if (n < 0) throw ArgumentError("skeletal level must be non-negative");
  if (params.max_per_dim < 1) throw ArgumentError("max_per_dim must be positive");
  std::mt19937_64 rng(seed);
  SkeletalComplex<M> X(n, params.truncation);
  const std::string letters = "vabcdefghij";
  for (int d = 0; d <= n; ++d) {
    const int lo = (d == 0 || d == n) ? 1 : 0;
    const int count = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(params.max_per_dim - lo + 1));
    if (count == 0) continue;
    std::optional<TabulatedPresheaf<M>> T;
    std::optional<SphereEnumerator<M>> E;
    if (d >= 1) {
      T.emplace(X, d - 1);
      E.emplace(*T, d);
    }
    for (int i = 0; i < count; ++i) {
      std::vector<Cell<M>> faces;
      if (d >= 1) {
        std::optional<std::vector<int>> ids;
        for (int a = 0; a < params.attempts && !ids; ++a) ids = E->sample(rng);
        if (!ids) throw GenerationError("no " + std::to_string(d) + "-sphere found for seed " + std::to_string(seed));
        for (int id : *ids) faces.push_back(T->cell(d - 1, id));
      }
      X.add_generator(std::string(1, letters[static_cast<std::size_t>(d) % letters.size()]) + std::to_string(i), d, std::move(faces));
    }
  }
  return X;
}

// ---- certification -------------------------------------------------------

struct BoundClaim {
  Shape shape = Shape::simplicial;
  int n = 0;
  std::optional<int> lower_fail;  // some complex is not k-coskeletal at this k
  std::optional<int> upper_hold;  // every complex is k-coskeletal up to truncation
  int claimed_lower = 0;
  int claimed_upper = 0;
  std::optional<int> observed_level;  // cyclic only: largest failing level seen, recorded not asserted
};

// Bounds stated by the theorems: (lower, upper) with the complex failing
// lower-coskeletality and satisfying upper-coskeletality.
std::pair<int, int> claimed_bounds(Shape shape, int n);

template <class M>
struct Subject {
  std::string label;
  SkeletalComplex<M> complex;
  std::optional<Sphere<M>> designated;
};

struct SubjectResult {
  std::string label;
  VerificationReport report;
  std::optional<std::string> designated_status;  // brute-force status of the designated sphere
  std::vector<std::string> designated_faces;
  std::optional<VerificationReport> underlying;  // cyclic: the same check on the underlying simplicial set
  bool underlying_agrees = true;
  std::optional<int> observed_level;
};

struct Certificate {
  BoundClaim claim;
  std::vector<SubjectResult> subjects;
  bool holds = false;  // lower_fail and upper_hold both established as claimed
};

nlohmann::ordered_json to_json(const BoundClaim& c);
nlohmann::ordered_json to_json(const Certificate& c);

template <class M>
Certificate certify(int n, const std::vector<Subject<M>>& subjects, const CoskeletalOptions& opts = {}) {
  constexpr Shape shape = ShapeTraits<M>::shape;
  Certificate cert;
  cert.claim.shape = shape;
  cert.claim.n = n;
  auto [lower, upper] = claimed_bounds(shape, n);
  cert.claim.claimed_lower = lower;
  cert.claim.claimed_upper = upper;
  bool upper_ok = true;
  bool lower_seen = false;
  for (const auto& s : subjects) {
    for (const auto& g : s.complex.generators())
      if (g.dim > n) throw ArgumentError("complex '" + s.label + "' has generator " + g.id + " above dimension " + std::to_string(n));
    auto v = validate(s.complex);
    if (!v.ok) throw ArgumentError("complex '" + s.label + "' does not validate: " + v.issues.front().generator + " " + v.issues.front().message);
  }
  for (const auto& s : subjects) {
    SubjectResult res;
    res.label = s.label;
    const int N = s.complex.truncation();
    res.report = coskeletal_up_to(s.complex, upper, N, opts);
    if (!res.report.coskeletal || !res.report.violations.empty()) upper_ok = false;
    if (s.designated) {
      auto fill = brute_force_fill(s.complex, *s.designated, opts.max_cells);
      res.designated_status = to_string(fill.status);
      for (const auto& c : s.designated->faces) res.designated_faces.push_back(to_literal(s.complex, c));
      if (fill.status == FillStatus::no_filler && s.designated->k == lower + 1) lower_seen = true;
    }
    if constexpr (shape == Shape::cyclic) {
      // full profile from the bottom, and the same profile on the underlying simplicial set
      auto full = coskeletal_up_to(s.complex, 0, N, opts);
      int observed = 0;
      for (const auto& L : full.levels)
        if (L.unfilled + L.multiply_filled > 0) observed = L.k;
      res.observed_level = observed;
      if (!cert.claim.observed_level || observed > *cert.claim.observed_level) cert.claim.observed_level = observed;
      auto U = underlying_simplicial(s.complex);
      auto under = coskeletal_up_to(U, 0, N, opts);
      for (std::size_t i = 0; i < full.levels.size() && i < under.levels.size(); ++i) {
        const auto& a = full.levels[i];
        const auto& b = under.levels[i];
        if ((a.unfilled + a.multiply_filled == 0) != (b.unfilled + b.multiply_filled == 0)) res.underlying_agrees = false;
      }
      res.underlying = std::move(under);
    }
    cert.subjects.push_back(std::move(res));
  }
  if (upper_ok) cert.claim.upper_hold = upper;
  if (lower_seen) cert.claim.lower_fail = lower;
  bool agree = true;
  for (const auto& s : cert.subjects) agree = agree && s.underlying_agrees;
  cert.holds = upper_ok && lower_seen && agree;
  return cert;
}

}  // namespace levels
