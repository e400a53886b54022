#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "levels/fillers.hpp"
#include "levels/tabulate.hpp"

namespace levels {

// Dispatches to the shape's constructive filler; cyclic spheres have none.
template <class M>
FillResult<M> constructive_fill(const SkeletalComplex<M>& X, const Sphere<M>& s) {
  if constexpr (std::is_same_v<M, CubeMorphism>) {
    return constructive_filler_cubical(X, s);
  } else if constexpr (std::is_same_v<M, SimplexMorphism>) {
    return constructive_filler_simplicial(X, s);
  } else if constexpr (std::is_same_v<M, GlobeMorphism>) {
    return constructive_filler_globular(X, s);
  } else {
    FillResult<M> res;
    res.reason = "no constructive filler for this shape";
    return res;
  }
}

// Enumerates the k-spheres of a tabulated presheaf as tuples of (k-1)-cell
// ids. Faces are chosen in order; each position is restricted through the
// first cycle equation that constrains it and filtered by the rest.
template <class M>
class SphereEnumerator {
 public:
  SphereEnumerator(const TabulatedPresheaf<M>& T, int k)
      : T_(T), k_(k), arity_(sphere_arity(ShapeTraits<M>::shape, k)), by_position_(static_cast<std::size_t>(arity_)) {
    if (k < 1 || k > T.top() + 1) throw ArgumentError("sphere dimension out of range");
    for (const auto& eq : cycle_equations(ShapeTraits<M>::shape, k)) by_position_[static_cast<std::size_t>(eq.later)].push_back(eq);
    if (k >= 2) {
      const int faces = T.face_count(k - 1);
      index_.assign(static_cast<std::size_t>(faces), std::vector<std::vector<int>>(T.size(k - 2)));
      for (int x = 0; x < static_cast<int>(T.size(k - 1)); ++x)
        for (int a = 0; a < faces; ++a) index_[static_cast<std::size_t>(a)][static_cast<std::size_t>(T.face(k - 1, x, a))].push_back(x);
    }
    for (int x = 0; x < static_cast<int>(T.size(k - 1)); ++x) all_.push_back(x);
  }

  int arity() const { return arity_; }

  // Visits every sphere in lexicographic order. Returns false (after visiting
  // a prefix) once more than `budget` partial assignments have been tried.
  bool enumerate(std::uint64_t budget, const std::function<void(const std::vector<int>&)>& visit, std::uint64_t* nodes = nullptr) const {
    std::vector<int> chosen(static_cast<std::size_t>(arity_));
    std::uint64_t count = 0;
    bool ok = true;
    auto rec = [&](auto&& self, int q) -> void {
      if (!ok) return;
      if (q == arity_) {
        visit(chosen);
        return;
      }
      for (int x : base(q, chosen)) {
        if (++count > budget) {
          ok = false;
          return;
        }
        if (!fits(q, x, chosen)) continue;
        chosen[static_cast<std::size_t>(q)] = x;
        self(self, q + 1);
        if (!ok) return;
      }
    };
    rec(rec, 0);
    if (nodes) *nodes = count;
    return ok;
  }

  // One uniformly guided random walk through the choices; nullopt when it
  // reaches a position with no admissible cell.
  std::optional<std::vector<int>> sample(std::mt19937_64& rng) const {
    std::vector<int> chosen(static_cast<std::size_t>(arity_));
    for (int q = 0; q < arity_; ++q) {
      std::vector<int> options;
      for (int x : base(q, chosen))
        if (fits(q, x, chosen)) options.push_back(x);
      if (options.empty()) return std::nullopt;
      chosen[static_cast<std::size_t>(q)] = options[static_cast<std::size_t>(rng() % options.size())];
    }
    return chosen;
  }

 private:
  const std::vector<int>& base(int q, const std::vector<int>& chosen) const {
    const auto& eqs = by_position_[static_cast<std::size_t>(q)];
    if (eqs.empty()) return all_;
    const auto& e = eqs.front();
    const int v = T_.face(k_ - 1, chosen[static_cast<std::size_t>(e.earlier)], e.earlier_face);
    return index_[static_cast<std::size_t>(e.later_face)][static_cast<std::size_t>(v)];
  }

  bool fits(int q, int x, const std::vector<int>& chosen) const {
    for (const auto& e : by_position_[static_cast<std::size_t>(q)])
      if (T_.face(k_ - 1, x, e.later_face) != T_.face(k_ - 1, chosen[static_cast<std::size_t>(e.earlier)], e.earlier_face)) return false;
    return true;
  }

  const TabulatedPresheaf<M>& T_;
  int k_;
  int arity_;
  std::vector<std::vector<CycleEquation>> by_position_;
  std::vector<std::vector<std::vector<int>>> index_;  // [face][value] -> cells
  std::vector<int> all_;
};

struct CoskeletalOptions {
  std::uint64_t sphere_budget = 1'000'000;  // partial assignments per dimension
  std::uint64_t samples = 20'000;
  std::uint64_t seed = 0;
  std::size_t max_cells = 2'000'000;
  bool cross_check = true;  // run the constructive filler on every sphere
  std::size_t max_witnesses = 8;
};

struct LevelReport {
  int k = 0;
  std::string mode;  // exhaustive | sampled
  std::uint64_t nodes = 0;
  std::uint64_t spheres = 0;
  std::uint64_t uniquely_filled = 0;
  std::uint64_t unfilled = 0;
  std::uint64_t multiply_filled = 0;
  std::uint64_t degenerate_collisions = 0;
  std::uint64_t constructive_filled = 0;
  std::uint64_t constructive_agreed = 0;
  std::uint64_t constructive_not_applicable = 0;
};

struct WitnessReport {
  int k = 0;
  std::string kind;  // no_filler | multiple_fillers
  std::vector<std::string> faces;
  std::vector<std::string> fillers;
};

struct VerificationReport {
  std::string shape;
  int skeletal_level = 0;
  int k_min = 0;
  int N = 0;
  bool coskeletal = true;
  bool partial = false;
  std::vector<LevelReport> levels;
  std::vector<WitnessReport> witnesses;
  std::vector<std::string> violations;  // constructive filler disagreements or assertion failures
};

inline nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["shape"] = r.shape;
  j["skeletal_level"] = r.skeletal_level;
  j["k_min"] = r.k_min;
  j["N"] = r.N;
  j["coskeletal"] = r.coskeletal;
  j["partial"] = r.partial;
  j["levels"] = nlohmann::ordered_json::array();
  for (const auto& L : r.levels) {
    nlohmann::ordered_json l;
    l["k"] = L.k;
    l["mode"] = L.mode;
    l["nodes"] = L.nodes;
    l["spheres"] = L.spheres;
    l["uniquely_filled"] = L.uniquely_filled;
    l["unfilled"] = L.unfilled;
    l["multiply_filled"] = L.multiply_filled;
    l["degenerate_collisions"] = L.degenerate_collisions;
    l["constructive_filled"] = L.constructive_filled;
    l["constructive_agreed"] = L.constructive_agreed;
    l["constructive_not_applicable"] = L.constructive_not_applicable;
    j["levels"].push_back(l);
  }
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : r.witnesses) j["witnesses"].push_back({{"k", w.k}, {"kind", w.kind}, {"faces", w.faces}, {"fillers", w.fillers}});
  j["violations"] = r.violations;
  return j;
}

// Checks existence and uniqueness of fillers for every k-sphere with
// k_min < k <= N.
template <class M>
VerificationReport coskeletal_up_to(const SkeletalComplex<M>& X, int k_min, int N, const CoskeletalOptions& opts = {}) {
  if (N > X.truncation()) throw TruncationError("N=" + std::to_string(N) + " exceeds truncation " + std::to_string(X.truncation()));
  if (k_min < 0) throw ArgumentError("k_min must be non-negative");
  VerificationReport report;
  report.shape = to_string(ShapeTraits<M>::shape);
  report.skeletal_level = X.skeletal_level();
  report.k_min = k_min;
  report.N = N;
  if (N <= k_min) return report;
  TabulatedPresheaf<M> T(X, N, {opts.max_cells});

  for (int k = std::max(k_min + 1, 1); k <= N; ++k) {
    LevelReport L;
    L.k = k;
    // boundary -> fillers
    std::map<std::vector<int>, std::vector<int>> fillers;
    for (int x = 0; x < static_cast<int>(T.size(k)); ++x) {
      std::vector<int> key;
      for (int a = 0; a < T.face_count(k); ++a) key.push_back(T.face(k, x, a));
      fillers[key].push_back(x);
    }
    std::size_t witnesses_here = 0;
    auto check = [&](const std::vector<int>& ids) {
      ++L.spheres;
      auto it = fillers.find(ids);
      const std::size_t count = it == fillers.end() ? 0 : it->second.size();
      if (count == 1) {
        ++L.uniquely_filled;
      } else {
        report.coskeletal = false;
        if (count == 0)
          ++L.unfilled;
        else
          ++L.multiply_filled;
        if (count >= 2) {
          int degenerate = 0;
          for (int x : it->second) degenerate += T.degenerate(k, x) ? 1 : 0;
          if (degenerate >= 2) ++L.degenerate_collisions;
        }
        if (witnesses_here < opts.max_witnesses) {
          ++witnesses_here;
          WitnessReport w;
          w.k = k;
          w.kind = count == 0 ? "no_filler" : "multiple_fillers";
          for (int id : ids) w.faces.push_back(to_literal(X, T.cell(k - 1, id)));
          if (count) for (int x : it->second) w.fillers.push_back(to_literal(X, T.cell(k, x)));
          report.witnesses.push_back(std::move(w));
        }
      }
      if (!opts.cross_check) return;
      Sphere<M> s{k, {}};
      for (int id : ids) s.faces.push_back(T.cell(k - 1, id));
      std::string where = "k=" + std::to_string(k) + " sphere " + std::to_string(L.spheres);
      try {
        auto res = constructive_fill(X, s);
        if (res.status == FillStatus::filled) {
          ++L.constructive_filled;
          if (count == 1 && T.find(k, *res.filler) == it->second.front())
            ++L.constructive_agreed;
          else
            report.violations.push_back(where + ": constructive filler " + to_literal(X, *res.filler) + " is not the unique witness");
        } else {
          ++L.constructive_not_applicable;
        }
      } catch (const AlgorithmViolation& e) {
        report.violations.push_back(where + ": " + e.what());
      }
    };

    SphereEnumerator<M> E(T, k);
    std::vector<std::vector<int>> found;
    const bool complete = E.enumerate(opts.sphere_budget, [&](const std::vector<int>& ids) { found.push_back(ids); }, &L.nodes);
    if (complete) {
      L.mode = "exhaustive";
      for (const auto& ids : found) check(ids);
    } else {
      L.mode = "sampled";
      report.partial = true;
      std::set<std::vector<int>> picked;
      std::mt19937_64 rng(opts.seed + static_cast<std::uint64_t>(k));
      for (std::uint64_t t = 0; t < opts.samples; ++t)
        if (auto ids = E.sample(rng)) picked.insert(*ids);
      for (const auto& [key, cells] : fillers) picked.insert(key);
      for (const auto& ids : picked) check(ids);
    }
    report.levels.push_back(L);
  }
  return report;
}

}  // namespace levels
