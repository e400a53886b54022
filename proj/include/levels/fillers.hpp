#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "levels/complex.hpp"
#include "levels/errors.hpp"
#include "levels/sphere_layout.hpp"

namespace levels {

// Boundary candidate of dimension k: (k-1)-cells in the shape's face order.
template <class M>
struct Sphere {
  int k = 0;
  std::vector<Cell<M>> faces;
  friend bool operator==(const Sphere&, const Sphere&) = default;
};

struct SphereCheck {
  bool ok = true;
  std::optional<std::string> violated;  // label of the first failing equation
  explicit operator bool() const { return ok; }
};

template <class M>
SphereCheck is_sphere(const SkeletalComplex<M>& X, const Sphere<M>& s) {
  constexpr Shape shape = ShapeTraits<M>::shape;
  if (s.k < 1) throw ArgumentError("a sphere has dimension at least 1");
  if (static_cast<int>(s.faces.size()) != sphere_arity(shape, s.k))
    throw ArgumentError("a " + std::to_string(s.k) + "-sphere needs " + std::to_string(sphere_arity(shape, s.k)) + " faces, got " +
                        std::to_string(s.faces.size()));
  for (const auto& c : s.faces)
    if (c.dim() != s.k - 1) throw ArgumentError("sphere face " + to_literal(X, c) + " does not have dimension " + std::to_string(s.k - 1));
  for (const auto& eq : cycle_equations(shape, s.k)) {
    if (face(X, s.faces[static_cast<std::size_t>(eq.later)], eq.later_face) !=
        face(X, s.faces[static_cast<std::size_t>(eq.earlier)], eq.earlier_face))
      return {false, eq.label};
  }
  return {};
}

template <class M>
Sphere<M> boundary(const SkeletalComplex<M>& X, const Cell<M>& c) {
  if (c.dim() < 1) throw ArgumentError("a vertex has no boundary sphere");
  return {c.dim(), faces(X, c)};
}

enum class FillStatus { filled, no_filler, not_applicable };

inline std::string to_string(FillStatus s) {
  switch (s) {
    case FillStatus::filled:
      return "filled";
    case FillStatus::no_filler:
      return "no_filler";
    case FillStatus::not_applicable:
      return "not_applicable";
  }
  return "";
}

template <class M>
struct FillResult {
  FillStatus status = FillStatus::not_applicable;
  std::optional<Cell<M>> filler;
  std::vector<Cell<M>> witnesses;  // oracle mode only
  std::vector<std::string> trace;
  std::string reason;                // why not applicable
  bool degenerate_collision = false;  // two distinct degenerate witnesses
};

// r: minimal face degeneracy; m: first position attaining it (with sign for
// cubes); reducing: the ordinals recorded by the EZ epi of c_m; l: one past
// the largest of them.
struct ReductionProfile {
  int r = 0;
  int m = 0;
  int m_sign = 0;
  std::vector<int> reducing;
  int l = -1;
};

// Index set used for a face u > m in the later parts of both proofs.
inline std::vector<int> auxiliary_set(const ReductionProfile& p, int u) {
  std::set<int> K{p.m};
  for (int j : p.reducing) {
    if (j + 1 < u) K.insert(j + 1);
    if (j + 1 > u) K.insert(j);
  }
  return {K.begin(), K.end()};
}

namespace detail {

inline std::string set_string(const std::vector<int>& v) {
  std::string out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out + "}";
}

inline bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

}  // namespace detail

// ---- cubical ----------------------------------------------------------------

inline ReductionProfile reduction_profile(const SkeletalComplex<CubeMorphism>& X, const Sphere<CubeMorphism>& s) {
  ReductionProfile p;
  p.r = -1;
  for (int u = 1; u <= s.k; ++u)
    for (int sign = 0; sign <= 1; ++sign) {
      const int d = dgn(X, s.faces[static_cast<std::size_t>(2 * (u - 1) + sign)]);
      if (p.r < 0 || d < p.r) {
        p.r = d;
        p.m = u;
        p.m_sign = sign;
      }
    }
  const auto& cm = s.faces[static_cast<std::size_t>(2 * (p.m - 1) + p.m_sign)];
  p.reducing = cm.epi.deletes();
  p.l = p.reducing.empty() ? -1 : p.reducing.back() + 1;
  return p;
}

// Fills a sphere of degenerate cubes with k < 2r+2 by c_m beta_m, replaying
// the argument face by face.
inline FillResult<CubeMorphism> constructive_filler_cubical(const SkeletalComplex<CubeMorphism>& X, const Sphere<CubeMorphism>& s) {
  using C = CubeMorphism;
  FillResult<C> res;
  if (!is_sphere(X, s)) throw ArgumentError("not a sphere");
  const int k = s.k;
  auto c = [&](int u, int sign) -> const Cell<C>& { return s.faces[static_cast<std::size_t>(2 * (u - 1) + sign)]; };
  for (const auto& f : s.faces)
    if (!is_degenerate(X, f)) {
      res.reason = "face " + to_literal(X, f) + " is non-degenerate";
      return res;
    }
  const auto p = reduction_profile(X, s);
  if (k >= 2 * p.r + 2) {
    res.reason = "k=" + std::to_string(k) + " is not below 2r+2 with r=" + std::to_string(p.r);
    return res;
  }
  const int m = p.m;
  const auto& M = p.reducing;
  res.trace.push_back("r=" + std::to_string(p.r) + " m=" + std::to_string(m) + " M=" + detail::set_string(M));
  if (static_cast<int>(M.size()) != p.r) throw AlgorithmViolation("|M| differs from r");
  for (int j : M)
    if (j < m || j > k - 1) throw AlgorithmViolation("reducing ordinal " + std::to_string(j) + " outside [m, k-1]");
  if (c(m, 0) != c(m, 1))
    throw AlgorithmViolation("c^0_m = c^1_m fails: " + to_literal(X, c(m, 0)) + " vs " + to_literal(X, c(m, 1)));
  const Cell<C> cm = c(m, 0);
  const Cell<C> F = act(X, cm, C::degeneracy(k, m));

  for (int u = 1; u <= k; ++u)
    for (int sign = 0; sign <= 1; ++sign) {
      const auto& cu = c(u, sign);
      std::string branch;
      if (u == m) {
        branch = "direct";
      } else if (detail::contains(M, u - 1)) {
        if (!reduces(X, cu, m)) throw AlgorithmViolation("Part I: m does not reduce c_" + std::to_string(u));
        branch = "Part I (j=" + std::to_string(u - 1) + ")";
      } else if (u < m) {
        std::vector<int> P{m - 1};
        P.insert(P.end(), M.begin(), M.end());
        std::optional<int> hit;
        for (int q : P)
          if (q >= 1 && q <= k - 1 && reduces(X, cu, q)) {
            hit = q;
            break;
          }
        if (!hit) throw AlgorithmViolation("Part II: no ordinal of {m-1} u M reduces c_" + std::to_string(u));
        branch = std::string("Part II (p=") + std::to_string(*hit) + (*hit == m - 1 ? ", p=m-1)" : ", p in M)");
      } else {
        const auto K = auxiliary_set(p, u);
        if (static_cast<int>(K.size()) != p.r + 1) throw AlgorithmViolation("Part III: |K| differs from r+1");
        std::optional<int> hit;
        for (int q : K)
          if (q >= 1 && q <= k - 1 && reduces(X, cu, q)) {
            hit = q;
            break;
          }
        if (!hit) throw AlgorithmViolation("Part III: no ordinal of K reduces c_" + std::to_string(u));
        branch = "Part III Case " + std::string(*hit < u ? "1" : "2") + " (p=" + std::to_string(*hit) + ", K=" + detail::set_string(K) + ")";
      }
      if (face(X, F, 2 * (u - 1) + sign) != cu) throw AlgorithmViolation(branch + " produced the wrong face at u=" + std::to_string(u));
      res.trace.push_back("u=" + std::to_string(u) + " sign=" + std::to_string(sign) + ": " + branch);
    }
  if (boundary(X, F) != s) throw AlgorithmViolation("boundary of the constructed filler differs from the sphere");
  res.status = FillStatus::filled;
  res.filler = F;
  return res;
}

// ---- simplicial -----------------------------------------------------------

inline ReductionProfile reduction_profile(const SkeletalComplex<SimplexMorphism>& X, const Sphere<SimplexMorphism>& s) {
  ReductionProfile p;
  p.r = -1;
  for (int u = 0; u <= s.k; ++u) {
    const int d = dgn(X, s.faces[static_cast<std::size_t>(u)]);
    if (p.r < 0 || d < p.r) {
      p.r = d;
      p.m = u;
    }
  }
  p.reducing = s.faces[static_cast<std::size_t>(p.m)].epi.epis();
  p.l = p.reducing.empty() ? -1 : p.reducing.back() + 1;
  return p;
}

// Fills a sphere whose faces all have degeneracy >= 2 with k < 2r+3 by
// c_m sigma_m, replaying the argument face by face.
inline FillResult<SimplexMorphism> constructive_filler_simplicial(const SkeletalComplex<SimplexMorphism>& X,
                                                                  const Sphere<SimplexMorphism>& s) {
  using S = SimplexMorphism;
  FillResult<S> res;
  if (!is_sphere(X, s)) throw ArgumentError("not a sphere");
  const int k = s.k;
  auto c = [&](int u) -> const Cell<S>& { return s.faces[static_cast<std::size_t>(u)]; };
  for (const auto& f : s.faces)
    if (dgn(X, f) < 2) {
      res.reason = "face " + to_literal(X, f) + " has degeneracy below 2";
      return res;
    }
  const auto p = reduction_profile(X, s);
  if (k >= 2 * p.r + 3) {
    res.reason = "k=" + std::to_string(k) + " is not below 2r+3 with r=" + std::to_string(p.r);
    return res;
  }
  const int m = p.m, r = p.r, l = p.l;
  const auto& M = p.reducing;
  res.trace.push_back("r=" + std::to_string(r) + " m=" + std::to_string(m) + " M=" + detail::set_string(M) + " l=" + std::to_string(l));
  if (static_cast<int>(M.size()) != r) throw AlgorithmViolation("|M| differs from r");
  for (int j : M)
    if (j < m || j > k - 2) throw AlgorithmViolation("properly reducing ordinal " + std::to_string(j) + " outside [m, k-2]");
  if (c(m) != c(m + 1)) throw AlgorithmViolation("c_m = c_{m+1} fails: " + to_literal(X, c(m)) + " vs " + to_literal(X, c(m + 1)));
  const Cell<S> F = act(X, c(m), S::degeneracy(k, m));
  auto expected = [&](int u) { return face(X, F, u); };

  // faces covered by the counting argument
  std::set<int> counted{m, l + 1};
  for (int j : M) counted.insert(j + 1);
  for (int u : counted) {
    if (dgn(X, c(u)) != r || c(u) != expected(u))
      throw AlgorithmViolation("least r+2 faces: c_" + std::to_string(u) + " is not c_m s_m d_u of degeneracy r");
  }

  for (int u = 0; u <= k; ++u) {
    std::string branch;
    if (counted.count(u)) {
      branch = u == m ? "direct" : "Lemma (least r+2 faces)";
    } else if (u == m + 1) {
      branch = "Lemma (c_m = c_{m+1})";
    } else if (u < m) {
      std::vector<int> P{m - 1};
      P.insert(P.end(), M.begin(), M.end());
      std::optional<int> hit;
      for (int q : P)
        if (q >= 0 && properly_reduces(X, c(u), q)) {
          hit = q;
          break;
        }
      if (!hit) throw AlgorithmViolation("Part I: no ordinal of {m-1} u M properly reduces c_" + std::to_string(u));
      const int q = *hit;
      branch = "Part I (p=" + std::to_string(q) + (q == m - 1 ? ", p=m-1)" : q == m ? ", p=m)" : ", p>m)");
    } else if (dgn(X, c(u)) > r) {
      const auto K = auxiliary_set(p, u);
      if (static_cast<int>(K.size()) != r + 1) throw AlgorithmViolation("Part II: |K| differs from r+1");
      std::optional<int> hit;
      for (int q : K)
        if (properly_reduces(X, c(u), q)) {
          hit = q;
          break;
        }
      if (!hit) throw AlgorithmViolation("Part II: no ordinal of K properly reduces c_" + std::to_string(u));
      const int q = *hit;
      const char* which = q == m ? "1" : u == q + 1 ? "2" : u > q + 1 ? "3" : "4";
      branch = "Part II Case " + std::string(which) + " (p=" + std::to_string(q) + ", K=" + detail::set_string(K) + ")";
    } else {
      const auto K = auxiliary_set(p, u);
      std::optional<int> hit;
      bool pathological = false;
      for (int q : K)
        if (reduces(X, c(u), q)) {
          hit = q;
          break;
        }
      if (!hit) {
        std::vector<int> tail;
        for (int q = k - 1 - r; q <= k - 2; ++q) tail.push_back(q);
        if (properly_reducing_indices(X, c(u)) == tail && m == 0 && properly_reduces(X, c(u), r + 1)) {
          hit = r + 1;
          pathological = true;
        }
      }
      if (!hit) throw AlgorithmViolation("Part III: no ordinal of K reduces c_" + std::to_string(u));
      branch = "Part III Case " + std::string(*hit < u ? "1" : "2") + " (p=" + std::to_string(*hit) + (pathological ? ", pathological" : "") +
               ", K=" + detail::set_string(K) + ")";
    }
    if (c(u) != expected(u)) throw AlgorithmViolation(branch + " produced the wrong face at u=" + std::to_string(u));
    res.trace.push_back("u=" + std::to_string(u) + ": " + branch);
  }
  if (boundary(X, F) != s) throw AlgorithmViolation("boundary of the constructed filler differs from the sphere");
  res.status = FillStatus::filled;
  res.filler = F;
  return res;
}

// ---- globular ---------------------------------------------------------------

// A parallel pair of degenerate globes is filled by its image under iota.
inline FillResult<GlobeMorphism> constructive_filler_globular(const SkeletalComplex<GlobeMorphism>& X, const Sphere<GlobeMorphism>& s) {
  FillResult<GlobeMorphism> res;
  if (!is_sphere(X, s)) throw ArgumentError("not a sphere");
  const auto& x = s.faces[0];
  const auto& y = s.faces[1];
  if (!is_degenerate(X, x) || !is_degenerate(X, y)) {
    res.reason = "a face is non-degenerate";
    return res;
  }
  if (x != y) throw AlgorithmViolation("parallel degenerate globes differ");
  const auto F = act(X, x, GlobeMorphism::reflexivity(s.k));
  if (boundary(X, F) != s) throw AlgorithmViolation("boundary of the constructed filler differs from the sphere");
  res.status = FillStatus::filled;
  res.filler = F;
  res.trace.push_back("image under iota");
  return res;
}

// ---- oracle -----------------------------------------------------------------

// Every k-cell whose boundary is the sphere, by exhaustive scan.
template <class M>
FillResult<M> brute_force_fill(const SkeletalComplex<M>& X, const Sphere<M>& s, std::size_t max_cells = 2'000'000) {
  if (s.k > X.truncation()) throw TruncationError("sphere dimension exceeds truncation");
  std::size_t count = 0;
  for (const auto& g : X.generators()) count += ShapeTraits<M>::epis(s.k, g.dim).size();
  if (count > max_cells) throw ResourceError("brute-force scan needs " + std::to_string(count) + " cells");
  FillResult<M> res;
  for (const auto& c : cells_of_dim(X, s.k))
    if (faces(X, c) == s.faces) res.witnesses.push_back(c);
  for (std::size_t i = 0; i < res.witnesses.size(); ++i)
    for (std::size_t j = i + 1; j < res.witnesses.size(); ++j)
      if (is_degenerate(X, res.witnesses[i]) && is_degenerate(X, res.witnesses[j])) res.degenerate_collision = true;
  res.status = res.witnesses.empty() ? FillStatus::no_filler : FillStatus::filled;
  if (res.witnesses.size() == 1) res.filler = res.witnesses.front();
  return res;
}

}  // namespace levels
