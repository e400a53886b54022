#include "levels/cube.hpp"

#include <algorithm>

#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"

namespace levels {

namespace {

std::string dims(int dom, int cod) { return "I^" + std::to_string(dom) + "->I^" + std::to_string(cod); }

bool rewrite_pair(CubeGen outer, CubeGen inner, std::vector<CubeGen>& out) {
  using K = CubeGen::Kind;
  const int a = outer.index;
  const int b = inner.index;
  if (outer.kind == K::degeneracy && inner.kind == K::face) {
    // beta_j alpha^s_i
    if (b < a) {
      out = {alpha(inner.sign, b), beta(a - 1)};
    } else if (b == a) {
      out = {};
    } else {
      out = {alpha(inner.sign, b - 1), beta(a)};
    }
    return true;
  }
  if (outer.kind == K::face && inner.kind == K::face && a <= b) {
    // alpha^u_i alpha^s_{j-1} = alpha^s_j alpha^u_i for i < j
    out = {alpha(inner.sign, b + 1), alpha(outer.sign, a)};
    return true;
  }
  if (outer.kind == K::degeneracy && inner.kind == K::degeneracy && a >= b) {
    out = {beta(b), beta(a + 1)};
    return true;
  }
  return false;
}

}  // namespace

CubeMorphism CubeMorphism::identity(int n) {
  if (n < 0) throw ArgumentError("negative dimension");
  CubeMorphism f;
  f.dom_ = n;
  f.cod_ = n;
  return f;
}

CubeMorphism CubeMorphism::face(int cod, int i, int sign) {
  if (cod < 1 || i < 1 || i > cod || (sign != 0 && sign != 1))
    throw ArgumentError("alpha^" + std::to_string(sign) + "_" + std::to_string(i) + " has no codomain I^" + std::to_string(cod));
  return from_canonical(cod - 1, cod, {{i, sign}}, {});
}

CubeMorphism CubeMorphism::degeneracy(int dom, int i) {
  if (dom < 1 || i < 1 || i > dom) throw ArgumentError("beta_" + std::to_string(i) + " has no domain I^" + std::to_string(dom));
  return from_canonical(dom, dom - 1, {}, {i});
}

CubeMorphism CubeMorphism::from_canonical(int dom, int cod, std::vector<CubeInsert> inserts, std::vector<int> deletes) {
  if (dom < 0 || cod < 0) throw ArgumentError("negative dimension");
  if (dom - static_cast<int>(deletes.size()) + static_cast<int>(inserts.size()) != cod)
    throw ArgumentError("dimension bookkeeping fails for " + dims(dom, cod));
  for (std::size_t k = 0; k < inserts.size(); ++k) {
    const auto& ins = inserts[k];
    if (ins.position < 1 || ins.position > cod || (ins.sign != 0 && ins.sign != 1))
      throw ArgumentError("face index out of range");
    if (k > 0 && ins.position >= inserts[k - 1].position) throw ArgumentError("face positions must be strictly descending");
  }
  for (std::size_t k = 0; k < deletes.size(); ++k) {
    if (deletes[k] < 1 || deletes[k] > dom) throw ArgumentError("degeneracy index out of range");
    if (k > 0 && deletes[k] <= deletes[k - 1]) throw ArgumentError("degeneracy indices must be strictly ascending");
  }
  CubeMorphism f;
  f.dom_ = dom;
  f.cod_ = cod;
  f.inserts_ = std::move(inserts);
  f.deletes_ = std::move(deletes);
  return f;
}

CubePoint CubeMorphism::eval(std::span<const std::uint8_t> point) const {
  if (static_cast<int>(point.size()) != dom_) throw DomainError("point has length " + std::to_string(point.size()) + ", expected " + std::to_string(dom_));
  CubePoint mid;
  mid.reserve(point.size());
  for (int c = 1; c <= dom_; ++c) {
    const auto v = point[static_cast<std::size_t>(c - 1)];
    if (v > 1) throw DomainError("coordinates must be 0 or 1");
    if (!std::binary_search(deletes_.begin(), deletes_.end(), c)) mid.push_back(v);
  }
  // smallest insertion position first; later (larger) insertions do not shift it
  for (auto it = inserts_.rbegin(); it != inserts_.rend(); ++it)
    mid.insert(mid.begin() + (it->position - 1), static_cast<std::uint8_t>(it->sign));
  return mid;
}

CubeWord CubeMorphism::word() const {
  CubeWord w;
  for (const auto& ins : inserts_) w.push_back(alpha(ins.sign, ins.position));
  for (int j : deletes_) w.push_back(beta(j));
  return w;
}

int word_codomain(std::span<const CubeGen> word, int dom) {
  if (dom < 0) throw WordError("negative domain");
  int d = dom;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == CubeGen::Kind::face) {
      if (it->index < 1 || it->index > d + 1 || (it->sign != 0 && it->sign != 1))
        throw WordError(to_string(*it) + " cannot be applied to I^" + std::to_string(d));
      ++d;
    } else {
      if (it->index < 1 || it->index > d) throw WordError(to_string(*it) + " cannot be applied to I^" + std::to_string(d));
      --d;
    }
  }
  return d;
}

int infer_domain(std::span<const CubeGen> word) {
  int bound = static_cast<int>(word.size());
  for (const auto& g : word) bound += std::max(g.index, 0);
  for (int dom = 0; dom <= bound + 1; ++dom) {
    try {
      word_codomain(word, dom);
      return dom;
    } catch (const WordError&) {
    }
  }
  throw WordError("word has no consistent domain");
}

CubeMorphism normalize(std::span<const CubeGen> word, int dom) {
  const int cod = word_codomain(word, dom);
  std::vector<CubeGen> w(word.begin(), word.end());
  std::vector<CubeGen> replacement;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p + 1 < w.size(); ++p) {
      if (rewrite_pair(w[p], w[p + 1], replacement)) {
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(p), w.begin() + static_cast<std::ptrdiff_t>(p + 2));
        w.insert(w.begin() + static_cast<std::ptrdiff_t>(p), replacement.begin(), replacement.end());
        changed = true;
        break;
      }
    }
  }
  std::vector<CubeInsert> inserts;
  std::vector<int> deletes;
  for (const auto& g : w) {
    if (g.kind == CubeGen::Kind::face)
      inserts.push_back({g.index, g.sign});
    else
      deletes.push_back(g.index);
  }
  return CubeMorphism::from_canonical(dom, cod, std::move(inserts), std::move(deletes));
}

CubeMorphism compose(const CubeMorphism& f, const CubeMorphism& g) {
  if (g.cod() != f.dom()) throw CompositionError("cannot compose " + dims(f.dom(), f.cod()) + " after " + dims(g.dom(), g.cod()));
  CubeWord w = f.word();
  CubeWord tail = g.word();
  w.insert(w.end(), tail.begin(), tail.end());
  return normalize(w, g.dom());
}

std::pair<CubeMorphism, CubeMorphism> epi_mono_factor(const CubeMorphism& f) {
  const int mid = f.dom() - static_cast<int>(f.deletes().size());
  return {CubeMorphism::from_canonical(mid, f.cod(), f.inserts(), {}), CubeMorphism::from_canonical(f.dom(), mid, {}, f.deletes())};
}

std::vector<CubeMorphism> cube_epis(int n, int m) {
  std::vector<CubeMorphism> out;
  if (m < 0 || m > n) return out;
  detail::for_each_subset(1, n, n - m, [&](const std::vector<int>& js) { out.push_back(CubeMorphism::from_canonical(n, m, {}, js)); });
  return out;
}

std::vector<CubeMorphism> cube_monos(int m, int n) {
  std::vector<CubeMorphism> out;
  if (m < 0 || m > n) return out;
  const int s = n - m;
  detail::for_each_subset(1, n, s, [&](const std::vector<int>& positions) {
    for (unsigned signs = 0; signs < (1u << s); ++signs) {
      std::vector<CubeInsert> inserts;
      for (int k = s - 1; k >= 0; --k)
        inserts.push_back({positions[static_cast<std::size_t>(k)], static_cast<int>((signs >> k) & 1u)});
      out.push_back(CubeMorphism::from_canonical(m, n, std::move(inserts), {}));
    }
  });
  return out;
}

std::vector<CubeMorphism> sections_of(const CubeMorphism& epi) {
  if (!epi.is_epi()) throw ArgumentError(to_string(epi) + " is not an epimorphism");
  std::vector<CubeMorphism> out;
  for (auto& mu : cube_monos(epi.cod(), epi.dom()))
    if (compose(epi, mu).is_identity()) out.push_back(std::move(mu));
  return out;
}

std::string to_string(const CubeGen& gen) {
  if (gen.kind == CubeGen::Kind::face) return "a" + std::to_string(gen.sign) + "@" + std::to_string(gen.index);
  return "b" + std::to_string(gen.index);
}

std::string to_string(const CubeWord& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::string to_string(const CubeMorphism& f) { return f.is_identity() ? "id" : to_string(f.word()); }

}  // namespace levels
