#include "levels/simplex.hpp"

#include <algorithm>
#include <string>

#include "levels/combinatorics.hpp"
#include "levels/errors.hpp"

namespace levels {

namespace {

std::string dims(int dom, int cod) { return "[" + std::to_string(dom) + "]->[" + std::to_string(cod) + "]"; }

// One rewrite step on the adjacent pair (outer, inner). Returns false when the
// pair is already in canonical order.
bool rewrite_pair(SimplexGen outer, SimplexGen inner, std::vector<SimplexGen>& out) {
  using K = SimplexGen::Kind;
  const int a = outer.index;
  const int b = inner.index;
  if (outer.kind == K::degeneracy && inner.kind == K::face) {
    // sigma_j delta_i
    if (b < a) {
      out = {delta(b), sigma(a - 1)};
    } else if (b == a || b == a + 1) {
      out = {};
    } else {
      out = {delta(b - 1), sigma(a)};
    }
    return true;
  }
  if (outer.kind == K::face && inner.kind == K::face && a <= b) {
    // delta_i delta_{j-1} = delta_j delta_i for i < j
    out = {delta(b + 1), delta(a)};
    return true;
  }
  if (outer.kind == K::degeneracy && inner.kind == K::degeneracy && a >= b) {
    // sigma_j sigma_i = sigma_i sigma_{j+1} for i <= j
    out = {sigma(b), sigma(a + 1)};
    return true;
  }
  return false;
}

}  // namespace

SimplexMorphism SimplexMorphism::identity(int n) {
  if (n < 0) throw ArgumentError("negative dimension");
  SimplexMorphism f;
  f.dom_ = n;
  f.cod_ = n;
  return f;
}

SimplexMorphism SimplexMorphism::face(int cod, int i) {
  if (cod < 1 || i < 0 || i > cod) throw ArgumentError("delta_" + std::to_string(i) + " has no codomain [" + std::to_string(cod) + "]");
  return from_canonical(cod - 1, cod, {i}, {});
}

SimplexMorphism SimplexMorphism::degeneracy(int dom, int j) {
  if (dom < 1 || j < 0 || j > dom - 1) throw ArgumentError("sigma_" + std::to_string(j) + " has no domain [" + std::to_string(dom) + "]");
  return from_canonical(dom, dom - 1, {}, {j});
}

SimplexMorphism SimplexMorphism::from_canonical(int dom, int cod, std::vector<int> monos, std::vector<int> epis) {
  if (dom < 0 || cod < 0) throw ArgumentError("negative dimension");
  if (dom - static_cast<int>(epis.size()) + static_cast<int>(monos.size()) != cod)
    throw ArgumentError("dimension bookkeeping fails for " + dims(dom, cod));
  for (std::size_t k = 0; k < monos.size(); ++k) {
    if (monos[k] < 0 || monos[k] > cod) throw ArgumentError("face index out of range");
    if (k > 0 && monos[k] >= monos[k - 1]) throw ArgumentError("face indices must be strictly descending");
  }
  for (std::size_t k = 0; k < epis.size(); ++k) {
    if (epis[k] < 0 || epis[k] > dom - 1) throw ArgumentError("degeneracy index out of range");
    if (k > 0 && epis[k] <= epis[k - 1]) throw ArgumentError("degeneracy indices must be strictly ascending");
  }
  SimplexMorphism f;
  f.dom_ = dom;
  f.cod_ = cod;
  f.monos_ = std::move(monos);
  f.epis_ = std::move(epis);
  return f;
}

SimplexMorphism SimplexMorphism::from_values(int dom, int cod, std::span<const int> values) {
  if (static_cast<int>(values.size()) != dom + 1) throw ArgumentError("value table has the wrong length");
  std::vector<int> epis;
  std::vector<bool> hit(static_cast<std::size_t>(cod + 1), false);
  for (int j = 0; j <= dom; ++j) {
    const int v = values[static_cast<std::size_t>(j)];
    if (v < 0 || v > cod) throw ArgumentError("value out of range");
    if (j > 0 && v < values[static_cast<std::size_t>(j - 1)]) throw ArgumentError("values are not monotone");
    if (j < dom && v == values[static_cast<std::size_t>(j + 1)]) epis.push_back(j);
    hit[static_cast<std::size_t>(v)] = true;
  }
  std::vector<int> monos;
  for (int i = cod; i >= 0; --i)
    if (!hit[static_cast<std::size_t>(i)]) monos.push_back(i);
  return from_canonical(dom, cod, std::move(monos), std::move(epis));
}

int SimplexMorphism::eval(int point) const {
  if (point < 0 || point > dom_) throw DomainError("point " + std::to_string(point) + " is not in [" + std::to_string(dom_) + "]");
  // epi part: sigma_{j_t} first, each removing one point below
  int y = point;
  for (int j : epis_)
    if (j < point) --y;
  // mono part: delta_{i_s} first (smallest index), so insertions never shift later ones
  for (auto it = monos_.rbegin(); it != monos_.rend(); ++it)
    if (y >= *it) ++y;
  return y;
}

std::vector<int> SimplexMorphism::values() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(dom_ + 1));
  for (int j = 0; j <= dom_; ++j) out.push_back(eval(j));
  return out;
}

SimplexWord SimplexMorphism::word() const {
  SimplexWord w;
  w.reserve(monos_.size() + epis_.size());
  for (int i : monos_) w.push_back(delta(i));
  for (int j : epis_) w.push_back(sigma(j));
  return w;
}

int word_codomain(std::span<const SimplexGen> word, int dom) {
  if (dom < 0) throw WordError("negative domain");
  int d = dom;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (it->kind == SimplexGen::Kind::face) {
      if (it->index < 0 || it->index > d + 1)
        throw WordError(to_string(*it) + " cannot be applied to [" + std::to_string(d) + "]");
      ++d;
    } else {
      if (d < 1 || it->index < 0 || it->index > d - 1)
        throw WordError(to_string(*it) + " cannot be applied to [" + std::to_string(d) + "]");
      --d;
    }
  }
  return d;
}

int infer_domain(std::span<const SimplexGen> word) {
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

SimplexMorphism normalize(std::span<const SimplexGen> word, int dom) {
  const int cod = word_codomain(word, dom);
  std::vector<SimplexGen> w(word.begin(), word.end());
  std::vector<SimplexGen> replacement;
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
  std::vector<int> monos;
  std::vector<int> epis;
  for (const auto& g : w) (g.kind == SimplexGen::Kind::face ? monos : epis).push_back(g.index);
  return SimplexMorphism::from_canonical(dom, cod, std::move(monos), std::move(epis));
}

SimplexMorphism compose(const SimplexMorphism& f, const SimplexMorphism& g) {
  if (g.cod() != f.dom())
    throw CompositionError("cannot compose " + dims(f.dom(), f.cod()) + " after " + dims(g.dom(), g.cod()));
  SimplexWord w = f.word();
  SimplexWord tail = g.word();
  w.insert(w.end(), tail.begin(), tail.end());
  return normalize(w, g.dom());
}

std::pair<SimplexMorphism, SimplexMorphism> epi_mono_factor(const SimplexMorphism& f) {
  const int mid = f.dom() - static_cast<int>(f.epis().size());
  return {SimplexMorphism::from_canonical(mid, f.cod(), f.monos(), {}),
          SimplexMorphism::from_canonical(f.dom(), mid, {}, f.epis())};
}

std::vector<SimplexMorphism> simplex_epis(int n, int m) {
  std::vector<SimplexMorphism> out;
  if (m < 0 || m > n) return out;
  detail::for_each_subset(0, n - 1, n - m, [&](const std::vector<int>& js) {
    out.push_back(SimplexMorphism::from_canonical(n, m, {}, js));
  });
  return out;
}

std::vector<SimplexMorphism> simplex_monos(int m, int n) {
  std::vector<SimplexMorphism> out;
  if (m < 0 || m > n) return out;
  detail::for_each_subset(0, n, n - m, [&](const std::vector<int>& is) {
    out.push_back(SimplexMorphism::from_canonical(m, n, std::vector<int>(is.rbegin(), is.rend()), {}));
  });
  return out;
}

std::vector<SimplexMorphism> sections_of(const SimplexMorphism& epi) {
  if (!epi.is_epi()) throw ArgumentError(to_string(epi) + " is not an epimorphism");
  std::vector<SimplexMorphism> out;
  for (auto& mu : simplex_monos(epi.cod(), epi.dom()))
    if (compose(epi, mu).is_identity()) out.push_back(std::move(mu));
  return out;
}

std::string to_string(const SimplexGen& gen) {
  return (gen.kind == SimplexGen::Kind::face ? "d" : "s") + std::to_string(gen.index);
}

std::string to_string(const SimplexWord& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::string to_string(const SimplexMorphism& f) { return f.is_identity() ? "id" : to_string(f.word()); }

}  // namespace levels
