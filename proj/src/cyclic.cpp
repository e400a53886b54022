#include "levels/cyclic.hpp"

#include "levels/errors.hpp"

namespace levels {

namespace {

int mod(int a, int b) { return ((a % b) + b) % b; }

CyclicMorphism generator_morphism(const CyclicGen& g, int d) {
  switch (g.kind) {
    case CyclicGen::Kind::face:
      return CyclicMorphism::from_delta(SimplexMorphism::face(d + 1, g.index));
    case CyclicGen::Kind::degeneracy:
      return CyclicMorphism::from_delta(SimplexMorphism::degeneracy(d, g.index));
    case CyclicGen::Kind::rotation:
      return CyclicMorphism::rotation(d, 1);
    case CyclicGen::Kind::extra_degeneracy:
      return CyclicMorphism::extra_degeneracy(d);
  }
  throw WordError("unknown generator");
}

}  // namespace

CyclicMorphism CyclicMorphism::identity(int n) { return from_delta(SimplexMorphism::identity(n)); }

CyclicMorphism CyclicMorphism::rotation(int n, int power) { return from_parts(mod(power, n + 1), SimplexMorphism::identity(n)); }

CyclicMorphism CyclicMorphism::from_delta(SimplexMorphism delta) { return from_parts(0, std::move(delta)); }

CyclicMorphism CyclicMorphism::from_parts(int rotation, SimplexMorphism delta) {
  if (rotation < 0 || rotation > delta.dom()) throw ArgumentError("rotation out of range");
  CyclicMorphism f;
  f.rotation_ = rotation;
  f.delta_ = std::move(delta);
  return f;
}

CyclicMorphism CyclicMorphism::extra_degeneracy(int n) {
  if (n < 1) throw ArgumentError("the extra degeneracy needs a domain of dimension at least 1");
  return from_parts(1, SimplexMorphism::degeneracy(n, 0));
}

int CyclicMorphism::eval_lift(int point) const {
  if (point < 0 || point > dom()) throw DomainError("point " + std::to_string(point) + " is not in [" + std::to_string(dom()) + "]");
  const int shifted = point + rotation_;
  if (shifted <= dom()) return delta_.eval(shifted);
  return delta_.eval(shifted - dom() - 1) + cod() + 1;
}

int CyclicMorphism::eval(int point) const { return mod(eval_lift(point), cod() + 1); }

CyclicWord CyclicMorphism::word() const {
  CyclicWord w;
  for (const auto& g : delta_.word())
    w.push_back({g.kind == SimplexGen::Kind::face ? CyclicGen::Kind::face : CyclicGen::Kind::degeneracy, g.index});
  for (int k = 0; k < rotation_; ++k) w.push_back({CyclicGen::Kind::rotation, 0});
  return w;
}

std::pair<SimplexMorphism, int> commute_rotation(int r, const SimplexMorphism& h) {
  const int k = h.dom();
  const int n = h.cod();
  r = mod(r, n + 1);
  if (r == 0) return {h, 0};
  // the s points with h(x) + r > n wrap into the next period and move to the front
  const auto vals = h.values();
  int s = 0;
  for (int v : vals)
    if (v + r > n) ++s;
  std::vector<int> out(static_cast<std::size_t>(k + 1));
  for (int y = 0; y <= k; ++y) {
    const int x = y - s;
    out[static_cast<std::size_t>(y)] = x < 0 ? vals[static_cast<std::size_t>(x + k + 1)] + r - n - 1 : vals[static_cast<std::size_t>(x)] + r;
  }
  return {SimplexMorphism::from_values(k, n, out), s};
}

CyclicMorphism compose(const CyclicMorphism& f, const CyclicMorphism& g) {
  if (g.cod() != f.dom())
    throw CompositionError("cannot compose [" + std::to_string(f.dom()) + "]->[" + std::to_string(f.cod()) + "] after [" +
                           std::to_string(g.dom()) + "]->[" + std::to_string(g.cod()) + "]");
  // f o g = e tau^r h tau^s = e h' tau^(r' + s)
  auto [moved, extra] = commute_rotation(f.rotation(), g.delta_part());
  return CyclicMorphism::from_parts(mod(extra + g.rotation(), g.dom() + 1), compose(f.delta_part(), moved));
}

std::pair<CyclicMorphism, CyclicMorphism> epi_mono_factor(const CyclicMorphism& f) {
  auto [mono, epi] = epi_mono_factor(f.delta_part());
  return {CyclicMorphism::from_delta(std::move(mono)), CyclicMorphism::from_parts(f.rotation(), std::move(epi))};
}

SimplexMorphism underlying_simplex_morphism(const CyclicMorphism& f) { return f.delta_part(); }

int word_codomain(std::span<const CyclicGen> word, int dom) {
  if (dom < 0) throw WordError("negative domain");
  int d = dom;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (it->kind) {
      case CyclicGen::Kind::face:
        if (it->index < 0 || it->index > d + 1) throw WordError(to_string(*it) + " cannot be applied to [" + std::to_string(d) + "]");
        ++d;
        break;
      case CyclicGen::Kind::degeneracy:
        if (d < 1 || it->index < 0 || it->index > d - 1)
          throw WordError(to_string(*it) + " cannot be applied to [" + std::to_string(d) + "]");
        --d;
        break;
      case CyclicGen::Kind::rotation:
        break;
      case CyclicGen::Kind::extra_degeneracy:
        if (d < 1 || it->index != d) throw WordError(to_string(*it) + " cannot be applied to [" + std::to_string(d) + "]");
        --d;
        break;
    }
  }
  return d;
}

int infer_domain(std::span<const CyclicGen> word) {
  int bound = static_cast<int>(word.size());
  for (const auto& g : word) bound += g.index;
  for (int dom = 0; dom <= bound + 1; ++dom) {
    try {
      word_codomain(word, dom);
      return dom;
    } catch (const WordError&) {
    }
  }
  throw WordError("word has no consistent domain");
}

CyclicMorphism normalize(std::span<const CyclicGen> word, int dom) {
  word_codomain(word, dom);
  CyclicMorphism acc = CyclicMorphism::identity(dom);
  int d = dom;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    CyclicMorphism g = generator_morphism(*it, d);
    d = g.cod();
    acc = compose(g, acc);
  }
  return acc;
}

std::vector<CyclicMorphism> cyclic_epis(int n, int m) {
  std::vector<CyclicMorphism> out;
  for (const auto& e : simplex_epis(n, m))
    for (int r = 0; r <= n; ++r) out.push_back(CyclicMorphism::from_parts(r, e));
  return out;
}

std::vector<CyclicMorphism> cyclic_monos(int m, int n) {
  std::vector<CyclicMorphism> out;
  for (const auto& mu : simplex_monos(m, n))
    for (int r = 0; r <= m; ++r) out.push_back(CyclicMorphism::from_parts(r, mu));
  return out;
}

std::vector<CyclicMorphism> sections_of(const CyclicMorphism& epi) {
  if (!epi.is_epi()) throw ArgumentError(to_string(epi) + " is not an epimorphism");
  std::vector<CyclicMorphism> out;
  for (auto& mu : cyclic_monos(epi.cod(), epi.dom()))
    if (compose(epi, mu).is_identity()) out.push_back(std::move(mu));
  return out;
}

std::string to_string(const CyclicGen& gen) {
  switch (gen.kind) {
    case CyclicGen::Kind::face:
      return "d" + std::to_string(gen.index);
    case CyclicGen::Kind::degeneracy:
      return "s" + std::to_string(gen.index);
    case CyclicGen::Kind::rotation:
      return "t";
    case CyclicGen::Kind::extra_degeneracy:
      return "s" + std::to_string(gen.index) + "x";
  }
  return "?";
}

std::string to_string(const CyclicWord& word) {
  std::string out;
  for (const auto& g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::string to_string(const CyclicMorphism& f) { return f.is_identity() ? "id" : to_string(f.word()); }

}  // namespace levels
