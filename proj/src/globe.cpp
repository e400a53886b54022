#include "levels/globe.hpp"

#include "levels/errors.hpp"

namespace levels {

namespace {

bool rewrite_pair(GlobeGen outer, GlobeGen inner, std::vector<GlobeGen>& out) {
  using G = GlobeGen;
  if (outer == G::target && inner == G::source) {
    out = {G::source, G::source};
    return true;
  }
  if (outer == G::target && inner == G::target) {
    out = {G::source, G::target};
    return true;
  }
  if (outer == G::reflexivity && (inner == G::source || inner == G::target)) {
    out = {};
    return true;
  }
  return false;
}

}  // namespace

GlobeMorphism GlobeMorphism::identity(int n) { return from_normal_form(n, 0, false, 0); }
GlobeMorphism GlobeMorphism::source(int dom) { return from_normal_form(dom, 1, false, 0); }
GlobeMorphism GlobeMorphism::target(int dom) { return from_normal_form(dom, 0, true, 0); }
GlobeMorphism GlobeMorphism::reflexivity(int dom) { return from_normal_form(dom, 0, false, 1); }

GlobeMorphism GlobeMorphism::from_normal_form(int dom, int ups, bool tau, int downs) {
  if (dom < 0 || ups < 0 || downs < 0 || downs > dom) throw ArgumentError("invalid globe normal form");
  GlobeMorphism f;
  f.dom_ = dom;
  f.ups_ = ups;
  f.tau_ = tau;
  f.downs_ = downs;
  return f;
}

GlobePoint GlobeMorphism::eval(GlobePoint p) const {
  const bool valid = p.kind == GlobePoint::Kind::top ? p.level == dom_ : (p.level >= 0 && p.level < dom_);
  if (!valid) throw DomainError("point is not in the globe " + std::to_string(dom_));
  const int low = dom_ - downs_;
  // iota^downs collapses everything at level >= low onto the top globe of low
  if (p.kind != GlobePoint::Kind::top && p.level < low) return p;
  if (ups_ == 0 && !tau_) return {low, GlobePoint::Kind::top};
  return {low, tau_ ? GlobePoint::Kind::target : GlobePoint::Kind::source};
}

GlobeWord GlobeMorphism::word() const {
  GlobeWord w(static_cast<std::size_t>(ups_), GlobeGen::source);
  if (tau_) w.push_back(GlobeGen::target);
  w.insert(w.end(), static_cast<std::size_t>(downs_), GlobeGen::reflexivity);
  return w;
}

int word_codomain(std::span<const GlobeGen> word, int dom) {
  if (dom < 0) throw WordError("negative domain");
  int d = dom;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it == GlobeGen::reflexivity) {
      if (d < 1) throw WordError("iot cannot be applied to 0");
      --d;
    } else {
      ++d;
    }
  }
  return d;
}

int infer_domain(std::span<const GlobeGen> word) {
  for (int dom = 0; dom <= static_cast<int>(word.size()); ++dom) {
    try {
      word_codomain(word, dom);
      return dom;
    } catch (const WordError&) {
    }
  }
  throw WordError("word has no consistent domain");
}

GlobeMorphism normalize(std::span<const GlobeGen> word, int dom) {
  word_codomain(word, dom);
  std::vector<GlobeGen> w(word.begin(), word.end());
  std::vector<GlobeGen> replacement;
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
  // irreducible words are sigma* tau? iota*
  int ups = 0;
  bool tau = false;
  int downs = 0;
  std::size_t p = 0;
  while (p < w.size() && w[p] == GlobeGen::source) ++ups, ++p;
  if (p < w.size() && w[p] == GlobeGen::target) tau = true, ++p;
  while (p < w.size() && w[p] == GlobeGen::reflexivity) ++downs, ++p;
  if (p != w.size()) throw AlgorithmViolation("globe rewriting left a reducible word: " + to_string(w));
  return GlobeMorphism::from_normal_form(dom, ups, tau, downs);
}

GlobeMorphism compose(const GlobeMorphism& f, const GlobeMorphism& g) {
  if (g.cod() != f.dom())
    throw CompositionError("cannot compose " + std::to_string(f.dom()) + "->" + std::to_string(f.cod()) + " after " +
                           std::to_string(g.dom()) + "->" + std::to_string(g.cod()));
  GlobeWord w = f.word();
  GlobeWord tail = g.word();
  w.insert(w.end(), tail.begin(), tail.end());
  return normalize(w, g.dom());
}

std::pair<GlobeMorphism, GlobeMorphism> epi_mono_factor(const GlobeMorphism& f) {
  const int mid = f.dom() - f.downs();
  return {GlobeMorphism::from_normal_form(mid, f.ups(), f.tau(), 0), GlobeMorphism::from_normal_form(f.dom(), 0, false, f.downs())};
}

std::vector<GlobeMorphism> globe_epis(int n, int m) {
  if (m < 0 || m > n) return {};
  return {GlobeMorphism::from_normal_form(n, 0, false, n - m)};
}

std::vector<GlobeMorphism> globe_monos(int m, int n) {
  if (m < 0 || m > n) return {};
  if (m == n) return {GlobeMorphism::identity(m)};
  return {GlobeMorphism::from_normal_form(m, n - m, false, 0), GlobeMorphism::from_normal_form(m, n - m - 1, true, 0)};
}

std::vector<GlobeMorphism> sections_of(const GlobeMorphism& epi) {
  if (!epi.is_epi()) throw ArgumentError(to_string(epi) + " is not an epimorphism");
  std::vector<GlobeMorphism> out;
  for (auto& mu : globe_monos(epi.cod(), epi.dom()))
    if (compose(epi, mu).is_identity()) out.push_back(std::move(mu));
  return out;
}

std::string to_string(GlobeGen gen) {
  switch (gen) {
    case GlobeGen::source:
      return "sig";
    case GlobeGen::target:
      return "tau";
    case GlobeGen::reflexivity:
      return "iot";
  }
  return "?";
}

std::string to_string(const GlobeWord& word) {
  std::string out;
  for (auto g : word) {
    if (!out.empty()) out += ' ';
    out += to_string(g);
  }
  return out;
}

std::string to_string(const GlobeMorphism& f) { return f.is_identity() ? "id" : to_string(f.word()); }

}  // namespace levels
