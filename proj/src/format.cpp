#include "levels/format.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <regex>

#include "levels/syntax.hpp"

namespace levels {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

// Whitespace-separated tokens; a '[' keeps the token open until its ']'.
std::vector<Token> tokenize(std::string_view line, int lineno) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    bool open = false;
    while (i < line.size() && (open || !std::isspace(static_cast<unsigned char>(line[i])))) {
      if (line[i] == '[') {
        if (open) throw ParseError("nested '['", lineno, static_cast<int>(i) + 1);
        open = true;
      } else if (line[i] == ']') {
        if (!open) throw ParseError("unmatched ']'", lineno, static_cast<int>(i) + 1);
        open = false;
      }
      ++i;
    }
    if (open) throw ParseError("unterminated '['", lineno, static_cast<int>(start) + 1);
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

int parse_nat(const Token& t, int lineno) {
  int v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || p != t.text.data() + t.text.size() || v < 0)
    throw ParseError("expected a natural number, got '" + t.text + "'", lineno, t.column);
  return v;
}

template <class M>
auto parse_word(std::string_view text) {
  if constexpr (std::is_same_v<M, SimplexMorphism>)
    return parse_simplex_word(text);
  else if constexpr (std::is_same_v<M, CubeMorphism>)
    return parse_cube_word(text);
  else if constexpr (std::is_same_v<M, GlobeMorphism>)
    return parse_globe_word(text);
  else
    return parse_cyclic_word(text);
}

// Column inside the word reported by a WordError, if any.
std::optional<int> word_column(const WordError& e) {
  static const std::regex re("column ([0-9]+)");
  const std::string what = e.what();
  std::smatch sm;
  if (std::regex_search(what, sm, re)) return std::stoi(sm[1].str());
  return std::nullopt;
}

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '-')) return false;
  return true;
}

// Cell literal at (line, column); dim < 0 infers the domain.
template <class M>
Cell<M> cell_at(const SkeletalComplex<M>& X, std::string_view text, int dim, int lineno, int column) {
  const auto open = text.find('[');
  if (open == std::string_view::npos || text.back() != ']')
    throw ParseError("expected a cell literal id[word], got '" + std::string(text) + "'", lineno, column);
  const auto id = text.substr(0, open);
  if (!valid_id(id)) throw ParseError("bad generator id '" + std::string(id) + "'", lineno, column);
  const auto g = X.find(id);
  if (!g) throw ParseError("unknown generator '" + std::string(id) + "'", lineno, column);
  const int gdim = X.generator(*g).dim;
  const auto body = text.substr(open + 1, text.size() - open - 2);
  const int body_column = column + static_cast<int>(open) + 1;
  try {
    const auto word = parse_word<M>(body);
    if (dim < 0) {
      // codomain minus domain does not depend on the domain
      const int bound = gdim + static_cast<int>(word.size()) + 1;
      for (int d = 0; d <= bound && dim < 0; ++d) {
        try {
          if (word_codomain(word, d) == gdim) dim = d;
        } catch (const WordError&) {
        }
      }
      if (dim < 0) throw ParseError("word does not end on the dimension of '" + std::string(id) + "'", lineno, body_column);
    }
    const auto f = normalize(word, dim);
    if (f.cod() != gdim || !f.is_epi())
      throw ParseError("'" + std::string(text) + "' is not a " + std::to_string(dim) + "-cell over '" + std::string(id) + "'", lineno, column);
    return X.make_cell(*g, f);
  } catch (const WordError& e) {
    const auto wc = word_column(e);
    throw ParseError(e.what(), lineno, wc ? body_column + *wc - 1 : column);
  } catch (const CompositionError& e) {
    throw ParseError(e.what(), lineno, body_column);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), lineno, body_column);
  }
}

struct Line {
  int number;
  std::vector<Token> tokens;
};

template <class M>
SkeletalComplex<M> parse_generators(const std::vector<Line>& lines, std::size_t from, int skeletal, std::optional<int> truncation) {
  SkeletalComplex<M> X(skeletal, truncation);
  for (std::size_t li = from; li < lines.size(); ++li) {
    const auto& [no, t] = lines[li];
    if (t.front().text != "gen") {
      if (t.front().text == "shape" || t.front().text == "skeletal" || t.front().text == "truncate")
        throw ParseError("header '" + t.front().text + "' after the first generator", no, t.front().column);
      throw ParseError("unknown statement '" + t.front().text + "'", no, t.front().column);
    }
    if (t.size() < 4 || t[2].text != "dim") throw ParseError("expected 'gen <id> dim <d> [faces ...]'", no, t.front().column);
    if (!valid_id(t[1].text)) throw ParseError("bad generator id '" + t[1].text + "'", no, t[1].column);
    if (X.find(t[1].text)) throw ParseError("duplicate generator '" + t[1].text + "'", no, t[1].column);
    const int d = parse_nat(t[3], no);
    if (d > X.truncation()) throw ParseError("dimension exceeds truncation", no, t[3].column);
    std::size_t first = 4;
    if (t.size() > 4) {
      if (t[4].text != "faces") throw ParseError("expected 'faces', got '" + t[4].text + "'", no, t[4].column);
      first = 5;
    }
    const std::size_t got = t.size() - first;
    const int need = ShapeTraits<M>::face_count(d);
    if (static_cast<int>(got) != need)
      throw ParseError("generator '" + t[1].text + "' needs " + std::to_string(need) + " faces, got " + std::to_string(got), no,
                       got > static_cast<std::size_t>(need) ? t[first + static_cast<std::size_t>(need)].column : t[1].column);
    std::vector<Cell<M>> faces;
    for (std::size_t i = first; i < t.size(); ++i) faces.push_back(cell_at(X, t[i].text, d - 1, no, t[i].column));
    try {
      X.add_generator(t[1].text, d, std::move(faces));
    } catch (const ArgumentError& e) {
      throw ParseError(e.what(), no, t.front().column);
    }
  }
  return X;
}

}  // namespace

AnyComplex parse_complex(std::string_view text) {
  std::vector<Line> lines;
  int no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(pos, end - pos);
    ++no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line, no);
    if (!tokens.empty()) lines.push_back({no, std::move(tokens)});
    pos = end + 1;
  }

  std::optional<Shape> shape;
  std::optional<int> skeletal, truncation;
  int truncation_line = 0;
  std::size_t li = 0;
  for (; li < lines.size(); ++li) {
    const auto& [ln, t] = lines[li];
    const auto& key = t.front().text;
    if (key == "gen") break;
    if (key != "shape" && key != "skeletal" && key != "truncate") throw ParseError("unknown statement '" + key + "'", ln, t.front().column);
    if (t.size() != 2) throw ParseError("'" + key + "' takes exactly one value", ln, t.front().column);
    if ((key == "shape" && shape) || (key == "skeletal" && skeletal) || (key == "truncate" && truncation))
      throw ParseError("duplicate '" + key + "' header", ln, t.front().column);
    if (key == "shape") {
      try {
        shape = parse_shape(t[1].text);
      } catch (const Error&) {
        throw ParseError("unknown shape '" + t[1].text + "'", ln, t[1].column);
      }
    } else if (key == "skeletal") {
      skeletal = parse_nat(t[1], ln);
    } else {
      truncation = parse_nat(t[1], ln);
      truncation_line = ln;
    }
  }
  const int where = li < lines.size() ? lines[li].number : no;
  if (!shape) throw ParseError("missing 'shape' header", where, 1);
  if (!skeletal) throw ParseError("missing 'skeletal' header", where, 1);
  if (truncation && *truncation < *skeletal) throw ParseError("truncation below the skeletal level", truncation_line, 1);
  switch (*shape) {
    case Shape::simplicial:
      return parse_generators<SimplexMorphism>(lines, li, *skeletal, truncation);
    case Shape::cubical:
      return parse_generators<CubeMorphism>(lines, li, *skeletal, truncation);
    case Shape::globular:
      return parse_generators<GlobeMorphism>(lines, li, *skeletal, truncation);
    case Shape::cyclic:
      return parse_generators<CyclicMorphism>(lines, li, *skeletal, truncation);
  }
  throw ParseError("unknown shape", where, 1);
}

Shape shape_of(const AnyComplex& X) {
  return std::visit([](const auto& c) { return std::decay_t<decltype(c)>::shape; }, X);
}

std::string print_complex(const AnyComplex& X) {
  return std::visit([](const auto& c) { return print_complex(c); }, X);
}

template <class M>
Cell<M> parse_cell(const SkeletalComplex<M>& X, std::string_view text) {
  return cell_at(X, text, -1, 1, 1);
}

template <class M>
Cell<M> parse_cell(const SkeletalComplex<M>& X, std::string_view text, int dim) {
  return cell_at(X, text, dim, 1, 1);
}

template <class M>
Sphere<M> parse_sphere(const SkeletalComplex<M>& X, std::string_view text) {
  Sphere<M> s;
  std::size_t pos = 0;
  while (true) {
    auto end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    auto part = text.substr(pos, end - pos);
    std::size_t lead = 0;
    while (lead < part.size() && std::isspace(static_cast<unsigned char>(part[lead]))) ++lead;
    std::size_t trail = part.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(part[trail - 1]))) --trail;
    const int column = static_cast<int>(pos + lead) + 1;
    if (trail == lead) throw ParseError("empty cell literal", 1, column);
    const auto lit = part.substr(lead, trail - lead);
    auto c = s.faces.empty() ? cell_at(X, lit, -1, 1, column) : cell_at(X, lit, s.k - 1, 1, column);
    if (s.faces.empty()) s.k = c.dim() + 1;
    s.faces.push_back(std::move(c));
    if (end == text.size()) break;
    pos = end + 1;
  }
  if (static_cast<int>(s.faces.size()) != sphere_arity(ShapeTraits<M>::shape, s.k))
    throw ParseError("a " + std::to_string(s.k) + "-sphere needs " + std::to_string(sphere_arity(ShapeTraits<M>::shape, s.k)) +
                         " faces, got " + std::to_string(s.faces.size()),
                     1, 1);
  return s;
}

#define LEVELS_INSTANTIATE(M)                                                   \
  template Cell<M> parse_cell(const SkeletalComplex<M>&, std::string_view);      \
  template Cell<M> parse_cell(const SkeletalComplex<M>&, std::string_view, int); \
  template Sphere<M> parse_sphere(const SkeletalComplex<M>&, std::string_view);
LEVELS_INSTANTIATE(SimplexMorphism)
LEVELS_INSTANTIATE(CubeMorphism)
LEVELS_INSTANTIATE(GlobeMorphism)
LEVELS_INSTANTIATE(CyclicMorphism)
#undef LEVELS_INSTANTIATE

}  // namespace levels
