#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "levels/aufhebung.hpp"
#include "levels/format.hpp"
#include "levels/syntax.hpp"

namespace levels::cli {

namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void build(CLI::App& app, RunConfig& cfg) {
  app.require_subcommand(1);
  app.add_option("--shape", cfg.shape, "simplicial | cubical | globular | cyclic");
  app.add_option("--n", cfg.n, "skeletal level");
  app.add_option("--truncate", cfg.truncation, "highest materialised dimension");
  app.add_option("--seed", cfg.seed, "base seed for random complexes and sampling");
  app.add_option("--budget-cells", cfg.budget_cells, "cap on tabulated cells");
  app.add_option("--budget-spheres", cfg.budget_spheres, "partial assignments per dimension before sampling");
  app.add_option("--out", cfg.out, "write the main output to this file");
  app.add_flag("--trace", cfg.trace, "print the proof branch taken for each face");
  app.add_option("--from", cfg.from, "check spheres of dimension above this");
  app.add_option("--to", cfg.to, "highest sphere dimension to check");
  app.add_option("--dom", cfg.dom, "domain of the word (inferred by default)");
  app.add_option("--seeds", cfg.seeds, "number of random complexes")->check(CLI::NonNegativeNumber);

  auto* normalize = app.add_subcommand("normalize", "canonical form of a generator word");
  normalize->add_option("word", cfg.inputs, "word, e.g. \"s0 d1\"")->required()->expected(1);
  auto* validate = app.add_subcommand("validate", "check the cycle equations of a complex file");
  validate->add_option("file", cfg.inputs)->required()->expected(1);
  auto* fill = app.add_subcommand("fill", "fill a sphere given as comma-separated cells");
  fill->add_option("args", cfg.inputs, "file [sphere]")->required()->expected(1, 2);
  auto* cosk = app.add_subcommand("coskeletal", "check unique filling of every sphere in (from, to]");
  cosk->add_option("file", cfg.inputs)->required()->expected(1);
  app.add_subcommand("verify", "certify the coskeletality bounds for a shape and n");
  app.add_subcommand("counterexample", "print the counterexample complex and its sphere");
  for (auto* sub : app.get_subcommands({})) {
    sub->fallthrough();
    sub->callback([&cfg, sub] { cfg.command = sub->get_name(); });
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Usage("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out when given, else to the stream.
void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (!cfg.out) {
    out << text;
    return;
  }
  std::ofstream f(*cfg.out, std::ios::binary);
  if (!f) throw Usage("cannot write '" + *cfg.out + "'");
  f << text;
}

Shape required_shape(const RunConfig& cfg) {
  if (!cfg.shape) throw Usage("--shape is required");
  try {
    return parse_shape(*cfg.shape);
  } catch (const Error&) {
    throw Usage("unknown shape '" + *cfg.shape + "'");
  }
}

int required_n(const RunConfig& cfg) {
  if (!cfg.n) throw Usage("--n is required");
  if (*cfg.n < 0) throw Usage("--n must be non-negative");
  return *cfg.n;
}

CoskeletalOptions options(const RunConfig& cfg) {
  CoskeletalOptions o;
  o.sphere_budget = cfg.budget_spheres;
  o.max_cells = cfg.budget_cells;
  o.seed = cfg.seed;
  return o;
}

template <class F>
auto with_shape(Shape s, F&& f) {
  switch (s) {
    case Shape::simplicial:
      return f(SimplexMorphism{});
    case Shape::cubical:
      return f(CubeMorphism{});
    case Shape::globular:
      return f(GlobeMorphism{});
    case Shape::cyclic:
      break;
  }
  return f(CyclicMorphism{});
}

int cmd_normalize(const RunConfig& cfg, std::ostream& out) {
  const auto& word = cfg.inputs.at(0);
  const std::string text = with_shape(required_shape(cfg), [&](auto tag) {
    using M = decltype(tag);
    return to_string(cfg.dom ? ShapeTraits<M>::parse(word, *cfg.dom) : ShapeTraits<M>::parse_inferred(word));
  });
  emit(cfg, out, text + "\n");
  return 0;
}

int cmd_validate(const RunConfig& cfg, std::ostream& out) {
  auto any = parse_complex(read_file(cfg.inputs.at(0)));
  return std::visit(
      [&](const auto& X) {
        auto report = validate(X);
        std::string text = std::string(to_string(shape_of(any))) + " complex, skeletal " + std::to_string(X.skeletal_level()) + ", " +
                           std::to_string(X.generators().size()) + " generators\n";
        for (const auto& issue : report.issues) text += issue.generator + ": " + issue.message + "\n";
        text += report.ok ? "valid\n" : "invalid\n";
        emit(cfg, out, text);
        return report.ok ? 0 : 1;
      },
      any);
}

// The sphere argument, or the "# sphere:" line of the file.
std::string sphere_text(const RunConfig& cfg, const std::string& file) {
  if (cfg.inputs.size() >= 2) return cfg.inputs[1];
  std::istringstream in(file);
  std::string line;
  const std::string tag = "# sphere:";
  while (std::getline(in, line))
    if (line.rfind(tag, 0) == 0) return line.substr(tag.size());
  throw Usage("no sphere given and no '# sphere:' line in the file");
}

int cmd_fill(const RunConfig& cfg, std::ostream& out) {
  const auto file = read_file(cfg.inputs.at(0));
  auto any = parse_complex(file);
  const auto literal = sphere_text(cfg, file);
  return std::visit(
      [&](const auto& X) {
        auto s = parse_sphere(X, literal);
        if (s.k > X.truncation()) throw TruncationError("sphere dimension exceeds truncation " + std::to_string(X.truncation()));
        auto check = is_sphere(X, s);
        if (!check) throw Usage("not a sphere: cycle equation " + check.violated.value_or("?") + " fails");
        auto oracle = brute_force_fill(X, s, cfg.budget_cells);
        std::string text = "sphere " + std::to_string(s.k) + ": " + print_sphere(X, s) + "\n";
        text += "status: " + to_string(oracle.status) + "\n";
        text += "fillers: " + std::to_string(oracle.witnesses.size()) + "\n";
        for (const auto& w : oracle.witnesses) text += "  " + to_literal(X, w) + "\n";
        auto res = constructive_fill(X, s);
        if (res.status == FillStatus::filled)
          text += "constructive: " + to_literal(X, *res.filler) + "\n";
        else
          text += "constructive: not_applicable (" + res.reason + ")\n";
        if (cfg.trace)
          for (const auto& t : res.trace) text += "trace: " + t + "\n";
        emit(cfg, out, text);
        // several fillers break uniqueness, reported like a missing one
        return oracle.witnesses.size() == 1 ? 0 : 1;
      },
      any);
}

int cmd_coskeletal(const RunConfig& cfg, std::ostream& out) {
  auto any = parse_complex(read_file(cfg.inputs.at(0)));
  return std::visit(
      [&](const auto& X) {
        const int from = cfg.from.value_or(X.skeletal_level());
        const int to = cfg.to.value_or(X.truncation());
        auto report = coskeletal_up_to(X, from, to, options(cfg));
        emit(cfg, out, to_json(report).dump(2) + "\n");
        return report.coskeletal && report.violations.empty() ? 0 : 1;
      },
      any);
}

template <class M>
Certificate verify_shape(const RunConfig& cfg, int n) {
  std::vector<Subject<M>> subjects;
  auto ce = designated_counterexample<M>(n);
  if (cfg.truncation) ce.complex.set_truncation(*cfg.truncation);
  subjects.push_back({"counterexample", std::move(ce.complex), std::move(ce.sphere)});
  RandomParams params;
  params.truncation = cfg.truncation;
  for (int i = 0; i < cfg.seeds; ++i) {
    // a generation failure moves on to the next derived seed
    for (std::uint64_t attempt = 0;; ++attempt) {
      const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(i) + attempt * 1'000'003ULL;
      try {
        subjects.push_back({"random seed " + std::to_string(seed), random_skeletal_complex<M>(n, params, seed), std::nullopt});
        break;
      } catch (const GenerationError&) {
        if (attempt == 9) throw;
      }
    }
  }
  return certify(n, subjects, options(cfg));
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const Shape shape = required_shape(cfg);
  const int n = required_n(cfg);
  auto cert = with_shape(shape, [&](auto tag) { return verify_shape<decltype(tag)>(cfg, n); });
  emit(cfg, out, to_json(cert).dump(2) + "\n");
  return cert.holds ? 0 : 1;
}

int cmd_counterexample(const RunConfig& cfg, std::ostream& out) {
  const Shape shape = required_shape(cfg);
  const int n = required_n(cfg);
  const std::string text = with_shape(shape, [&](auto tag) {
    auto ce = designated_counterexample<decltype(tag)>(n);
    if (cfg.truncation) ce.complex.set_truncation(*cfg.truncation);
    return print_complex(ce.complex) + "# sphere: " + print_sphere(ce.complex, ce.sphere) + "\n";
  });
  emit(cfg, out, text);
  return 0;
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app("Coskeletality checks for finitely presented presheaves", "levels");
  build(app, cfg);
  std::vector<std::string> rev(args.rbegin(), args.rend());
  app.parse(rev);
  return cfg;
}

std::vector<std::string> print_config(const RunConfig& cfg) {
  const RunConfig d;
  std::vector<std::string> a{cfg.command};
  // options before positionals so words starting with '-' stay positional
  auto opt = [&](const char* name, const std::string& v) {
    a.push_back(name);
    a.push_back(v);
  };
  if (cfg.shape) opt("--shape", *cfg.shape);
  if (cfg.n) opt("--n", std::to_string(*cfg.n));
  if (cfg.truncation) opt("--truncate", std::to_string(*cfg.truncation));
  if (cfg.seed != d.seed) opt("--seed", std::to_string(cfg.seed));
  if (cfg.budget_cells != d.budget_cells) opt("--budget-cells", std::to_string(cfg.budget_cells));
  if (cfg.budget_spheres != d.budget_spheres) opt("--budget-spheres", std::to_string(cfg.budget_spheres));
  if (cfg.out) opt("--out", *cfg.out);
  if (cfg.trace) a.push_back("--trace");
  if (cfg.from) opt("--from", std::to_string(*cfg.from));
  if (cfg.to) opt("--to", std::to_string(*cfg.to));
  if (cfg.dom) opt("--dom", std::to_string(*cfg.dom));
  if (cfg.seeds != d.seeds) opt("--seeds", std::to_string(cfg.seeds));
  if (!cfg.inputs.empty()) a.push_back("--");
  a.insert(a.end(), cfg.inputs.begin(), cfg.inputs.end());
  return a;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app("Coskeletality checks for finitely presented presheaves", "levels");
  build(app, cfg);
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    if (cfg.command == "normalize") return cmd_normalize(cfg, out);
    if (cfg.command == "validate") return cmd_validate(cfg, out);
    if (cfg.command == "fill") return cmd_fill(cfg, out);
    if (cfg.command == "coskeletal") return cmd_coskeletal(cfg, out);
    if (cfg.command == "verify") return cmd_verify(cfg, out);
    if (cfg.command == "counterexample") return cmd_counterexample(cfg, out);
    err << "error: unknown command\n";
  } catch (const Usage& e) {
    err << "error: " << e.what() << "\n";
  } catch (const AlgorithmViolation& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

}  // namespace levels::cli
