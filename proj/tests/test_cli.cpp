#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"
#include "levels/aufhebung.hpp"
#include "levels/format.hpp"

using namespace levels;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch() {
  auto dir = fs::temp_directory_path() / "levels_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string write(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("normalize") {
  CHECK(run({"normalize", "--shape", "simplicial", "s0 d0"}).out == "id\n");
  CHECK(run({"normalize", "--shape", "simplicial", ""}).out == "id\n");
  CHECK(run({"normalize", "--shape", "cubical", "b1 a0@1"}).out == "id\n");
  auto r = run({"normalize", "--shape", "simplicial", "d0 d1"});
  CHECK(r.code == 0);
  CHECK(r.out == "d2 d0\n");
  auto bad = run({"normalize", "--shape", "simplicial", "d0 q1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("column 4") != std::string::npos);
  CHECK(run({"normalize", "s0"}).code == 2);
  CHECK(run({"normalize", "--shape", "hexagonal", "s0"}).code == 2);
}

TEST_CASE("validate") {
  const auto good = write("triangle.cx", print_complex(fixtures::triangle()));
  auto r = run({"validate", good});
  CHECK(r.code == 0);
  CHECK(r.out == "simplicial complex, skeletal 2, 8 generators\nvalid\n");

  // faces of the edge disagree with the faces of the triangle
  const auto broken = write("broken.cx",
                            "shape simplicial\nskeletal 2\n"
                            "gen a dim 0\ngen b dim 0\n"
                            "gen e dim 1 faces b[] a[]\ngen f dim 1 faces a[] b[]\n"
                            "gen T dim 2 faces e[] e[] f[]\n");
  auto inv = run({"validate", broken});
  CHECK(inv.code == 1);
  CHECK(inv.out.find("invalid\n") != std::string::npos);
  CHECK(inv.out.find("T: ") != std::string::npos);

  const auto garbled = write("garbled.cx", "shape simplicial\nskeletal 1\ngen v dim 0\ngen e dim 1 faces v[] w[]\n");
  auto pe = run({"validate", garbled});
  CHECK(pe.code == 2);
  CHECK(pe.err.find("line 4, column 23") != std::string::npos);

  CHECK(run({"validate", (scratch() / "missing.cx").string()}).code == 2);
}

TEST_CASE("fill") {
  auto ce = build_simplicial_counterexample(3);
  const auto path = write("simplicial3.cx", print_complex(ce.complex) + "# sphere: " + print_sphere(ce.complex, ce.sphere) + "\n");
  auto r = run({"fill", path});
  CHECK(r.code == 1);
  CHECK(r.out.find("status: no_filler\n") != std::string::npos);
  CHECK(r.out.find("fillers: 0\n") != std::string::npos);

  const auto tri = write("triangle.cx", print_complex(fixtures::triangle()));
  auto f = run({"fill", tri, "e12[], e02[], e01[]"});
  CHECK(f.code == 0);
  CHECK(f.out.find("status: filled\n") != std::string::npos);
  CHECK(f.out.find("  T[]\n") != std::string::npos);

  // U and the degeneracy e01[s0] share the boundary (e01, e01, a0[s0])
  auto m = run({"fill", tri, "e01[], e01[], a0[s0]"});
  CHECK(m.code == 1);
  CHECK(m.out.find("status: filled\nfillers: 2\n  e01[s0]\n  U[]\n") != std::string::npos);

  // constructive path with its proof trace
  auto sq = fixtures::square();
  const auto sqp = write("square.cx", print_complex(sq));
  const auto top = fixtures::lit(sq, "x", 3, "b1 b1");
  auto t = run({"fill", "--trace", sqp, print_sphere(sq, boundary(sq, top))});
  CHECK(t.code == 0);
  CHECK(t.out.find("constructive: x[b1 b2]\n") != std::string::npos);
  CHECK(t.out.find("trace: r=1 m=1 M={1}\n") != std::string::npos);
  CHECK(run({"fill", sqp, print_sphere(sq, boundary(sq, top))}).out.find("trace:") == std::string::npos);

  CHECK(run({"fill", tri, "e12[], e02[]"}).code == 2);
  CHECK(run({"fill", tri, "e12[], e12[], e01[]"}).code == 2);
  CHECK(run({"fill", tri}).code == 2);
}

TEST_CASE("coskeletal") {
  const auto point = write("point.cx", "shape simplicial\nskeletal 0\ntruncate 3\ngen v dim 0\n");
  auto r = run({"coskeletal", "--from", "1", "--to", "3", point});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["coskeletal"] == true);

  auto ce = build_cubical_counterexample(1);
  const auto cube = write("cube1.cx", print_complex(ce.complex));
  auto bad = run({"coskeletal", "--from", "1", "--to", "3", cube});
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["coskeletal"] == false);
  CHECK(run({"coskeletal", "--from", "2", "--to", "4", cube}).code == 0);
}

TEST_CASE("verify and counterexample") {
  auto r = run({"verify", "--shape", "cubical", "--n", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["claim"]["lower_fail"] == 1);
  CHECK(j["claim"]["upper_hold"] == 2);
  CHECK(j["holds"] == true);
  CHECK(run({"verify", "--shape", "cubical", "--n", "1"}).out == r.out);
  CHECK(run({"verify", "--shape", "cubical"}).code == 2);
  CHECK(run({"verify", "--shape", "cubical", "--n", "-1"}).code == 2);

  auto c = run({"counterexample", "--shape", "simplicial", "--n", "3"});
  CHECK(c.code == 0);
  const auto path = write("ce.cx", c.out);
  CHECK(run({"validate", path}).code == 0);
  CHECK(run({"fill", path}).code == 1);
  CHECK(print_complex(parse_complex(c.out)) + "# sphere: " ==
        c.out.substr(0, c.out.find("# sphere: ") + 10));

  const auto out = (scratch() / "ce_out.cx").string();
  auto o = run({"counterexample", "--shape", "simplicial", "--n", "3", "--out", out});
  CHECK(o.code == 0);
  CHECK(o.out.empty());
  CHECK(slurp(out) == c.out);
}

TEST_CASE("usage") {
  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("normalize") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"normalize", "--shape", "simplicial", "--seed", "x", "s0"}).code == 2);
}

TEST_CASE("config round trip") {
  const std::vector<std::vector<std::string>> cases{
      {"normalize", "--shape", "simplicial", "s0 d0"},
      {"fill", "--trace", "--budget-cells", "17", "f.cx", "x[], y[]"},
      {"coskeletal", "--from", "1", "--to", "3", "--budget-spheres", "9", "--out", "o.json", "g.cx"},
      {"verify", "--shape", "globular", "--n", "2", "--seed", "42", "--seeds", "3", "--truncate", "5"},
      {"normalize", "--shape", "cubical", "--dom", "2", "--", "-"},
  };
  for (const auto& args : cases) {
    const auto cfg = cli::parse_args(args);
    CHECK(cli::parse_args(cli::print_config(cfg)) == cfg);
  }
  const auto cfg = cli::parse_args({"verify", "--shape", "cyclic", "--n", "2"});
  CHECK(cfg.command == "verify");
  CHECK(cfg.shape == "cyclic");
  CHECK(cfg.n == 2);
  CHECK(cfg.seeds == 5);
}
