#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "selfsim/error.hpp"
#include "selfsim/io.hpp"
#include "support.hpp"

using namespace selfsim;
using selfsim::testing::q;

namespace {

const std::string kCli = SELFSIM_CLI;
const std::string kData = SELFSIM_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const auto tmp = std::filesystem::temp_directory_path() / "selfsim_cli_test.out";
  const std::string cmd = env + " " + kCli + " " + args + " > " + tmp.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream buf;
  buf << in.rdbuf();
  r.out = buf.str();
  return r;
}

std::string data(const std::string& name) { return kData + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

std::string parse_error_message(const std::string& text) {
  try {
    (void)parse_ifs(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    return e.what();
  }
  FAIL("accepted: " << text);
  return {};
}

}  // namespace

TEST_SUITE("spec files") {
  TEST_CASE("sample files parse to the family constructors") {
    CHECK(read_ifs_file(data("three_map_asym.ifs")) == three_map(q(1, 5), q(3, 10)));
    CHECK(read_ifs_file(data("three_map_sym.ifs")) == three_map(q(1, 5), q(2, 5)));
    CHECK(read_ifs_file(data("three_map_touching.ifs")) == three_map(q(1, 4), q(1, 4)));
    CHECK(read_ifs_file(data("three_map_mirror.ifs")) == three_map(q(1, 5), q(1, 2)));
    CHECK(read_ifs_file(data("four_map.ifs")) == four_map_example());
    CHECK(read_ifs_file(data("two_map.ifs")) == two_map(q(1, 4), q(1, 3)));
    CHECK(read_ifs_file(data("grid.ifs")) == homogeneous_grid(q(1, 4), 3));
  }

  TEST_CASE("header-only tagged families and generic map lists") {
    CHECK(parse_ifs("m=3 family=three-map rho=1/5 lambda=3/10\n") == three_map(q(1, 5), q(3, 10)));
    CHECK(parse_ifs("m=2 family=equal-gap ratios=1/4,1/3") == equal_gap({q(1, 4), q(1, 3)}));
    const Ifs g = parse_ifs("# comment\nm=2\n\n1/3 1   # trailing\n1/2 -1\n");
    CHECK(g.maps() == std::vector<Similitude>{{q(1, 3), q(1)}, {q(1, 2), q(-1)}});
    CHECK(family_name(g.family()) == "generic");
  }

  TEST_CASE("format and parse round trip") {
    const std::vector<Ifs> all{three_map(q(1, 5), q(3, 10)),
                               three_map(q(2, 7), q(5, 14)),
                               equal_gap({q(1, 6), q(1, 3), q(1, 5)}),
                               two_map(q(2, 5), q(1, 3)),
                               homogeneous_grid(q(1, 10), 4),
                               four_map_example(),
                               Ifs({Similitude(q(1, 3), q(1)), Similitude(q(1, 2), q(-1)), Similitude(q(3, 7), q(5, 9))})};
    for (const auto& ifs : all) {
      CAPTURE(format_ifs(ifs));
      CHECK(parse_ifs(format_ifs(ifs)) == ifs);
      CHECK(format_ifs(parse_ifs(format_ifs(ifs))) == format_ifs(ifs));
    }
    CHECK(format_ifs(three_map(q(1, 5), q(3, 10))) ==
          "m=3 family=three-map rho=1/5 lambda=3/10\n1/5 0\n1/5 3/10\n1/5 4/5\n");
  }

  TEST_CASE("parse errors name the problem") {
    CHECK(contains(parse_error_message("m=2\n0.5 0\n1/2 1/2\n"), "0.5"));
    CHECK(contains(parse_error_message(""), "empty"));
    CHECK(contains(parse_error_message("1/2 0\n1/2 1/2\n"), "key=value"));
    CHECK(contains(parse_error_message("m=3\n1/2 0\n1/2 1/2\n"), "map lines"));
    CHECK(contains(parse_error_message("m=3 family=three-map rho=1/3 lambda=1/3"), "rho"));
    CHECK(contains(parse_error_message("m=3 family=three-map rho=1/5 lambda=7/10"), "lambda"));
    CHECK(contains(parse_error_message("m=3 family=three-map rho=1/5 lambda=3/10\n1/5 0\n1/5 1/3\n1/5 4/5"),
                   "do not match"));
    CHECK(contains(parse_error_message("m=3 family=spiral"), "spiral"));
    CHECK(contains(parse_error_message("m=3 family=three-map rho=1/5 lambda=3/10 gamma=1"), "gamma"));
    CHECK(contains(parse_error_message("m=2 family=three-map rho=1/5 lambda=3/10"), "m=2"));
    CHECK(contains(parse_error_message("m=2\n1/2 0 1\n1/2 1/2"), "ratio offset"));
    CHECK(contains(parse_error_message("m=x\n1/2 0\n1/2 1/2"), "count"));
    try {
      (void)read_ifs_file(data("missing.ifs"));
      FAIL("missing file accepted");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
    }
  }

  TEST_CASE("map specs") {
    CHECK(parse_map("-1/5 1/5") == Similitude(q(-1, 5), q(1, 5)));
    CHECK(parse_map("  1/10   11/20 ") == Similitude(q(1, 10), q(11, 20)));
    for (const char* bad : {"1/5", "0 1", "1/5 0.3", "1/5 1 2"}) {
      CAPTURE(bad);
      try {
        (void)parse_map(bad);
        FAIL("accepted");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
      }
    }
  }
}

TEST_SUITE("records and diagrams") {
  TEST_CASE("verdict records") {
    const auto w = to_record(EmbeddingVerdict{IncludedWord{Word(3, {2, 3})}});
    CHECK(w["kind"] == "included-word");
    CHECK(w["word"] == nlohmann::json::array({2, 3}));
    const auto x = to_record(EmbeddingVerdict{ExcludedWitness{q(0), q(3, 5), Gap{q(1, 2), q(4, 5)}, 1}});
    CHECK(x["kind"] == "excluded-witness");
    CHECK(x["gap"] == nlohmann::json::array({"1/2", "4/5"}));
    CHECK(x["image"] == "3/5");
    CHECK(x["depth"] == 1);
    const auto c = to_record(cover(three_map(q(1, 5), q(3, 10)), 1));
    CHECK(c["largest_gap"] == "3/10");
    CHECK(c["parts"].size() == 3);
    CHECK(c["parts"][1] == nlohmann::json::array({"3/10", "1/2"}));
  }

  TEST_CASE("svg strip is deterministic") {
    const Ifs e = three_map(q(1, 5), q(3, 10));
    const std::string a = render_cover_svg(e, 3);
    CHECK(a == render_cover_svg(e, 3));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(contains(a, "G1"));
    CHECK(contains(a, "G2"));
    CHECK(contains(a, "</svg>"));
    CHECK(render_cover_svg(four_map_example(), 2) == render_cover_svg(four_map_example(), 2));
  }
}

TEST_SUITE("command line") {
  TEST_CASE("cover") {
    const auto r = run("cover " + data("three_map_asym.ifs") + " --depth 1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "[0, 1/5]"));
    CHECK(contains(r.out, "[3/10, 1/2]"));
    CHECK(contains(r.out, "[4/5, 1]"));
    CHECK(contains(r.out, "largest gap 3/10"));
    const auto zero = run("cover " + data("three_map_asym.ifs") + " --depth 0");
    CHECK(contains(zero.out, "1 pieces"));
    CHECK(contains(zero.out, "[0, 1]"));
    const auto k = run("cover " + data("four_map.ifs") + " --depth 1");
    CHECK(contains(k.out, "4 pieces, largest gap 1/3"));

    const auto svg = std::filesystem::temp_directory_path() / "selfsim_cli_test.svg";
    std::filesystem::remove(svg);
    CHECK(run("cover " + data("three_map_asym.ifs") + " --depth 2 --svg " + svg.string()).code == 0);
    CHECK(std::filesystem::file_size(svg) > 100);
  }

  TEST_CASE("check exit codes") {
    const auto in = run("check " + data("three_map_asym.ifs") + " --map \"1/25 23/50\"");
    CHECK(in.code == 0);
    CHECK(contains(in.out, "word 2 3"));
    const auto out = run("check " + data("three_map_asym.ifs") + " --map \"1/5 3/5\"");
    CHECK(out.code == 1);
    CHECK(contains(out.out, "point 0"));
    const auto g1 = run("check " + data("four_map.ifs") + " --map \"1/10 1/20\"");
    CHECK(g1.code == 0);
    CHECK(contains(g1.out, "cylinder-exchange"));
    const auto unknown = run("check " + data("four_map.ifs") + " --map \"1/10 1/20\" --branch-depth 0");
    CHECK(unknown.code == 4);
  }

  TEST_CASE("decompose") {
    const auto w = run("decompose " + data("three_map_asym.ifs") + " --map \"1/25 23/50\"");
    CHECK(w.code == 0);
    CHECK(contains(w.out, "\n2 3\n"));
    const auto r = run("decompose " + data("three_map_sym.ifs") + " --map \"-1/5 1/5\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1 (reflected, center 1/2)"));
    const auto no = run("decompose " + data("three_map_asym.ifs") + " --map \"1/5 3/5\"");
    CHECK(no.code == 1);
    CHECK(contains(no.out, "excluded-witness"));
    const auto steps = run("decompose " + data("three_map_asym.ifs") + " --map \"1/125 0\" --max-steps 2");
    CHECK(steps.code == 3);
  }

  TEST_CASE("enumerate") {
    const auto pos = run("enumerate " + data("three_map_asym.ifs") + " --ratio 1/5");
    CHECK(pos.code == 0);
    CHECK(contains(pos.out, "3 certified, 0 unresolved"));
    const auto neg = run("enumerate " + data("three_map_asym.ifs") + " --ratio -1/5");
    CHECK(neg.code == 0);
    CHECK(contains(neg.out, "0 certified, 0 unresolved"));
    const auto k = run("enumerate " + data("four_map.ifs") + " --ratio 1/10");
    CHECK(contains(k.out, "6 certified"));
    const auto rec = run("enumerate " + data("four_map.ifs") + " --ratio -1/10 --format record");
    const auto j = nlohmann::json::parse(rec.out);
    CHECK(j["certified"].size() == 6);
    CHECK(j["ratio"] == "-1/10");
  }

  TEST_CASE("verify-paper") {
    const auto all = run("verify-paper");
    CHECK(all.code == 0);
    CHECK(contains(all.out, "all 9 reports pass"));
    const auto one = run("verify-paper --only four-map");
    CHECK(one.code == 0);
    CHECK(contains(one.out, "all 1 reports pass"));
    const auto bad = run("verify-paper --only four-map --inject-wrong-expectation");
    CHECK(bad.code == 1);
    CHECK(contains(bad.out, "MISMATCH"));
    CHECK(run("verify-paper --only nonsense").code == 2);
  }

  TEST_CASE("input, parse and budget errors") {
    CHECK(run("cover " + data("missing.ifs")).code == 2);
    CHECK(run("check " + data("three_map_asym.ifs") + " --map \"0.2 0\"").code == 2);
    CHECK(run("enumerate " + data("three_map_asym.ifs") + " --ratio 3/2").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("cover " + data("four_map.ifs") + " --depth 11").code == 3);
    CHECK(run("cover " + data("four_map.ifs") + " --depth 3", "SELFSIM_BUDGET=10").code == 3);
    CHECK(run("cover " + data("four_map.ifs") + " --depth 3 --budget 64", "SELFSIM_BUDGET=10").code == 0);
  }

  TEST_CASE("record output round-trips through json") {
    const auto r = run("check " + data("three_map_asym.ifs") + " --map \"1/5 3/5\" --format record");
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["kind"] == "excluded-witness");
    CHECK(j["point"] == "0");
    const auto v = run("verify-paper --only grid --format record");
    CHECK(nlohmann::json::parse(v.out)["pass"] == true);
  }
}
