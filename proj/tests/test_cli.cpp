#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "pingpong/circle_catalog.hpp"
#include "pingpong/cli.hpp"
#include "pingpong/document.hpp"
#include "pingpong/sl2_catalog.hpp"

using namespace pingpong;

namespace {

  const std::string cert_dir = PINGPONG_CERT_DIR;

  std::string slurp(const std::filesystem::path& p) {
    std::ifstream      in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  struct Run {
    int         code;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  const std::string standard3_text = R"(# the standard example with n = 3
space circle
element a pl [(0,1/3),(1/3,0)]
element id rot 0
element r rot 1/3
element r2 rot 2/3
set A arcs [0,1/3)
set Y full
condition ii
bind A A
bind Y Y
bind a a
bind a0 id
bind a1 r
bind a2 r2
)";

  std::string without(const std::string& text, const std::string& line) {
    auto pos = text.find(line);
    REQUIRE(pos != std::string::npos);
    return text.substr(0, pos) + text.substr(pos + line.size() + 1);
  }

  std::vector<std::filesystem::path> shipped() {
    std::vector<std::filesystem::path> out;
    for (auto const& e : std::filesystem::directory_iterator(cert_dir)) {
      if (e.path().extension() == ".cert") {
        out.push_back(e.path());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace

TEST_CASE("a parsed document equals the catalog certificate") {
  auto doc  = parse_certificate(standard3_text);
  auto cert = std::get<CondII<CircleAction>>(to_certificate(doc));
  auto cat  = as_cond_ii(circle::standard_certificate(3));
  CHECK(cert.A == cat.A);
  CHECK(cert.Y == cat.Y);
  CHECK(cert.a == cat.a);
  CHECK(cert.translators == cat.translators);
  CHECK(doc.translator_count() == 3);
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_certificate("space circle\nelement r rot 1/0\n");
    FAIL("expected a syntax error");
  } catch (syntax_error const& e) {
    CHECK(std::string(e.what()).rfind("line 2, column 15:", 0) == 0);
  }
  CHECK_THROWS_AS(parse_certificate("space circle\nfrobnicate x\n"), syntax_error);
  CHECK_THROWS_AS(parse_certificate("space circle\nelement r rot 1/3 junk\n"), syntax_error);
  CHECK_THROWS_AS(parse_certificate("space circle\nelement r pl [(0,1/3) (1/3,0)]\n"), syntax_error);
  CHECK_THROWS_AS(parse_certificate("space torus\n"), syntax_error);
  CHECK_THROWS_AS(parse_certificate("space projective\nset A arcs [1:0,0:0)\n"), syntax_error);
  CHECK_THROWS_AS(parse_certificate("space circle\nset A arcs\n"), syntax_error);
  CHECK_THROWS_AS(parse_certificate(without(standard3_text, "bind a2 r2") + "bind a9x r2\n"),
                  syntax_error);
}

TEST_CASE("semantic errors are distinct from syntax errors") {
  auto semantic = [](const std::string& text) {
    CHECK_THROWS_AS(parse_certificate(text), semantic_error);
    try {
      parse_certificate(text);
    } catch (syntax_error const&) {
      FAIL("reported as a syntax error: " << text);
    } catch (...) {
    }
  };
  semantic(without(standard3_text, "bind a1 r"));
  semantic(standard3_text + "bind a1 r2\n");
  semantic(without(standard3_text, "bind a2 r2") + "bind a2 nothing\n");
  semantic(without(standard3_text, "bind a2 r2") + "bind a2 A\n");
  semantic(standard3_text + "bind f1 r\n");
  semantic(standard3_text + "element m mat [1 1; 0 1]\n");
  semantic(standard3_text + "element r rot 1/2\n");
  semantic(without(standard3_text, "space circle"));
  semantic("space circle\nelement f pl [(0,0),(1/3,2/3),(2/3,1/3)]\ncondition ii\n");
  semantic("space projective\nelement f mat [0 1; 1 0]\n");
  semantic("space circle\nset A arcs [1/3,1/3)\n");
  semantic("space projective\nelement r rot 1/3\n");
  semantic("space circle\n");
  auto iii = without(standard3_text, "condition ii") + "condition iii\n";
  CHECK_NOTHROW(parse_certificate(iii));
  semantic(without(iii, "bind a1 r"));
}

TEST_CASE("formatting round-trips") {
  auto doc  = parse_certificate(standard3_text);
  auto text = format_certificate(doc);
  CHECK(parse_certificate(text) == doc);
  CHECK(format_certificate(parse_certificate(text)) == text);

  auto odd = parse_certificate(
      "space circle\nelement f pl [(1/2,3/4),(0,0),(1/4,2/4)]\n"
      "set S arcs [2/3,1) [0,1/7) [1/2,2/3)\nset T empty\nset A arcs [0,1/2)\nset Y full\n"
      "condition ii\nbind A A\nbind Y Y\nbind a f\nbind a0 f\nbind a1 f\nbind a2 f\n");
  auto odd_text = format_certificate(odd);
  CHECK(odd_text.find("set S arcs [1/2,1/7)") != std::string::npos);
  CHECK(parse_certificate(odd_text) == odd);

  for (auto const& path : shipped()) {
    CAPTURE(path.string());
    auto d = parse_certificate(slurp(path));
    CHECK(parse_certificate(format_certificate(d)) == d);
  }
}

TEST_CASE("documents from certificates") {
  auto check = [](auto const& cert) {
    auto doc   = to_document(cert);
    auto again = parse_certificate(format_certificate(doc));
    CHECK(again == doc);
    auto back = std::get<std::decay_t<decltype(cert)>>(to_certificate(again));
    CHECK(verify(back).str() == verify(cert).str());
  };
  check(circle::standard_certificate(5));
  check(as_cond_ii(circle::standard_certificate(3)));
  check(to_schottky(circle::standard_certificate(5)));
  check(sl2::example_certificate(2, 1, 1, 3));
  check(as_cond_ii(sl2::example_certificate(1, 1, 1, 1)));
  check(to_schottky(amplify(sl2::example_certificate(1, 1, 1, 1))));
}

TEST_CASE("determinant warnings") {
  auto doc = parse_certificate("space projective\nelement m mat [2 0; 0 1]\nelement n mat [1 1; 0 1]\n"
                               "set A arcs [1:0,0:1)\nset Y full\ncondition ii\nbind A A\nbind Y Y\n"
                               "bind a m\nbind a0 n\nbind a1 n\nbind a2 n\n");
  REQUIRE(doc.warnings().size() == 1);
  CHECK(doc.warnings()[0].find("determinant 2") != std::string::npos);
}

TEST_CASE("run exit codes") {
  auto ok = run({"verify", cert_dir + "/circle_n7.cert"});
  CHECK(ok.code == cli::exit_pass);
  CHECK(ok.out.find("verdict: pass") != std::string::npos);

  auto sanov = run({"freeness", cert_dir + "/sanov.cert", "--max-len", "6"});
  CHECK(sanov.code == cli::exit_pass);

  auto broken = run({"verify", cert_dir + "/broken.cert"});
  CHECK(broken.code == cli::exit_failed);
  CHECK(broken.out.find("a1A n a2A = [1/3,2/3)") != std::string::npos);
  CHECK(run({"generators", cert_dir + "/broken.cert"}).code == cli::exit_failed);
  CHECK(run({"amplify", cert_dir + "/broken.cert", "--to", "5"}).code == cli::exit_failed);

  CHECK(run({"verify", cert_dir + "/missing.cert"}).code == cli::exit_input);
  CHECK(run({"verify"}).code == cli::exit_input);
  CHECK(run({}).code == cli::exit_input);
  CHECK(run({"freeness", cert_dir + "/sanov.cert"}).code == cli::exit_input);
  CHECK(run({"example", "dodecahedron"}).code == cli::exit_input);
  CHECK(run({"example", "sl2", "--alpha", "1/2"}).code == cli::exit_input);
  CHECK(run({"example", "sl2", "--alpha", "1/0"}).code == cli::exit_input);
  CHECK(run({"schottky", cert_dir + "/circle_n3.cert"}).code == cli::exit_input);
  CHECK(run({"order", cert_dir + "/sanov.cert", "--u", "g1", "--v", "g2"}).code == cli::exit_input);
  CHECK(run({"order", cert_dir + "/sunic_k2.cert", "--u", "g3", "--v", "g2"}).code == cli::exit_input);
  CHECK(run({"corollary-check", "--max-len", "1"}).code == cli::exit_input);
  CHECK(run({"--help"}).code == cli::exit_pass);
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args = {"freeness", cert_dir + "/sunic_k2.cert", "--max-len", "4",
                                   "--basepoint", "0"};
  auto first = run(args);
  CHECK(first.code == cli::exit_pass);
  for (int i = 0; i < 3; ++i) {
    CHECK(run(args).out == first.out);
  }
  args.push_back("--serial");
  CHECK(run(args).out == first.out);
}

TEST_CASE("shipped documents verify and pass the oracle") {
  for (auto const& path : shipped()) {
    CAPTURE(path.string());
    bool broken = path.filename() == "broken.cert";
    CHECK(run({"verify", path.string()}).code == (broken ? cli::exit_failed : cli::exit_pass));
    if (!broken) {
      CHECK(run({"freeness", path.string(), "--max-len", "6"}).code == cli::exit_pass);
    }
  }
}

TEST_CASE("example output is a valid document") {
  for (std::vector<std::string> args : {std::vector<std::string>{"example", "standard", "--n", "7"},
                                        {"example", "bennett", "--k", "3"},
                                        {"example", "sunic", "--k", "3"},
                                        {"example", "sl2", "--alpha", "2", "--beta", "1"},
                                        {"example", "sanov"}}) {
    auto r = run(args);
    REQUIRE(r.code == cli::exit_pass);
    auto doc = parse_certificate(r.out);
    CHECK(std::visit([](auto const& c) { return verify(c).passed(); }, to_certificate(doc)));
  }
  auto std7 = run({"example", "standard", "--n", "7"});
  for (int i = 0; i < 7; ++i) {
    auto arc = "a" + std::to_string(i) + "A = [" + (i == 0 ? std::string("0") : std::to_string(i) + "/7")
               + "," + (i == 6 ? std::string("1") : std::to_string(i + 1) + "/7") + ")";
    CHECK(std7.out.find(arc) != std::string::npos);
  }
  auto bennett = run({"example", "bennett", "--k", "3"});
  CHECK(bennett.out.find("[1/7,4/21)  measure 1/21") != std::string::npos);
}

TEST_CASE("transformations through the command line") {
  auto amp = run({"amplify", cert_dir + "/circle_n3.cert", "--to", "6"});
  REQUIRE(amp.code == cli::exit_pass);
  auto amp_doc = parse_certificate(amp.out);
  CHECK(amp_doc.translator_count() == 6);
  auto amp_cert = std::get<CondIII<CircleAction>>(to_certificate(amp_doc));
  CHECK(verify(amp_cert).passed());

  std::filesystem::path tmp = std::filesystem::temp_directory_path() / "pingpong_amplified.cert";
  std::ofstream(tmp) << amp.out;
  auto sch = run({"schottky", tmp.string()});
  REQUIRE(sch.code == cli::exit_pass);
  auto iv = std::get<CondIV<CircleAction>>(to_certificate(parse_certificate(sch.out)));
  CHECK(verify(iv).passed());
  std::filesystem::remove(tmp);

  auto gens = run({"generators", cert_dir + "/circle_n3.cert", "--recipe", "ii", "--pairing", "0,2,1"});
  CHECK(gens.code == cli::exit_pass);
  CHECK(gens.out.find("g1 = a a2^-1 a0 a^-1 a0^-1 a2") != std::string::npos);

  auto order = run({"order", cert_dir + "/sunic_k2.cert", "--u", "g1", "--v", "g2", "--pairing", "1,4,2,3"});
  CHECK(order.code == cli::exit_pass);
  CHECK(order.out.find("lifted u(0) = 1/5") != std::string::npos);
  CHECK(order.out.find("lifted v(0) = 9/20") != std::string::npos);
  CHECK(order.out.find("u < v") != std::string::npos);

  auto cor = run({"corollary-check", "--max-len", "5"});
  CHECK(cor.code == cli::exit_pass);
}
