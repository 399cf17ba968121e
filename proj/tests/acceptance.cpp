#include <algorithm>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pingpong/circle_catalog.hpp"
#include "pingpong/cli.hpp"
#include "pingpong/corollary.hpp"
#include "pingpong/freeness.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/sl2_catalog.hpp"

using namespace pingpong;

namespace {

  struct Outcome {
    bool        passed;
    std::string detail;
  };

  struct Criterion {
    int                      id;
    std::string              title;
    std::function<Outcome()> run;
    bool                     known_failure = false;
  };

  std::string run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    if (cli::run(args, out, err) != cli::exit_pass) {
      return "";
    }
    return out.str();
  }

  // "#   xA = [p,q)" lines from `example` output
  std::set<std::string> printed_translates(const std::string& text) {
    std::set<std::string> arcs;
    std::istringstream    in(text);
    std::string           line;
    while (std::getline(in, line)) {
      auto eq = line.find("A = [");
      if (line.starts_with("#   ") && eq != std::string::npos) {
        arcs.insert(line.substr(eq + 4));
      }
    }
    return arcs;
  }

  std::vector<Word> positive_words(std::size_t k, std::size_t max_len) {
    std::vector<Word> out{Word()};
    std::vector<Word> layer{Word()};
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Word> next;
      for (auto const& w : layer) {
        for (std::uint32_t i = 0; i < k; ++i) {
          next.push_back(w * Word::generator(i));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

  std::vector<PLHomeo> sunic_generators(long k) {
    auto ex = circle::sunic_certificate(k);
    return generators_rank_k(ex.cert, static_cast<std::size_t>(k), ex.scheme).elements;
  }

  Outcome translate_layout() {
    std::set<std::string> standard;
    for (int i = 0; i < 7; ++i) {
      standard.insert("[" + (i == 0 ? std::string("0") : Rational(i, 7).str()) + ","
                      + (i == 6 ? std::string("1") : Rational(i + 1, 7).str()) + ")");
    }
    auto s_out = run_cli({"example", "standard", "--n", "7"});
    if (printed_translates(s_out) != standard) {
      return {false, "standard n = 7 translates differ"};
    }
    std::set<std::string> b_rows = {"[0,1/7)",       "[4/21,1/3)",   "[1/3,10/21)",
                                    "[11/21,2/3)",   "[2/3,17/21)",  "[6/7,1)"};
    auto b_out = run_cli({"example", "bennett", "--k", "3"});
    if (printed_translates(b_out) != b_rows) {
      return {false, "bennett k = 3 translates differ"};
    }
    auto c       = circle::bennett_certificate(3);
    auto covered = ArcSet<CirclePoint>::empty();
    for (auto const& t : c.translators) {
      covered = covered | t.image(c.A);
    }
    auto gaps = (~covered).arcs();
    bool ok   = gaps.size() == 3;
    for (auto const& g : gaps) {
      ok = ok && measure(ArcSet<CirclePoint>(g)) == Rational(1, 21);
    }
    std::size_t printed = 0;
    for (auto pos = b_out.find("measure 1/21"); pos != std::string::npos;
         pos      = b_out.find("measure 1/21", pos + 1)) {
      ++printed;
    }
    if (!ok || printed != 3) {
      return {false, "gaps are not three arcs of measure 1/21"};
    }
    return {true, "7 standard translates, 6 Bennett rows, 3 gaps of measure 1/21"};
  }

  Outcome order_two() {
    for (long n = 3; n <= 10; ++n) {
      auto a = circle::standard_a(n);
      if (!(a * a).is_identity() || a.is_identity()) {
        return {false, "n = " + std::to_string(n)};
      }
    }
    return {true, "a^2 = 1 for n = 3..10"};
  }

  Outcome closed_forms() {
    int count = 0;
    for (long k = 2; k <= 5; ++k) {
      long n = 2 * k + 1;
      auto a = circle::standard_a(n);
      auto r = PLHomeo::rotation(Rational(1, n));
      auto l = PLHomeo::rotation(Rational(1, k));
      if (!(a * r == circle::closed_s0(k))) {
        return {false, "s0, k = " + std::to_string(k)};
      }
      ++count;
      auto ri = PLHomeo::identity();
      for (long i = 1; i <= k; ++i) {
        ri = ri * r;
        if (!(ri * a * ri == circle::closed_s(i, k))) {
          return {false, "s" + std::to_string(i) + ", k = " + std::to_string(k)};
        }
        ++count;
      }
      auto li = PLHomeo::identity();
      for (long i = 0; i < k; ++i) {
        if (!(li * a * r * li.inverse() == circle::closed_t(i, k))) {
          return {false, "t" + std::to_string(i) + ", k = " + std::to_string(k)};
        }
        li = li * l;
        ++count;
      }
    }
    return {true, std::to_string(count) + " closed forms equal their compositions"};
  }

  Outcome displayed_products() {
    auto c = sl2::example_certificate(1, 1, 1, 1);
    auto a = c.a;
    auto const& t = c.translators;
    auto prod = [&](int i, int j) { return t[i] * a * t[j].inverse(); };
    struct Row {
      std::string label;
      Matrix2     labelled;
      Matrix2     displayed;
      Matrix2     swapped;
    };
    std::vector<Row> rows = {
        {"-a2 a a0^-1", -prod(2, 0), Matrix2(1, -1, -1, 2), -prod(2, 0)},
        {"-a3 a a1^-1", -prod(3, 1), Matrix2(2, -1, -1, 1), -prod(3, 1)},
        {"a1 a a0^-1", prod(1, 0), Matrix2(0, -1, 1, -2), prod(1, 0)},
        {"a3 a a2^-1", prod(3, 2), Matrix2(0, -1, 1, 2), prod(2, 3)},
        {"-a3 a a0^-1", -prod(3, 0), Matrix2(1, 2, 0, 1), prod(0, 3)},
        {"-a2 a a1^-1", -prod(2, 1), Matrix2(1, 0, 2, 1), prod(1, 2)},
    };
    std::vector<std::string> wrong;
    bool                     all_swapped = true;
    for (auto const& r : rows) {
      if (!(r.labelled == r.displayed)) {
        wrong.push_back(r.label + " = " + r.labelled.str());
      }
      all_swapped = all_swapped && r.swapped == r.displayed;
    }
    if (wrong.empty()) {
      return {true, "six displayed products reproduced"};
    }
    std::string detail = "labelled products differ: ";
    for (std::size_t i = 0; i < wrong.size(); ++i) {
      detail += (i ? "; " : "") + wrong[i];
    }
    if (all_swapped) {
      detail += " (the last three displayed matrices are a2 a a3^-1, a0 a a3^-1, a1 a a2^-1)";
    }
    return {false, detail};
  }

  template <typename Cert>
  bool verified(const Cert& c) {
    return verify(c).passed() && inequality_lemma_check(c).passed();
  }

  Outcome certificate_suite() {
    int count = 0;
    for (long n = 3; n <= 10; ++n, ++count) {
      if (!verified(circle::standard_certificate(n))) {
        return {false, "standard n = " + std::to_string(n)};
      }
    }
    for (long k = 2; k <= 5; ++k, ++count) {
      if (!verified(circle::bennett_certificate(k))) {
        return {false, "bennett k = " + std::to_string(k)};
      }
    }
    for (int m = 0; m < 16; ++m, ++count) {
      auto c = sl2::example_certificate(1 + (m & 1), 1 + ((m >> 1) & 1), 1 + ((m >> 2) & 1),
                                        1 + ((m >> 3) & 1));
      if (!verified(c)) {
        return {false, "sl2 grid point " + std::to_string(m)};
      }
    }
    if (!verified(sl2::example_certificate(3, Rational(1, 3), 2, Rational(1, 2)))) {
      return {false, "sl2 boundary (3, 1/3, 2, 1/2)"};
    }
    ++count;
    return {true, std::to_string(count) + " certificates verify with the inequality lemma"};
  }

  Outcome constructions() {
    auto c = circle::standard_certificate(3);
    while (c.n() < 8) {
      c = amplify(c);
      if (!verify(c).passed()) {
        return {false, "amplify to n = " + std::to_string(c.n())};
      }
    }
    auto iv5 = verify(to_schottky(circle::standard_certificate(5)));
    auto iva = verify(to_schottky(amplify(amplify(circle::standard_certificate(3)))));
    if (!iv5.passed() || !iva.passed()) {
      return {false, "to_schottky"};
    }
    return {true, "amplify 3 -> 8 verifies at each step; two condition iv certificates verify"};
  }

  Outcome oracle_cross_checks() {
    std::vector<Report> reports;
    auto std3 = as_cond_ii(circle::standard_certificate(3));
    reports.push_back(freeness_oracle<CircleAction>(generators_from_ii(std3).elements, 6));
    for (long k = 2; k <= 3; ++k) {
      auto gens = sunic_generators(k);
      reports.push_back(freeness_oracle<CircleAction>(gens, 6));
      reports.push_back(freeness_oracle<CircleAction>(gens, 4, CirclePoint()));
    }
    auto sl = sl2::example_certificate(1, 1, 1, 1);
    reports.push_back(
        freeness_oracle<ProjectiveAction>(generators_from_iii_n4(sl, {0, 1, 2, 3}).elements, 10));
    reports.push_back(
        freeness_oracle<ProjectiveAction>(generators_from_iii_n4(sl, {2, 0, 3, 1}).elements, 10));
    auto [u, v] = sl2::uv_pair(2, 2);
    std::vector<Matrix2> uv = {u, v};
    reports.push_back(freeness_oracle<ProjectiveAction>(uv, 10));
    for (auto const& r : reports) {
      if (!r.passed()) {
        return {false, r.title() + ": " + r.failures()[0].witness};
      }
    }
    return {true, std::to_string(reports.size()) + " oracle runs pass"};
  }

  Outcome order_suite() {
    std::size_t pairs = 0;
    for (long k = 2; k <= 3; ++k) {
      auto gens  = sunic_generators(k);
      auto words = positive_words(static_cast<std::size_t>(k), 5);
      for (auto const& u : words) {
        for (auto const& v : words) {
          bool lex = std::lexicographical_compare(
              u.letters().begin(), u.letters().end(), v.letters().begin(), v.letters().end(),
              [](Letter x, Letter y) { return x.generator < y.generator; });
          if ((orbit_order_compare(u, v, gens, CirclePoint()) < 0) != lex) {
            return {false, "lex order: " + u.str() + " vs " + v.str()};
          }
          ++pairs;
        }
      }
      auto uv = reduced_words(static_cast<std::size_t>(k), 2);
      uv.push_back(Word());
      auto mult = reduced_words(static_cast<std::size_t>(k), 3);
      for (auto const& u : uv) {
        for (auto const& v : uv) {
          auto c = orbit_order_compare(u, v, gens, CirclePoint());
          for (auto const& w : mult) {
            if (orbit_order_compare(w * u, w * v, gens, CirclePoint()) != c) {
              return {false, "left invariance: w = " + w.str()};
            }
          }
        }
      }
    }
    return {true, std::to_string(pairs) + " positive pairs in lex order; left invariant for |w| <= 3"};
  }

  Outcome corollary() {
    auto r = corollary_ball_check(7);
    return {r.passed(), r.passed() ? "ball of radius 7" : r.failures()[0].witness};
  }

  Outcome measure_growth() {
    auto        ex   = circle::sunic_certificate(2);
    auto        gens = sunic_generators(2);
    Rational    previous(-1);
    std::string values;
    for (std::size_t L = 0; L <= 4; ++L) {
      auto m = measure(circle::partial_orbit_union(gens, ex.cert.A, L));
      if (!(previous < m) || Rational(1) < m) {
        return {false, "L = " + std::to_string(L) + " measure " + m.str()};
      }
      values += (L ? ", " : "") + m.str();
      previous = m;
    }
    return {true, "measures " + values};
  }

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "translate layout", translate_layout},
      {2, "order-two map", order_two},
      {3, "closed forms", closed_forms},
      {4, "sl2 displayed products", displayed_products, true},
      {5, "certificate suite", certificate_suite},
      {6, "proof constructions", constructions},
      {7, "oracle cross-checks", oracle_cross_checks},
      {8, "order suite", order_suite},
      {9, "corollary ball check", corollary},
      {10, "measure monotonicity", measure_growth},
  };
  int unexpected = 0;
  for (auto const& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::string status = o.passed ? "PASS" : "FAIL";
    if (c.known_failure) {
      status += o.passed ? " (expected to fail)" : " (known)";
    }
    if (o.passed == c.known_failure) {
      ++unexpected;
    }
    std::cout << "criterion " << c.id << ": " << status << "  " << c.title << ": " << o.detail
              << "\n";
  }
  std::cout << (unexpected ? "unexpected results: " + std::to_string(unexpected)
                           : std::string("all results as expected"))
            << "\n";
  return unexpected ? 1 : 0;
}
