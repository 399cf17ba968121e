#include "pingpong/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "pingpong/circle_catalog.hpp"
#include "pingpong/corollary.hpp"
#include "pingpong/document.hpp"
#include "pingpong/freeness.hpp"
#include "pingpong/generators.hpp"
#include "pingpong/sl2_catalog.hpp"

namespace pingpong::cli {

  namespace {

    struct Options {
      std::string file;
      std::string recipe;
      std::size_t k = 0;
      std::size_t n = 0;
      std::string pairing;
      std::size_t to      = 0;
      std::size_t max_len = 0;
      std::string basepoint;
      std::string u, v;
      std::string kind;
      std::string alpha = "1", beta = "1", gamma = "1", delta = "1";
      bool        serial = false;

      bool has_k         = false;
      bool has_basepoint = false;
    };

    // Raised when a command refuses to act on a certificate that fails
    // verification; the report has already been printed.
    struct NotVerified {};

    std::string read_file(const std::string& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw input_error("cannot read '" + path + "'");
      }
      std::ostringstream s;
      s << in.rdbuf();
      return s.str();
    }

    CertificateDocument load(const std::string& path, std::ostream& err) {
      auto doc = parse_certificate(read_file(path));
      for (auto const& w : doc.warnings()) {
        err << "warning: " << w << "\n";
      }
      return doc;
    }

    std::vector<std::size_t> parse_indices(const std::string& text) {
      std::vector<std::size_t> out;
      std::string              item;
      std::istringstream       in(text);
      while (std::getline(in, item, ',')) {
        auto v = parse_integer(item);
        if (v < 0 || !v.fits_ulong_p()) {
          throw input_error("bad index '" + item + "' in --pairing");
        }
        out.push_back(v.get_ui());
      }
      return out;
    }

    template <typename Cert>
    void require_pass(const Cert& cert, std::ostream& out) {
      auto r = verify(cert);
      if (!r.passed()) {
        out << r.str();
        throw NotVerified{};
      }
    }

    template <ActionContext C>
    GeneratorSet<C> schottky_generators(const CondIV<C>& cert) {
      GeneratorSet<C> g;
      g.recipe       = "iv";
      g.letter_names = {"f1", "f2"};
      g.letters      = {cert.f1, cert.f2};
      g.words        = {Word::generator(0), Word::generator(1)};
      g.elements     = g.letters;
      return g;
    }

    template <ActionContext C>
    GeneratorSet<C> select_generators(const CondIII<C>& cert, const Options& o) {
      auto        pairing = parse_indices(o.pairing);
      std::string recipe  = o.recipe;
      if (recipe.empty()) {
        recipe = cert.n() == 3 ? "ii" : cert.n() == 4 ? "iii4" : "rankk";
      }
      if (recipe == "ii") {
        if (!pairing.empty() && pairing.size() != 3) {
          throw input_error("recipe ii takes --pairing i,j,l (three translate indices)");
        }
        if (pairing.empty()) {
          pairing = {0, 1, 2};
        }
        auto g = generators_from_ii(as_cond_ii(cert, pairing[0], pairing[1], pairing[2]));
        g.letter_names = {"a"};
        for (auto i : pairing) {
          g.letter_names.push_back("a" + std::to_string(i));
        }
        return g;
      }
      if (recipe == "iii4") {
        if (pairing.empty()) {
          pairing = {0, 1, 2, 3};
        }
        if (pairing.size() != 4) {
          throw input_error("recipe iii4 takes --pairing i,j,p,q");
        }
        return generators_from_iii_n4(cert, {pairing[0], pairing[1], pairing[2], pairing[3]});
      }
      if (recipe == "rankk") {
        std::size_t k = o.has_k ? o.k : (pairing.empty() ? (cert.n() - 1) / 2 : pairing.size() / 2);
        if (pairing.size() % 2 != 0) {
          throw input_error("--pairing needs an even number of indices");
        }
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i + 1 < pairing.size(); i += 2) {
          pairs.emplace_back(pairing[i], pairing[i + 1]);
        }
        return generators_rank_k(cert, k, pairs);
      }
      throw input_error("unknown recipe '" + recipe + "' (expected ii, iii4 or rankk)");
    }

    // Generators of the certificate behind `doc`, checked before use.
    template <typename Fn>
    auto with_generators(const CertificateDocument& doc, const Options& o, std::ostream& out,
                         Fn&& fn) {
      return std::visit(
          [&](auto const& cert) {
            using Cert = std::decay_t<decltype(cert)>;
            require_pass(cert, out);
            if constexpr (requires { cert.f1; }) {
              if (!o.recipe.empty() && o.recipe != "iv") {
                throw input_error("a condition iv certificate has generators f1, f2; drop --recipe");
              }
              return fn(schottky_generators(cert));
            } else if constexpr (requires { cert.n(); }) {
              return fn(select_generators(cert, o));
            } else {
              return fn(select_generators(as_cond_iii(cert), o));
            }
            (void)sizeof(Cert);
          },
          to_certificate(doc));
    }

    template <ActionContext C>
    void print_generators(std::ostream& out, const GeneratorSet<C>& g) {
      out << "recipe: " << g.recipe << "\n";
      for (std::size_t m = 0; m < g.rank(); ++m) {
        out << "g" << m + 1 << " = " << g.words[m].str(g.letter_names) << "\n";
        out << "   " << C::format(g.elements[m]) << "\n";
      }
      if (g.seed) {
        out << "seed: a" << *g.seed_index << "A = " << g.seed->str() << "\n";
      }
    }

    template <typename Set>
    void print_translates(std::ostream& out, const std::vector<Set>& translates,
                          const std::vector<std::string>& labels) {
      out << "# translates:\n";
      Set covered;
      for (std::size_t i = 0; i < translates.size(); ++i) {
        out << "#   " << labels[i] << " = " << translates[i].str() << "\n";
        covered = covered | translates[i];
      }
      auto gaps = ~covered;
      if (gaps.is_empty()) {
        out << "# gaps: none\n";
        return;
      }
      out << "# gaps:\n";
      for (auto const& a : gaps.arcs()) {
        out << "#   " << a.str();
        if constexpr (std::is_same_v<Set, ArcSet<CirclePoint>>) {
          out << "  measure " << measure(Set(a)).str();
        }
        out << "\n";
      }
    }

    template <ActionContext C>
    void print_example(std::ostream& out, const std::string& title, const CondIII<C>& cert,
                       const std::string& letter = "a") {
      out << "# " << title << "\n";
      std::vector<ArcSet<typename C::Point>> translates;
      std::vector<std::string>               labels;
      for (std::size_t i = 0; i < cert.n(); ++i) {
        translates.push_back(C::image(cert.translators[i], cert.A));
        labels.push_back(letter + std::to_string(i) + "A");
      }
      print_translates(out, translates, labels);
      out << format_certificate(to_document(cert));
    }

    int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
      auto doc = load(o.file, err);
      auto r   = std::visit([](auto const& c) { return verify(c); }, to_certificate(doc));
      out << r.str();
      return r.passed() ? exit_pass : exit_failed;
    }

    int cmd_generators(const Options& o, std::ostream& out, std::ostream& err) {
      auto doc = load(o.file, err);
      with_generators(doc, o, out, [&](auto const& g) {
        print_generators(out, g);
        return 0;
      });
      return exit_pass;
    }

    int cmd_freeness(const Options& o, std::ostream& out, std::ostream& err) {
      auto doc = load(o.file, err);
      return with_generators(doc, o, out, [&](auto const& g) {
        using G = std::decay_t<decltype(g)>;
        using C = std::conditional_t<std::is_same_v<typename G::Element, PLHomeo>, CircleAction,
                                     ProjectiveAction>;
        std::optional<typename C::Point> p;
        if (o.has_basepoint) {
          p = C::Point::parse(o.basepoint);
        }
        print_generators(out, g);
        auto r = freeness_oracle<C>(g.elements, o.max_len, p, !o.serial);
        out << r.str();
        return r.passed() ? exit_pass : exit_failed;
      });
    }

    int cmd_order(const Options& o, std::ostream& out, std::ostream& err) {
      auto doc = load(o.file, err);
      if (doc.space != Space::circle) {
        throw input_error("order needs a circle certificate");
      }
      return with_generators(doc, o, out, [&](auto const& g) {
        if constexpr (std::is_same_v<typename std::decay_t<decltype(g)>::Element, PLHomeo>) {
          auto u = Word::parse(o.u);
          auto v = Word::parse(o.v);
          for (auto const* w : {&u, &v}) {
            if (w->rank_used() > g.rank()) {
              throw input_error("word " + w->str() + " uses a letter beyond g"
                                + std::to_string(g.rank()));
            }
          }
          auto p = o.has_basepoint ? CirclePoint::parse(o.basepoint) : CirclePoint::cut();
          print_generators(out, g);
          auto lu = lifted_orbit_point(u, g.elements, p);
          auto lv = lifted_orbit_point(v, g.elements, p);
          out << "u = " << u.str() << ", lifted u(" << p.str() << ") = " << lu.str() << "\n";
          out << "v = " << v.str() << ", lifted v(" << p.str() << ") = " << lv.str() << "\n";
          auto c = orbit_order_compare(u, v, g.elements, p);
          out << (c < 0 ? "u < v" : c > 0 ? "u > v" : "u = v") << "\n";
          return exit_pass;
        } else {
          return exit_input;
        }
      });
    }

    template <ActionContext C>
    CondIII<C> translates_cert(const AnyCertificate& any, const char* command) {
      if (auto const* c = std::get_if<CondIII<C>>(&any)) {
        return *c;
      }
      if (auto const* c = std::get_if<CondII<C>>(&any)) {
        return as_cond_iii(*c);
      }
      throw input_error(std::string(command) + " needs a condition ii or iii certificate");
    }

    int cmd_amplify(const Options& o, std::ostream& out, std::ostream& err) {
      auto doc = load(o.file, err);
      auto any = to_certificate(doc);
      auto go  = [&]<ActionContext C>(CondIII<C> cert) {
        if (o.to < cert.n()) {
          throw input_error("--to " + std::to_string(o.to) + " is below the current n = "
                            + std::to_string(cert.n()));
        }
        auto from = cert.n();
        while (cert.n() < o.to) {
          require_pass(cert, out);
          cert = amplify(cert);
        }
        out << "# amplified from n = " << from << " to n = " << cert.n() << "\n";
        out << format_certificate(to_document(cert));
        return exit_pass;
      };
      if (doc.space == Space::circle) {
        return go(translates_cert<CircleAction>(any, "amplify"));
      }
      return go(translates_cert<ProjectiveAction>(any, "amplify"));
    }

    int cmd_schottky(const Options& o, std::ostream& out, std::ostream& err) {
      auto doc = load(o.file, err);
      auto any = to_certificate(doc);
      auto go  = [&]<ActionContext C>(const CondIII<C>& cert) {
        if (cert.n() < 5) {
          throw input_error("schottky needs at least five translates, got n = "
                            + std::to_string(cert.n()));
        }
        require_pass(cert, out);
        auto iv = to_schottky(cert);
        out << "# condition iv from the first five translates; verify: "
            << (verify(iv).passed() ? "pass" : "fail") << "\n";
        out << format_certificate(to_document(iv));
        return exit_pass;
      };
      if (doc.space == Space::circle) {
        return go(translates_cert<CircleAction>(any, "schottky"));
      }
      return go(translates_cert<ProjectiveAction>(any, "schottky"));
    }

    long as_long(std::size_t v, const char* flag) {
      if (v > 1000) {
        throw input_error(std::string(flag) + " is too large");
      }
      return static_cast<long>(v);
    }

    int cmd_example(const Options& o, std::ostream& out) {
      if (o.kind == "standard") {
        long n = o.n ? as_long(o.n, "--n") : 3;
        if (n < 3) {
          throw input_error("standard needs n >= 3");
        }
        print_example(out, "standard certificate, n = " + std::to_string(n),
                      circle::standard_certificate(n));
      } else if (o.kind == "bennett") {
        long k = o.has_k ? as_long(o.k, "--k") : 3;
        if (k < 2) {
          throw input_error("bennett needs k >= 2");
        }
        out << "# pairing for t_i = b_{2i} a b_{2i+1}^-1:";
        for (auto const& [i, j] : circle::bennett_scheme(k)) {
          out << " " << i << "," << j;
        }
        out << "\n";
        print_example(out, "Bennett rotations, k = " + std::to_string(k),
                      circle::bennett_certificate(k), "b");
      } else if (o.kind == "sunic") {
        long k = o.has_k ? as_long(o.k, "--k") : 2;
        auto ex = circle::sunic_certificate(k);
        out << "# pairing for s_i = r^i a r^i:";
        for (auto const& [i, j] : ex.scheme) {
          out << " " << i << "," << j;
        }
        out << "\n";
        print_example(out, "standard certificate, n = " + std::to_string(2 * k + 1),
                      ex.cert);
      } else if (o.kind == "sl2" || o.kind == "sanov") {
        Rational al(1), be(1), ga(1), de(1);
        if (o.kind == "sl2") {
          al = Rational::parse(o.alpha);
          be = Rational::parse(o.beta);
          ga = Rational::parse(o.gamma);
          de = Rational::parse(o.delta);
        }
        print_example(out,
                      "SL2 certificate, alpha = " + al.str() + ", beta = " + be.str()
                          + ", gamma = " + ga.str() + ", delta = " + de.str(),
                      sl2::example_certificate(al, be, ga, de));
      } else {
        throw input_error("unknown example '" + o.kind
                          + "' (expected standard, bennett, sunic, sl2 or sanov)");
      }
      return exit_pass;
    }

    int cmd_corollary(const Options& o, std::ostream& out) {
      auto r = corollary_ball_check(o.max_len);
      out << r.str();
      return r.passed() ? exit_pass : exit_failed;
    }

    void add_recipe_options(CLI::App* sub, Options& o) {
      sub->add_option("--recipe", o.recipe, "ii, iii4 or rankk");
      sub->add_option("--k", o.k, "rank for the rankk recipe");
      sub->add_option("--pairing", o.pairing, "comma separated translate indices");
    }

  }  // namespace

  int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Exact ping-pong certificates for free group actions", "pingpong"};
    app.require_subcommand(1);

    auto* verify_cmd = app.add_subcommand("verify", "check every clause of a certificate");
    verify_cmd->add_option("file", o.file)->required();

    auto* gens = app.add_subcommand("generators", "free generators read off a certificate");
    gens->add_option("file", o.file)->required();
    add_recipe_options(gens, o);

    auto* amp = app.add_subcommand("amplify", "add translates until there are N");
    amp->add_option("file", o.file)->required();
    amp->add_option("--to", o.to, "target number of translates")->required();

    auto* sch = app.add_subcommand("schottky", "condition iv certificate from five translates");
    sch->add_option("file", o.file)->required();

    auto* fre = app.add_subcommand("freeness", "search a word ball for relations");
    fre->add_option("file", o.file)->required();
    fre->add_option("--max-len", o.max_len, "maximum word length")->required();
    auto* fre_bp = fre->add_option("--basepoint", o.basepoint, "orbit basepoint p/q or p:q");
    fre->add_flag("--serial", o.serial, "do not split the search across threads");
    add_recipe_options(fre, o);

    auto* ord = app.add_subcommand("order", "compare two words in the orbit order");
    ord->add_option("file", o.file)->required();
    ord->add_option("--u", o.u)->required();
    ord->add_option("--v", o.v)->required();
    auto* ord_bp = ord->add_option("--basepoint", o.basepoint, "basepoint p/q, default 0");
    add_recipe_options(ord, o);

    auto* ex = app.add_subcommand("example", "print a catalog certificate");
    ex->add_option("kind", o.kind, "standard, bennett, sunic, sl2 or sanov")->required();
    ex->add_option("--n", o.n);
    auto* ex_k = ex->add_option("--k", o.k);
    ex->add_option("--alpha", o.alpha);
    ex->add_option("--beta", o.beta);
    ex->add_option("--gamma", o.gamma);
    ex->add_option("--delta", o.delta);

    auto* cor = app.add_subcommand("corollary-check", "the rank-two free group acting on itself");
    cor->add_option("--max-len", o.max_len, "ball radius")->required();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_input;
    }
    o.has_basepoint = fre_bp->count() > 0 || ord_bp->count() > 0;
    o.has_k         = ex_k->count() > 0 || gens->get_option("--k")->count() > 0
              || fre->get_option("--k")->count() > 0 || ord->get_option("--k")->count() > 0;

    try {
      if (verify_cmd->parsed()) {
        return cmd_verify(o, out, err);
      }
      if (gens->parsed()) {
        return cmd_generators(o, out, err);
      }
      if (amp->parsed()) {
        return cmd_amplify(o, out, err);
      }
      if (sch->parsed()) {
        return cmd_schottky(o, out, err);
      }
      if (fre->parsed()) {
        return cmd_freeness(o, out, err);
      }
      if (ord->parsed()) {
        return cmd_order(o, out, err);
      }
      if (ex->parsed()) {
        return cmd_example(o, out);
      }
      return cmd_corollary(o, out);
    } catch (NotVerified const&) {
      return exit_failed;
    } catch (input_error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_input;
    }
  }

}  // namespace pingpong::cli
