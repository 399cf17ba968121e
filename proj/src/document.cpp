#include "pingpong/document.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <regex>
#include <set>

namespace pingpong {

  namespace {

    // Scanner over one line; columns are 1-based.
    class Cursor {
     public:
      Cursor(std::string_view line, std::size_t line_no) : s_(line), line_(line_no) {}

      void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
          ++pos_;
        }
      }
      bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
      }
      std::size_t column() const {
        return pos_ + 1;
      }

      [[noreturn]] void fail(const std::string& what, std::optional<std::size_t> col = {}) const {
        throw syntax_error(line_, col.value_or(column()), what);
      }

      bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
      }
      void expect(char c) {
        skip_ws();
        if (pos_ >= s_.size() || s_[pos_] != c) {
          fail(std::string("expected '") + c + "'");
        }
        ++pos_;
      }

      // Maximal run of characters satisfying `ok`.
      std::string_view take(bool (*ok)(char)) {
        skip_ws();
        auto start = pos_;
        while (pos_ < s_.size() && ok(s_[pos_])) {
          ++pos_;
        }
        return s_.substr(start, pos_ - start);
      }

      std::string word(const char* what) {
        auto col = (skip_ws(), column());
        auto w   = take([](char c) {
          return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
        });
        if (w.empty()) {
          fail(std::string("expected ") + what, col);
        }
        return std::string(w);
      }

      Rational rational() {
        auto col = (skip_ws(), column());
        auto tok = take([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '-' || c == '/'; });
        if (tok.empty()) {
          fail("expected a rational number", col);
        }
        try {
          return Rational::parse(tok);
        } catch (input_error const& e) {
          fail(e.what(), col);
        }
      }

      ProjPoint proj_point() {
        auto col = (skip_ws(), column());
        auto tok = take([](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0 || c == '-' || c == ':'; });
        if (tok.empty()) {
          fail("expected a projective point p:q", col);
        }
        try {
          return ProjPoint::parse(tok);
        } catch (input_error const& e) {
          fail(e.what(), col);
        }
      }

      void expect_end() {
        if (!at_end()) {
          fail("unexpected trailing text");
        }
      }

     private:
      std::string_view s_;
      std::size_t      line_;
      std::size_t      pos_ = 0;
    };

    template <typename F>
    auto semantic(std::size_t line, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (syntax_error const&) {
        throw;
      } catch (input_error const& e) {
        throw semantic_error("line " + std::to_string(line) + ": " + e.what());
      }
    }

    CertificateDocument::ElementValue parse_element(Cursor& c, Space space, std::size_t line) {
      auto kind_col = (c.skip_ws(), c.column());
      auto kind     = c.word("element kind rot, pl or mat");
      if (kind == "rot" || kind == "pl") {
        if (space != Space::circle) {
          throw semantic_error("line " + std::to_string(line) + ": '" + kind
                               + "' element in a projective document");
        }
        if (kind == "rot") {
          auto q = c.rational();
          return PLHomeo::rotation(q);
        }
        std::vector<PLHomeo::Breakpoint> pts;
        c.expect('[');
        do {
          c.expect('(');
          auto x = c.rational();
          c.expect(',');
          auto y = c.rational();
          c.expect(')');
          pts.push_back({CirclePoint(x), CirclePoint(y)});
          if (!c.peek(',')) {
            break;
          }
          c.expect(',');
        } while (true);
        c.expect(']');
        return semantic(line, [&] { return PLHomeo::from_points(std::move(pts)); });
      }
      if (kind == "mat") {
        if (space != Space::projective) {
          throw semantic_error("line " + std::to_string(line)
                               + ": 'mat' element in a circle document");
        }
        c.expect('[');
        auto m11 = c.rational();
        auto m12 = c.rational();
        c.expect(';');
        auto m21 = c.rational();
        auto m22 = c.rational();
        c.expect(']');
        return semantic(line, [&] { return Matrix2::positive(m11, m12, m21, m22); });
      }
      c.fail("unknown element kind '" + kind + "'", kind_col);
    }

    template <CyclicPoint P, typename ReadPoint>
    ArcSet<P> parse_arcs(Cursor& c, std::size_t line, ReadPoint read) {
      std::vector<Arc<P>> arcs;
      while (!c.at_end()) {
        c.expect('[');
        P from = read();
        c.expect(',');
        P to = read();
        c.expect(')');
        arcs.push_back(semantic(line, [&] { return Arc<P>::proper(from, to); }));
      }
      if (arcs.empty()) {
        c.fail("'arcs' needs at least one arc [p,q)");
      }
      return ArcSet<P>::normalize(arcs);
    }

    CertificateDocument::SetValue parse_set(Cursor& c, Space space, std::size_t line) {
      auto col  = (c.skip_ws(), c.column());
      auto kind = c.word("set kind arcs, full or empty");
      if (kind == "full" || kind == "empty") {
        bool full = kind == "full";
        if (space == Space::circle) {
          return full ? ArcSet<CirclePoint>::full() : ArcSet<CirclePoint>::empty();
        }
        return full ? ArcSet<ProjPoint>::full() : ArcSet<ProjPoint>::empty();
      }
      if (kind != "arcs") {
        c.fail("unknown set kind '" + kind + "'", col);
      }
      if (space == Space::circle) {
        return parse_arcs<CirclePoint>(c, line, [&] { return CirclePoint(c.rational()); });
      }
      return parse_arcs<ProjPoint>(c, line, [&] { return c.proj_point(); });
    }

    enum class RoleKind { set, element };

    std::optional<RoleKind> role_kind(const std::string& role) {
      static const std::regex translator("a(0|[1-9][0-9]*)");
      if (role == "A" || role == "Y" || role == "U0" || role == "U1p" || role == "U1m"
          || role == "U2p" || role == "U2m") {
        return RoleKind::set;
      }
      if (role == "a" || role == "f1" || role == "f2" || std::regex_match(role, translator)) {
        return RoleKind::element;
      }
      return std::nullopt;
    }

    bool is_translator(const std::string& role) {
      return role.size() >= 2 && role[0] == 'a';
    }

    void validate_roles(const CertificateDocument& doc) {
      std::set<std::string> bound;
      for (auto const& [role, name] : doc.bindings) {
        bound.insert(role);
      }
      std::vector<std::string> required;
      if (doc.condition == Condition::iv) {
        required = {"f1", "f2", "U0", "U1p", "U1m", "U2p", "U2m"};
      } else {
        required = {"A", "Y", "a"};
        std::size_t n = doc.condition == Condition::ii ? 3 : doc.translator_count();
        if (doc.condition == Condition::iii && n < 3) {
          throw semantic_error("condition iii needs at least three translators a0, a1, a2");
        }
        for (std::size_t i = 0; i < n; ++i) {
          required.push_back("a" + std::to_string(i));
        }
      }
      for (auto const& r : required) {
        if (!bound.contains(r)) {
          throw semantic_error("role " + r + " is not bound (condition "
                               + std::string(to_string(doc.condition)) + ")");
        }
      }
      std::set<std::string> allowed(required.begin(), required.end());
      for (auto const& r : bound) {
        if (!allowed.contains(r)) {
          throw semantic_error("role " + r + " is not used by condition "
                               + std::string(to_string(doc.condition)));
        }
      }
    }

    template <typename T, typename V>
    const T& lookup(const std::vector<std::pair<std::string, V>>& items, const std::string& name) {
      for (auto const& [n, v] : items) {
        if (n == name) {
          return std::get<T>(v);
        }
      }
      throw semantic_error("unknown name '" + name + "'");
    }

    template <ActionContext C>
    AnyCertificate build(const CertificateDocument& doc) {
      using Element = typename C::Element;
      using Set     = ArcSet<typename C::Point>;
      std::map<std::string, std::string> role;
      for (auto const& [r, n] : doc.bindings) {
        role[r] = n;
      }
      auto element = [&](const std::string& r) -> const Element& {
        return lookup<Element>(doc.elements, role.at(r));
      };
      auto set = [&](const std::string& r) -> const Set& {
        return lookup<Set>(doc.sets, role.at(r));
      };
      switch (doc.condition) {
        case Condition::ii:
          return CondII<C>{set("A"), set("Y"), element("a"),
                           {element("a0"), element("a1"), element("a2")}};
        case Condition::iii: {
          CondIII<C> c{set("A"), set("Y"), element("a"), {}};
          for (std::size_t i = 0; i < doc.translator_count(); ++i) {
            c.translators.push_back(element("a" + std::to_string(i)));
          }
          return c;
        }
        default:
          return CondIV<C>{element("f1"), element("f2"), set("U0"), set("U1p"),
                           set("U1m"),    set("U2p"),    set("U2m")};
      }
    }

    template <ActionContext C>
    CertificateDocument skeleton(Condition cond) {
      CertificateDocument d;
      d.space     = std::is_same_v<C, CircleAction> ? Space::circle : Space::projective;
      d.condition = cond;
      return d;
    }

    void bind_element(CertificateDocument& d, const std::string& role,
                      CertificateDocument::ElementValue v) {
      d.elements.emplace_back(role, std::move(v));
      d.bindings.emplace_back(role, role);
    }
    void bind_set(CertificateDocument& d, const std::string& role, CertificateDocument::SetValue v) {
      d.sets.emplace_back(role, std::move(v));
      d.bindings.emplace_back(role, role);
    }

    template <ActionContext C, typename Translators>
    CertificateDocument translates_document(Condition cond, const ArcSet<typename C::Point>& A,
                                            const ArcSet<typename C::Point>& Y,
                                            const typename C::Element& a, const Translators& t) {
      auto d = skeleton<C>(cond);
      bind_set(d, "A", A);
      bind_set(d, "Y", Y);
      bind_element(d, "a", a);
      for (std::size_t i = 0; i < t.size(); ++i) {
        bind_element(d, "a" + std::to_string(i), t[i]);
      }
      return d;
    }

    template <ActionContext C>
    CertificateDocument schottky_document(const CondIV<C>& c) {
      auto d = skeleton<C>(Condition::iv);
      bind_element(d, "f1", c.f1);
      bind_element(d, "f2", c.f2);
      bind_set(d, "U0", c.U0);
      bind_set(d, "U1p", c.U1p);
      bind_set(d, "U1m", c.U1m);
      bind_set(d, "U2p", c.U2p);
      bind_set(d, "U2m", c.U2m);
      return d;
    }

  }  // namespace

  std::string_view to_string(Space s) {
    return s == Space::circle ? "circle" : "projective";
  }

  std::string_view to_string(Condition c) {
    switch (c) {
      case Condition::ii:
        return "ii";
      case Condition::iii:
        return "iii";
      default:
        return "iv";
    }
  }

  std::size_t CertificateDocument::translator_count() const {
    std::size_t n = 0;
    for (auto const& [role, name] : bindings) {
      if (is_translator(role)) {
        ++n;
      }
    }
    return n;
  }

  std::vector<std::string> CertificateDocument::warnings() const {
    std::vector<std::string> out;
    for (auto const& [name, v] : elements) {
      if (auto const* m = std::get_if<Matrix2>(&v); m && !m->is_special()) {
        out.push_back("element " + name + " has determinant " + m->det().str()
                      + " (not 1); accepted as orientation preserving");
      }
    }
    return out;
  }

  CertificateDocument parse_certificate(std::string_view text) {
    CertificateDocument        doc;
    bool                       have_space = false, have_condition = false;
    std::set<std::string>      names, roles;
    std::map<std::string, RoleKind> name_kind;
    std::size_t                line_no = 0;

    while (!text.empty()) {
      auto nl   = text.find('\n');
      auto line = text.substr(0, nl);
      text      = nl == std::string_view::npos ? std::string_view() : text.substr(nl + 1);
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      Cursor c(line, line_no);
      if (c.at_end()) {
        continue;
      }
      auto col       = (c.skip_ws(), c.column());
      auto directive = c.word("a directive");
      if (directive != "space" && !have_space) {
        throw semantic_error("line " + std::to_string(line_no)
                             + ": the first directive must be 'space'");
      }
      if (directive == "space") {
        if (have_space) {
          throw semantic_error("line " + std::to_string(line_no) + ": 'space' given twice");
        }
        auto s_col = (c.skip_ws(), c.column());
        auto s     = c.word("circle or projective");
        if (s == "circle") {
          doc.space = Space::circle;
        } else if (s == "projective") {
          doc.space = Space::projective;
        } else {
          c.fail("unknown space '" + s + "'", s_col);
        }
        have_space = true;
      } else if (directive == "element" || directive == "set") {
        auto name = c.word("a name");
        if (!names.insert(name).second) {
          throw semantic_error("line " + std::to_string(line_no) + ": name '" + name
                               + "' defined twice");
        }
        if (directive == "element") {
          doc.elements.emplace_back(name, parse_element(c, doc.space, line_no));
          name_kind[name] = RoleKind::element;
        } else {
          doc.sets.emplace_back(name, parse_set(c, doc.space, line_no));
          name_kind[name] = RoleKind::set;
        }
      } else if (directive == "condition") {
        if (have_condition) {
          throw semantic_error("line " + std::to_string(line_no) + ": 'condition' given twice");
        }
        auto k_col = (c.skip_ws(), c.column());
        auto k     = c.word("ii, iii or iv");
        if (k == "ii") {
          doc.condition = Condition::ii;
        } else if (k == "iii") {
          doc.condition = Condition::iii;
        } else if (k == "iv") {
          doc.condition = Condition::iv;
        } else {
          c.fail("unknown condition '" + k + "'", k_col);
        }
        have_condition = true;
      } else if (directive == "bind") {
        auto r_col = (c.skip_ws(), c.column());
        auto role  = c.word("a role");
        auto name  = c.word("a name");
        auto kind  = role_kind(role);
        if (!kind) {
          c.fail("unknown role '" + role + "'", r_col);
        }
        if (!roles.insert(role).second) {
          throw semantic_error("line " + std::to_string(line_no) + ": role " + role
                               + " bound twice");
        }
        auto it = name_kind.find(name);
        if (it == name_kind.end()) {
          throw semantic_error("line " + std::to_string(line_no) + ": unknown name '" + name
                               + "' (define it before binding)");
        }
        if (it->second != *kind) {
          throw semantic_error("line " + std::to_string(line_no) + ": role " + role
                               + " needs " + (*kind == RoleKind::set ? "a set" : "an element")
                               + ", '" + name + "' is not one");
        }
        doc.bindings.emplace_back(role, name);
      } else {
        c.fail("unknown directive '" + directive + "'", col);
      }
      c.expect_end();
    }
    if (!have_space) {
      throw semantic_error("missing 'space' directive");
    }
    if (!have_condition) {
      throw semantic_error("missing 'condition' directive");
    }
    validate_roles(doc);
    return doc;
  }

  std::string format_certificate(const CertificateDocument& doc) {
    std::string out = "space " + std::string(to_string(doc.space)) + "\n";
    for (auto const& [name, v] : doc.elements) {
      out += "element " + name + " "
             + std::visit([](auto const& e) { return e.str(); }, v) + "\n";
    }
    for (auto const& [name, v] : doc.sets) {
      auto body = std::visit([](auto const& s) { return s.str(); }, v);
      out += "set " + name + " "
             + (body == "full" || body == "empty" ? body : "arcs " + body) + "\n";
    }
    out += "condition " + std::string(to_string(doc.condition)) + "\n";
    for (auto const& [role, name] : doc.bindings) {
      out += "bind " + role + " " + name + "\n";
    }
    return out;
  }

  AnyCertificate to_certificate(const CertificateDocument& doc) {
    if (doc.space == Space::circle) {
      return build<CircleAction>(doc);
    }
    return build<ProjectiveAction>(doc);
  }

  CertificateDocument to_document(const CondII<CircleAction>& c) {
    return translates_document<CircleAction>(Condition::ii, c.A, c.Y, c.a, c.translators);
  }
  CertificateDocument to_document(const CondIII<CircleAction>& c) {
    return translates_document<CircleAction>(Condition::iii, c.A, c.Y, c.a, c.translators);
  }
  CertificateDocument to_document(const CondIV<CircleAction>& c) {
    return schottky_document(c);
  }
  CertificateDocument to_document(const CondII<ProjectiveAction>& c) {
    return translates_document<ProjectiveAction>(Condition::ii, c.A, c.Y, c.a, c.translators);
  }
  CertificateDocument to_document(const CondIII<ProjectiveAction>& c) {
    return translates_document<ProjectiveAction>(Condition::iii, c.A, c.Y, c.a, c.translators);
  }
  CertificateDocument to_document(const CondIV<ProjectiveAction>& c) {
    return schottky_document(c);
  }

}  // namespace pingpong
