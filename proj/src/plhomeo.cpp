#include "pingpong/plhomeo.hpp"

#include <algorithm>
#include <cctype>

namespace pingpong {

  namespace {
    using Breakpoint = PLHomeo::Breakpoint;

    bool by_x(Breakpoint const& a, Breakpoint const& b) {
      return a.x < b.x;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
      }
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
      }
      return s;
    }

    // Splits "(x,y),(x,y)" into coordinate pairs.
    std::vector<Breakpoint> parse_point_list(std::string_view body) {
      std::vector<Breakpoint> out;
      body = trim(body);
      while (!body.empty()) {
        if (body.front() != '(') {
          throw input_error("expected '(' in breakpoint list");
        }
        auto close = body.find(')');
        if (close == std::string_view::npos) {
          throw input_error("unterminated breakpoint '('");
        }
        auto inner = body.substr(1, close - 1);
        auto comma = inner.find(',');
        if (comma == std::string_view::npos) {
          throw input_error("breakpoint must be (x,y)");
        }
        out.push_back({CirclePoint(Rational::parse(trim(inner.substr(0, comma)))),
                       CirclePoint(Rational::parse(trim(inner.substr(comma + 1))))});
        body = trim(body.substr(close + 1));
        if (!body.empty()) {
          if (body.front() != ',') {
            throw input_error("expected ',' between breakpoints");
          }
          body = trim(body.substr(1));
          if (body.empty()) {
            throw input_error("trailing ',' in breakpoint list");
          }
        }
      }
      return out;
    }
  }  // namespace

  Rational cyclic_gap(const Rational& a, const Rational& b) {
    Rational d = (b - a).frac();
    return d.is_zero() ? Rational(1) : d;
  }

  PLHomeo::PLHomeo() : PLHomeo(std::vector<Breakpoint>{{CirclePoint(), CirclePoint()}}) {}

  PLHomeo::PLHomeo(std::vector<Breakpoint> canonical) : points_(std::move(canonical)) {
    auto m = points_.size();
    slopes_.reserve(m);
    if (m == 1) {
      slopes_.emplace_back(1);
      return;
    }
    for (std::size_t i = 0; i < m; ++i) {
      auto const& p = points_[i];
      auto const& q = points_[(i + 1) % m];
      slopes_.push_back(cyclic_gap(p.y.coordinate(), q.y.coordinate())
                        / cyclic_gap(p.x.coordinate(), q.x.coordinate()));
    }
  }

  PLHomeo PLHomeo::canonical(std::vector<Breakpoint> sorted) {
    auto m = sorted.size();
    auto rotation_by = [&] {
      return PLHomeo::rotation(sorted[0].y.coordinate() - sorted[0].x.coordinate());
    };
    if (m == 1) {
      return rotation_by();
    }
    std::vector<Rational> slope(m);
    for (std::size_t i = 0; i < m; ++i) {
      auto const& p = sorted[i];
      auto const& q = sorted[(i + 1) % m];
      slope[i] = cyclic_gap(p.y.coordinate(), q.y.coordinate())
                 / cyclic_gap(p.x.coordinate(), q.x.coordinate());
    }
    std::vector<Breakpoint> kept;
    for (std::size_t i = 0; i < m; ++i) {
      if (slope[(i + m - 1) % m] != slope[i]) {
        kept.push_back(sorted[i]);
      }
    }
    if (kept.empty()) {
      return rotation_by();
    }
    return PLHomeo(std::move(kept));
  }

  PLHomeo PLHomeo::from_points(std::vector<Breakpoint> points) {
    if (points.empty()) {
      throw input_error("piecewise-linear map needs at least one breakpoint");
    }
    std::sort(points.begin(), points.end(), by_x);
    auto m = points.size();
    for (std::size_t i = 0; i + 1 < m; ++i) {
      if (points[i].x == points[i + 1].x) {
        throw input_error("repeated breakpoint x = " + points[i].x.str());
      }
    }
    if (m >= 2) {
      Rational turn;
      for (std::size_t i = 0; i < m; ++i) {
        auto const& a = points[i].y.coordinate();
        auto const& b = points[(i + 1) % m].y.coordinate();
        if (a == b) {
          throw input_error("repeated breakpoint value y = " + a.str());
        }
        turn += cyclic_gap(a, b);
      }
      if (turn != Rational(1)) {
        throw input_error(
            "breakpoint values are not in the cyclic order of their arguments");
      }
    }
    return canonical(std::move(points));
  }

  PLHomeo PLHomeo::rotation(const Rational& theta) {
    return PLHomeo(std::vector<Breakpoint>{{CirclePoint(), CirclePoint(theta)}});
  }

  std::size_t PLHomeo::piece_of(const CirclePoint& p) const {
    auto it = std::upper_bound(points_.begin(), points_.end(), p,
                               [](CirclePoint const& v, Breakpoint const& b) { return v < b.x; });
    if (it == points_.begin()) {
      return points_.size() - 1;
    }
    return static_cast<std::size_t>(it - points_.begin()) - 1;
  }

  CirclePoint PLHomeo::operator()(const CirclePoint& p) const {
    auto i      = piece_of(p);
    auto offset = (p.coordinate() - points_[i].x.coordinate()).frac();
    return CirclePoint(points_[i].y.coordinate() + offset * slopes_[i]);
  }

  CirclePoint PLHomeo::preimage(const CirclePoint& q) const {
    auto m = points_.size();
    for (std::size_t i = 0; i < m; ++i) {
      auto const& y0     = points_[i].y.coordinate();
      auto        offset = (q.coordinate() - y0).frac();
      auto        width  = m == 1 ? Rational(1) : cyclic_gap(y0, points_[(i + 1) % m].y.coordinate());
      if (offset < width) {
        return CirclePoint(points_[i].x.coordinate() + offset / slopes_[i]);
      }
    }
    // The image pieces tile the circle.
    throw std::logic_error("PLHomeo::preimage: value not covered");
  }

  PLHomeo PLHomeo::inverse() const {
    std::vector<Breakpoint> swapped;
    swapped.reserve(points_.size());
    for (auto const& b : points_) {
      swapped.push_back({b.y, b.x});
    }
    std::sort(swapped.begin(), swapped.end(), by_x);
    return canonical(std::move(swapped));
  }

  PLHomeo operator*(const PLHomeo& f, const PLHomeo& g) {
    std::vector<Breakpoint> pts;
    pts.reserve(f.points_.size() + g.points_.size());
    for (auto const& b : g.points_) {
      pts.push_back({b.x, f(b.y)});
    }
    for (auto const& b : f.points_) {
      pts.push_back({g.preimage(b.x), b.y});
    }
    std::sort(pts.begin(), pts.end(), by_x);
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](Breakpoint const& a, Breakpoint const& b) { return a.x == b.x; }),
              pts.end());
    return PLHomeo::canonical(std::move(pts));
  }

  Rational PLHomeo::lift(const Rational& x) const {
    Rational whole(x.floor(), mpz_class(1));
    auto     t  = x - whole;
    auto     f0 = (*this)(CirclePoint()).coordinate();
    auto     ft = (*this)(CirclePoint(t)).coordinate();
    return whole + f0 + (ft - f0).frac();
  }

  Rational PLHomeo::lift_inverse(const Rational& y) const {
    auto c = preimage(CirclePoint(y)).coordinate();
    return c + (y - lift(c));
  }

  std::string PLHomeo::str() const {
    if (is_rotation()) {
      return "rot " + points_[0].y.str();
    }
    std::string out = "pl [";
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (i > 0) {
        out += ',';
      }
      out += "(" + points_[i].x.str() + "," + points_[i].y.str() + ")";
    }
    return out + "]";
  }

  PLHomeo PLHomeo::parse(std::string_view text) {
    text = trim(text);
    if (text.starts_with("rot") && text.size() > 3
        && std::isspace(static_cast<unsigned char>(text[3]))) {
      return rotation(Rational::parse(trim(text.substr(3))));
    }
    if (text.starts_with("pl")) {
      auto body = trim(text.substr(2));
      if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
        throw input_error("pl map must be written pl [(x0,y0),...]");
      }
      return from_points(parse_point_list(body.substr(1, body.size() - 2)));
    }
    throw input_error("expected 'rot q' or 'pl [...]'");
  }

}  // namespace pingpong
