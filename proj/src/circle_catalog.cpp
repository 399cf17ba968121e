#include "pingpong/circle_catalog.hpp"

#include <optional>
#include <string>

#include "pingpong/word.hpp"

namespace pingpong::circle {

  namespace {
    void require(bool ok, const std::string& what) {
      if (!ok) {
        throw input_error(what);
      }
    }

    // x -> f(x + shift) + lift, built from f's breakpoints directly.
    PLHomeo shifted(const PLHomeo& f, const Rational& shift, const Rational& lift) {
      std::vector<PLHomeo::Breakpoint> pts;
      for (auto const& b : f.breakpoints()) {
        pts.push_back({CirclePoint(b.x.coordinate() - shift),
                       CirclePoint(b.y.coordinate() + lift)});
      }
      return PLHomeo::from_points(std::move(pts));
    }
  }  // namespace

  PLHomeo standard_a(long n) {
    require(n >= 3, "standard_a needs n >= 3, got " + std::to_string(n));
    return PLHomeo::from_points({{CirclePoint(0, 1), CirclePoint(1, n)},
                                 {CirclePoint(1, n), CirclePoint(0, 1)}});
  }

  PLHomeo closed_s0(long k) {
    require(k >= 2, "closed_s0 needs k >= 2, got " + std::to_string(k));
    long n = 2 * k + 1;
    return PLHomeo::from_points({{CirclePoint(0, 1), CirclePoint(0, 1)},
                                 {CirclePoint(2 * k, n), CirclePoint(1, n)}});
  }

  PLHomeo closed_s(long i, long k) {
    require(k >= 2 && 1 <= i && i <= k,
            "closed_s needs k >= 2 and 1 <= i <= k, got i = " + std::to_string(i)
                + ", k = " + std::to_string(k));
    long n = 2 * k + 1;
    return shifted(closed_s0(k), Rational(i - 1, n), Rational(i, n));
  }

  PLHomeo closed_t(long j, long k) {
    require(k >= 2 && 0 <= j && j <= k - 1,
            "closed_t needs k >= 2 and 0 <= j <= k-1, got j = " + std::to_string(j)
                + ", k = " + std::to_string(k));
    return shifted(closed_s0(k), Rational(-j, k), Rational(j, k));
  }

  PLHomeo bennett_b(long j, long k) {
    require(k >= 2 && 0 <= j && j <= 2 * k - 1,
            "bennett_b needs k >= 2 and 0 <= j <= 2k-1, got j = " + std::to_string(j)
                + ", k = " + std::to_string(k));
    Rational theta(j / 2, k);
    if (j % 2 == 1) {
      theta -= Rational(1, 2 * k + 1);
    }
    return rotation(theta);
  }

  Certificate standard_certificate(long n) {
    require(n >= 3, "standard certificate needs n >= 3, got " + std::to_string(n));
    Certificate c{ArcSet<CirclePoint>::arc(CirclePoint(0, 1), CirclePoint(1, n)),
                  ArcSet<CirclePoint>::full(),
                  standard_a(n),
                  {}};
    for (long i = 0; i < n; ++i) {
      c.translators.push_back(rotation(Rational(i, n)));
    }
    return c;
  }

  SunicExample sunic_certificate(long k) {
    require(k >= 2, "sunic certificate needs k >= 2, got " + std::to_string(k));
    auto       n = static_cast<std::size_t>(2 * k + 1);
    IndexPairs scheme;
    for (std::size_t i = 1; i <= static_cast<std::size_t>(k); ++i) {
      scheme.emplace_back(i, n - i);
    }
    return {standard_certificate(2 * k + 1), std::move(scheme)};
  }

  Certificate bennett_certificate(long k) {
    require(k >= 2, "bennett certificate needs k >= 2, got " + std::to_string(k));
    long        n = 2 * k + 1;
    Certificate c{ArcSet<CirclePoint>::arc(CirclePoint(0, 1), CirclePoint(1, n)),
                  ArcSet<CirclePoint>::full(),
                  standard_a(n),
                  {}};
    for (long j = 0; j < 2 * k; ++j) {
      c.translators.push_back(bennett_b(j, k));
    }
    return c;
  }

  IndexPairs bennett_scheme(long k) {
    IndexPairs out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
      out.emplace_back(2 * i, 2 * i + 1);
    }
    return out;
  }

  ArcSet<CirclePoint> partial_orbit_union(std::span<const PLHomeo>   gens,
                                          const ArcSet<CirclePoint>& A,
                                          std::size_t                max_len) {
    std::vector<PLHomeo> inverses;
    for (auto const& g : gens) {
      inverses.push_back(g.inverse());
    }
    struct Entry {
      std::optional<Letter> first;
      ArcSet<CirclePoint>   image;
    };
    auto               letters = alphabet(gens.size());
    std::vector<Entry> layer{{std::nullopt, A}};
    auto               total = A;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::vector<Entry> next;
      for (auto const& e : layer) {
        for (auto const& x : letters) {
          if (e.first && x.cancels(*e.first)) {
            continue;
          }
          auto const& h = x.inverse ? inverses[x.generator] : gens[x.generator];
          next.push_back({x, h.image(e.image)});
          total = total.unite(next.back().image);
        }
      }
      layer = std::move(next);
    }
    return total;
  }

}  // namespace pingpong::circle
