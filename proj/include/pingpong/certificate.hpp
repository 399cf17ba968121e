// Certificates for the three ping-pong conditions, their verifiers, and the
// constructive transformations between them.

#ifndef PINGPONG_CERTIFICATE_HPP_
#define PINGPONG_CERTIFICATE_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pingpong/action.hpp"
#include "pingpong/arcset.hpp"
#include "pingpong/errors.hpp"
#include "pingpong/report.hpp"

namespace pingpong {

  //! Condition (ii): Y = A u aA, three disjoint translates a0A, a1A, a2A,
  //! and Y invariant under a, a0, a1, a2.
  template <ActionContext C>
  struct CondII {
    using Element = typename C::Element;
    using Set     = ArcSet<typename C::Point>;

    Set                    A;
    Set                    Y;
    Element                a;
    std::array<Element, 3> translators;
  };

  //! Condition (iii) for one fixed n >= 3: as (ii) with n disjoint
  //! translates a0A, ..., a_{n-1}A.
  template <ActionContext C>
  struct CondIII {
    using Element = typename C::Element;
    using Set     = ArcSet<typename C::Point>;

    Set                  A;
    Set                  Y;
    Element              a;
    std::vector<Element> translators;

    std::size_t n() const noexcept {
      return translators.size();
    }
  };

  //! Condition (iv): five disjoint nonempty sets with the attracting
  //! inclusions of a quasi-Schottky pair f1, f2.
  template <ActionContext C>
  struct CondIV {
    using Element = typename C::Element;
    using Set     = ArcSet<typename C::Point>;

    Element f1;
    Element f2;
    Set     U0;
    Set     U1p;
    Set     U1m;
    Set     U2p;
    Set     U2m;
  };

  namespace detail {
    inline std::string translator_name(std::size_t i) {
      return "a" + std::to_string(i);
    }

    template <typename Set>
    std::string difference_witness(const Set& lhs, const Set& rhs,
                                   const std::string& lhs_name,
                                   const std::string& rhs_name) {
      return lhs_name + " minus " + rhs_name + " = " + lhs.minus(rhs).str() + "; "
             + rhs_name + " minus " + lhs_name + " = " + rhs.minus(lhs).str();
    }

    template <ActionContext C>
    void check_invariance(Report& r, const typename C::Element& h,
                          const std::string& name,
                          const ArcSet<typename C::Point>& Y) {
      auto hY = C::image(h, Y);
      bool ok = hY == Y;
      r.add(name + "Y = Y", ok,
            ok ? "" : difference_witness(hY, Y, name + "Y", "Y"));
    }

    template <ActionContext C>
    Report verify_translates(std::string title,
                             const ArcSet<typename C::Point>& A,
                             const ArcSet<typename C::Point>& Y,
                             const typename C::Element& a,
                             std::span<const typename C::Element> translators) {
      Report r(std::move(title));
      r.add("A nonempty", !A.is_empty(), "A = empty");
      r.add("A subset of Y", A.is_subset_of(Y), "A minus Y = " + A.minus(Y).str());
      auto cover = A.unite(C::image(a, A));
      bool cover_ok = cover == Y;
      r.add("Y = A u aA", cover_ok,
            cover_ok ? "" : difference_witness(Y, cover, "Y", "A u aA"));

      std::vector<ArcSet<typename C::Point>> translates;
      translates.reserve(translators.size());
      for (auto const& t : translators) {
        translates.push_back(C::image(t, A));
      }
      for (std::size_t i = 0; i < translates.size(); ++i) {
        for (std::size_t j = i + 1; j < translates.size(); ++j) {
          auto meet = translates[i].intersect(translates[j]);
          r.add(translator_name(i) + "A disjoint from " + translator_name(j) + "A",
                meet.is_empty(),
                translator_name(i) + "A n " + translator_name(j) + "A = " + meet.str());
        }
      }
      check_invariance<C>(r, a, "a", Y);
      for (std::size_t i = 0; i < translators.size(); ++i) {
        check_invariance<C>(r, translators[i], translator_name(i), Y);
      }
      return r;
    }

    template <typename Cert>
    void require_verified(const Cert& cert, const char* operation) {
      auto r = verify(cert);
      if (!r.passed()) {
        throw input_error(std::string(operation)
                          + " requires a verified certificate; first failure: "
                          + r.failures().front().name + " (" + r.failures().front().witness
                          + ")");
      }
    }
  }  // namespace detail

  //! Evaluates every clause of Condition (ii) exactly. Invariance is set
  //! equality hY = Y.
  template <ActionContext C>
  Report verify(const CondII<C>& cert) {
    return detail::verify_translates<C>(
        "condition ii on " + std::string(C::name), cert.A, cert.Y, cert.a,
        std::span<const typename C::Element>(cert.translators));
  }

  template <ActionContext C>
  Report verify(const CondIII<C>& cert) {
    auto r = detail::verify_translates<C>("condition iii (n=" + std::to_string(cert.n())
                                              + ") on " + std::string(C::name),
                                          cert.A, cert.Y, cert.a, cert.translators);
    Report out(r.title());
    out.add("n >= 3", cert.n() >= 3, "n = " + std::to_string(cert.n()));
    out.append(r);
    return out;
  }

  //! Nonemptiness, pairwise disjointness, and each single-set inclusion
  //! behind the four attracting inclusions of Condition (iv).
  template <ActionContext C>
  Report verify(const CondIV<C>& cert) {
    using Set = ArcSet<typename C::Point>;
    Report r("condition iv on " + std::string(C::name));
    struct Named {
      const char* name;
      const Set*  set;
    };
    std::array<Named, 5> sets{{{"U0", &cert.U0},
                               {"U1p", &cert.U1p},
                               {"U1m", &cert.U1m},
                               {"U2p", &cert.U2p},
                               {"U2m", &cert.U2m}}};
    for (auto const& s : sets) {
      r.add(std::string(s.name) + " nonempty", !s.set->is_empty(),
            std::string(s.name) + " = empty");
    }
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = i + 1; j < sets.size(); ++j) {
        auto meet = sets[i].set->intersect(*sets[j].set);
        r.add(std::string(sets[i].name) + " disjoint from " + sets[j].name,
              meet.is_empty(),
              std::string(sets[i].name) + " n " + sets[j].name + " = " + meet.str());
      }
    }
    auto f1inv = C::invert(cert.f1);
    auto f2inv = C::invert(cert.f2);
    auto attract = [&](const typename C::Element& h, const char* hname,
                       std::array<int, 4> sources, int target) {
      for (int s : sources) {
        auto img = C::image(h, *sets[s].set);
        auto out = img.minus(*sets[target].set);
        r.add(std::string(hname) + "(" + sets[s].name + ") in " + sets[target].name,
              out.is_empty(),
              std::string(hname) + "(" + sets[s].name + ") minus " + sets[target].name
                  + " = " + out.str());
      }
    };
    // Indices into `sets`: 0 U0, 1 U1p, 2 U1m, 3 U2p, 4 U2m.
    attract(cert.f1, "f1", {0, 1, 3, 4}, 1);
    attract(f1inv, "f1^-1", {0, 2, 3, 4}, 2);
    attract(cert.f2, "f2", {0, 3, 1, 2}, 3);
    attract(f2inv, "f2^-1", {0, 4, 1, 2}, 4);
    return r;
  }

  //! The (ii) certificate formed by translates i, j, l of a (iii) certificate.
  template <ActionContext C>
  CondII<C> as_cond_ii(const CondIII<C>& cert, std::size_t i = 0, std::size_t j = 1,
                       std::size_t l = 2) {
    if (std::max({i, j, l}) >= cert.n() || i == j || j == l || i == l) {
      throw input_error("as_cond_ii: need three distinct translate indices below n");
    }
    return CondII<C>{cert.A, cert.Y, cert.a,
                     {cert.translators[i], cert.translators[j], cert.translators[l]}};
  }

  template <ActionContext C>
  CondIII<C> as_cond_iii(const CondII<C>& cert) {
    return CondIII<C>{cert.A, cert.Y, cert.a,
                      {cert.translators.begin(), cert.translators.end()}};
  }

  //! Replaces (a0, a1, a2) by (1, a0^-1 a1, a0^-1 a2). Throws `input_error`
  //! for a certificate that does not verify.
  template <ActionContext C>
  CondII<C> normalize_a0(const CondII<C>& cert) {
    detail::require_verified(cert, "normalize_a0");
    auto const& t     = cert.translators;
    auto        a0inv = C::invert(t[0]);
    return CondII<C>{cert.A, cert.Y, cert.a,
                     {C::identity(), C::compose(a0inv, t[1]), C::compose(a0inv, t[2])}};
  }

  //! Checks, for every l and every i != j, that
  //!   a_l a^-1 a_j^-1 (a_i A) and a_l a a_j^-1 (a_i A) lie in a_l A.
  //! These hold for every verified certificate, so a failure points at a bug
  //! in the set algebra or the action.
  template <ActionContext C>
  Report inequality_lemma_check(const CondIII<C>& cert) {
    detail::require_verified(cert, "inequality_lemma_check");
    using Set     = ArcSet<typename C::Point>;
    auto const& t = cert.translators;
    auto const  n = cert.n();
    auto const  ainv = C::invert(cert.a);
    std::vector<Set> translate(n);
    std::vector<typename C::Element> inv;
    for (std::size_t i = 0; i < n; ++i) {
      translate[i] = C::image(t[i], cert.A);
      inv.push_back(C::invert(t[i]));
    }
    Report r("inequality lemma (n=" + std::to_string(n) + ") on " + std::string(C::name));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) {
          continue;
        }
        auto base  = C::image(inv[j], translate[i]);
        auto minus = C::image(ainv, base);
        auto plus  = C::image(cert.a, base);
        for (std::size_t l = 0; l < n; ++l) {
          auto suffix = " a" + std::to_string(j) + "^-1 (a" + std::to_string(i) + "A) in a"
                        + std::to_string(l) + "A";
          auto lhs_m  = C::image(t[l], minus).minus(translate[l]);
          auto lhs_p  = C::image(t[l], plus).minus(translate[l]);
          r.add("a" + std::to_string(l) + " a^-1" + suffix, lhs_m.is_empty(),
                "excess " + lhs_m.str());
          r.add("a" + std::to_string(l) + " a" + suffix, lhs_p.is_empty(),
                "excess " + lhs_p.str());
        }
      }
    }
    return r;
  }

  //! One step of the (ii) => (iii) construction: with c = a_{n-1} a a_{n-1}^-1
  //! the translators become a0, ..., a_{n-2}, c a0, c a1. A and Y are kept.
  template <ActionContext C>
  CondIII<C> amplify(const CondIII<C>& cert) {
    detail::require_verified(cert, "amplify");
    auto const& t    = cert.translators;
    auto const& last = t.back();
    auto c = C::compose(C::compose(last, cert.a), C::invert(last));
    CondIII<C> out{cert.A, cert.Y, cert.a, {t.begin(), t.end() - 1}};
    out.translators.push_back(C::compose(c, t[0]));
    out.translators.push_back(C::compose(c, t[1]));
    return out;
  }

  //! The (iii) => (iv) construction from the first five translates:
  //! f1 = a1 a a2^-1, f2 = a3 a a4^-1, U0 = a0A, U1+- = a1A, a2A,
  //! U2+- = a3A, a4A.
  template <ActionContext C>
  CondIV<C> to_schottky(const CondIII<C>& cert) {
    if (cert.n() < 5) {
      throw input_error("to_schottky needs at least five translates, got n = "
                        + std::to_string(cert.n()));
    }
    detail::require_verified(cert, "to_schottky");
    auto const& t = cert.translators;
    auto pair = [&](std::size_t i, std::size_t j) {
      return C::compose(C::compose(t[i], cert.a), C::invert(t[j]));
    };
    return CondIV<C>{pair(1, 2),
                     pair(3, 4),
                     C::image(t[0], cert.A),
                     C::image(t[1], cert.A),
                     C::image(t[2], cert.A),
                     C::image(t[3], cert.A),
                     C::image(t[4], cert.A)};
  }

}  // namespace pingpong

#endif  // PINGPONG_CERTIFICATE_HPP_
