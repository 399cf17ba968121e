// The line-oriented certificate file format.
//
//   # comment
//   space circle|projective
//   element <name> rot <q> | pl [(x,y),...] | mat [a b; c d]
//   set <name> arcs [p,q) ...       (projective endpoints are written p:q)
//   set <name> full|empty
//   condition ii|iii|iv
//   bind <role> <name>
//
// Roles: A, Y, a, a0..aN (conditions ii and iii), f1, f2, U0, U1p, U1m, U2p,
// U2m (condition iv). `space` must come first.

#ifndef PINGPONG_DOCUMENT_HPP_
#define PINGPONG_DOCUMENT_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pingpong/action.hpp"
#include "pingpong/certificate.hpp"

namespace pingpong {

  enum class Space { circle, projective };
  enum class Condition { ii, iii, iv };

  std::string_view to_string(Space s);
  std::string_view to_string(Condition c);

  struct CertificateDocument {
    using ElementValue = std::variant<PLHomeo, Matrix2>;
    using SetValue     = std::variant<ArcSet<CirclePoint>, ArcSet<ProjPoint>>;

    Space                                             space = Space::circle;
    std::vector<std::pair<std::string, ElementValue>> elements;
    std::vector<std::pair<std::string, SetValue>>     sets;
    Condition                                         condition = Condition::ii;
    // (role, name) in file order.
    std::vector<std::pair<std::string, std::string>> bindings;

    //! Number of translators a0..a_{n-1} bound (conditions ii and iii).
    std::size_t translator_count() const;
    //! One line per matrix whose determinant is positive but not 1.
    std::vector<std::string> warnings() const;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
  };

  //! Parses and validates a document. Throws `syntax_error` (with line and
  //! column) for text outside the grammar and `semantic_error` for unbound,
  //! duplicated or mistyped roles, unknown names and elements of the wrong
  //! space.
  CertificateDocument parse_certificate(std::string_view text);

  //! Canonical text of a document; `parse_certificate` reads it back to an
  //! equal document.
  std::string format_certificate(const CertificateDocument& doc);

  using AnyCertificate = std::variant<CondII<CircleAction>,
                                      CondIII<CircleAction>,
                                      CondIV<CircleAction>,
                                      CondII<ProjectiveAction>,
                                      CondIII<ProjectiveAction>,
                                      CondIV<ProjectiveAction>>;

  //! The typed certificate a validated document describes.
  AnyCertificate to_certificate(const CertificateDocument& doc);

  CertificateDocument to_document(const CondII<CircleAction>& cert);
  CertificateDocument to_document(const CondIII<CircleAction>& cert);
  CertificateDocument to_document(const CondIV<CircleAction>& cert);
  CertificateDocument to_document(const CondII<ProjectiveAction>& cert);
  CertificateDocument to_document(const CondIII<ProjectiveAction>& cert);
  CertificateDocument to_document(const CondIV<ProjectiveAction>& cert);

}  // namespace pingpong

#endif  // PINGPONG_DOCUMENT_HPP_
