#include "pingpong/matrix2.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace pingpong {

  Matrix2 Matrix2::special(Rational m11, Rational m12, Rational m21, Rational m22) {
    Matrix2 m(std::move(m11), std::move(m12), std::move(m21), std::move(m22));
    if (!m.is_special()) {
      throw input_error("matrix " + m.str() + " has determinant " + m.det().str()
                        + ", expected 1");
    }
    return m;
  }

  Matrix2 Matrix2::positive(Rational m11, Rational m12, Rational m21, Rational m22) {
    Matrix2 m(std::move(m11), std::move(m12), std::move(m21), std::move(m22));
    if (m.det().sign() <= 0) {
      throw input_error("matrix " + m.str() + " has determinant " + m.det().str()
                        + ", expected a positive determinant");
    }
    return m;
  }

  Matrix2 Matrix2::inverse() const {
    auto d = det();
    if (d.is_zero()) {
      throw input_error("matrix " + str() + " is singular");
    }
    return Matrix2(e_[3] / d, -e_[1] / d, -e_[2] / d, e_[0] / d);
  }

  Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    auto const& x = a.e_;
    auto const& y = b.e_;
    return Matrix2(x[0] * y[0] + x[1] * y[2],
                   x[0] * y[1] + x[1] * y[3],
                   x[2] * y[0] + x[3] * y[2],
                   x[2] * y[1] + x[3] * y[3]);
  }

  ProjPoint Matrix2::operator()(const ProjPoint& p) const {
    if (det().sign() <= 0) {
      throw input_error("matrix " + str()
                        + " does not preserve the orientation of the projective line");
    }
    Rational x(mpq_class(p.x())), y(mpq_class(p.y()));
    return ProjPoint::from_vector(e_[0] * x + e_[1] * y, e_[2] * x + e_[3] * y);
  }

  ArcSet<ProjPoint> Matrix2::image(const ArcSet<ProjPoint>& s) const {
    return s.image(*this);
  }

  std::string Matrix2::str() const {
    return "mat [" + e_[0].str() + " " + e_[1].str() + "; " + e_[2].str() + " "
           + e_[3].str() + "]";
  }

  Matrix2 Matrix2::parse(std::string_view text) {
    std::string s(text);
    auto open  = s.find('[');
    auto close = s.rfind(']');
    auto head  = s.substr(0, open == std::string::npos ? 0 : open);
    std::istringstream head_in(head);
    std::string keyword, extra;
    head_in >> keyword;
    if (open == std::string::npos || close == std::string::npos || close < open
        || keyword != "mat" || (head_in >> extra)) {
      throw input_error("matrix must be written mat [a b; c d]");
    }
    for (char c : s.substr(close + 1)) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        throw input_error("unexpected text after matrix");
      }
    }
    auto body = s.substr(open + 1, close - open - 1);
    auto semi = body.find(';');
    if (semi == std::string::npos || body.find(';', semi + 1) != std::string::npos) {
      throw input_error("matrix must have two rows separated by ';'");
    }
    std::vector<Rational> entries;
    for (auto row : {body.substr(0, semi), body.substr(semi + 1)}) {
      std::istringstream in(row);
      std::string tok;
      int count = 0;
      while (in >> tok) {
        entries.push_back(Rational::parse(tok));
        ++count;
      }
      if (count != 2) {
        throw input_error("matrix rows must have two entries");
      }
    }
    return Matrix2(entries[0], entries[1], entries[2], entries[3]);
  }

}  // namespace pingpong
