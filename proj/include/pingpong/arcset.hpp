// Half-open arcs and the canonical Boolean algebra of finite arc unions on a
// cyclically ordered domain.

#ifndef PINGPONG_ARCSET_HPP_
#define PINGPONG_ARCSET_HPP_

#include <algorithm>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pingpong/cyclic.hpp"
#include "pingpong/errors.hpp"

namespace pingpong {

  //! A single arc: empty, full, or the proper half-open arc [from, to).
  //!
  //! A proper arc contains the points met walking positively from `from`
  //! (inclusive) to `to` (exclusive). `from == to` is rejected since it could
  //! mean either empty or full.
  template <CyclicPoint P>
  class Arc {
   public:
    enum class Kind { empty, full, proper };

    static Arc empty() {
      return Arc(Kind::empty, P::cut(), P::cut());
    }
    static Arc full() {
      return Arc(Kind::full, P::cut(), P::cut());
    }
    static Arc proper(P from, P to) {
      if (from == to) {
        throw input_error("arc [" + from.str() + "," + to.right_str()
                          + ") has equal endpoints; use empty or full");
      }
      return Arc(Kind::proper, std::move(from), std::move(to));
    }

    Kind kind() const noexcept {
      return kind_;
    }
    const P& from() const noexcept {
      return from_;
    }
    const P& to() const noexcept {
      return to_;
    }
    //! True for a proper arc that passes through the cut point.
    bool wraps() const {
      return kind_ == Kind::proper && to_ < from_ && !(to_ == P::cut());
    }

    friend bool operator==(const Arc&, const Arc&) = default;

    std::string str() const {
      switch (kind_) {
        case Kind::empty:
          return "empty";
        case Kind::full:
          return "full";
        default:
          return "[" + from_.str() + "," + to_.right_str() + ")";
      }
    }

   private:
    Arc(Kind k, P from, P to)
        : kind_(k), from_(std::move(from)), to_(std::move(to)) {}

    Kind kind_;
    P    from_;
    P    to_;
  };

  //! Finite union of half-open arcs, kept in canonical form.
  //!
  //! Internally the set is a sorted list of disjoint, non-abutting linear
  //! pieces [lo, hi) of the domain cut open at `P::cut()`, where a missing
  //! `hi` means "up to the cut from below". This list is unique for every
  //! subset, so `==` is set equality. `arcs()` presents the same set as
  //! cyclic arcs, merging the first and last piece across the cut.
  template <CyclicPoint P>
  class ArcSet {
   public:
    using point_type = P;
    using arc_type   = Arc<P>;

    ArcSet() = default;
    explicit ArcSet(const Arc<P>& arc) {
      add_arc(arc, pieces_);
      merge_sorted(pieces_);
    }

    static ArcSet empty() {
      return ArcSet();
    }
    static ArcSet full() {
      return ArcSet(Arc<P>::full());
    }
    static ArcSet arc(P from, P to) {
      return ArcSet(Arc<P>::proper(std::move(from), std::move(to)));
    }

    //! Canonical union of arbitrary (possibly overlapping) arcs.
    static ArcSet normalize(std::span<const Arc<P>> raw) {
      ArcSet s;
      for (auto const& a : raw) {
        add_arc(a, s.pieces_);
      }
      merge_sorted(s.pieces_);
      return s;
    }
    static ArcSet normalize(std::initializer_list<Arc<P>> raw) {
      return normalize(std::span<const Arc<P>>(raw.begin(), raw.size()));
    }

    bool is_empty() const noexcept {
      return pieces_.empty();
    }
    bool is_full() const {
      return pieces_.size() == 1 && pieces_[0].lo == P::cut()
             && !pieces_[0].hi;
    }

    //! Canonical cyclic arcs, left endpoints increasing in the cut order.
    //! At most one arc wraps across the cut; it is listed last.
    std::vector<Arc<P>> arcs() const {
      std::vector<Arc<P>> out;
      if (is_full()) {
        out.push_back(Arc<P>::full());
        return out;
      }
      std::size_t first = 0, last = pieces_.size();
      bool wrap = pieces_.size() >= 2 && pieces_.front().lo == P::cut()
                  && !pieces_.back().hi;
      if (wrap) {
        ++first;
        --last;
      }
      for (std::size_t i = first; i < last; ++i) {
        out.push_back(Arc<P>::proper(pieces_[i].lo, upper(pieces_[i])));
      }
      if (wrap) {
        out.push_back(
            Arc<P>::proper(pieces_.back().lo, *pieces_.front().hi));
      }
      return out;
    }

    bool contains(const P& p) const {
      for (auto const& piece : pieces_) {
        if (piece.lo <= p && (!piece.hi || p < *piece.hi)) {
          return true;
        }
      }
      return false;
    }

    ArcSet complement() const {
      ArcSet out;
      P      cursor = P::cut();
      bool   open   = true;  // cursor still below the end of the domain
      for (auto const& piece : pieces_) {
        if (cursor < piece.lo) {
          out.pieces_.push_back({cursor, piece.lo});
        }
        if (!piece.hi) {
          open = false;
          break;
        }
        cursor = *piece.hi;
      }
      if (open) {
        out.pieces_.push_back({cursor, std::nullopt});
      }
      return out;
    }

    ArcSet unite(const ArcSet& other) const {
      ArcSet out;
      out.pieces_.reserve(pieces_.size() + other.pieces_.size());
      std::merge(pieces_.begin(),
                 pieces_.end(),
                 other.pieces_.begin(),
                 other.pieces_.end(),
                 std::back_inserter(out.pieces_),
                 [](Piece const& x, Piece const& y) { return x.lo < y.lo; });
      merge_sorted(out.pieces_);
      return out;
    }

    ArcSet intersect(const ArcSet& other) const {
      ArcSet      out;
      std::size_t i = 0, j = 0;
      while (i < pieces_.size() && j < other.pieces_.size()) {
        auto const& x  = pieces_[i];
        auto const& y  = other.pieces_[j];
        P const&    lo = std::max(x.lo, y.lo);
        // The piece that ends first is consumed.
        bool x_first = end_less(x.hi, y.hi);
        auto const& hi = x_first ? x.hi : y.hi;
        if (!hi || lo < *hi) {
          out.pieces_.push_back({lo, hi});
        }
        if (x_first) {
          ++i;
        } else {
          ++j;
        }
      }
      return out;
    }

    ArcSet minus(const ArcSet& other) const {
      return intersect(other.complement());
    }

    bool is_subset_of(const ArcSet& other) const {
      return minus(other).is_empty();
    }
    bool is_disjoint_from(const ArcSet& other) const {
      return intersect(other).is_empty();
    }

    //! Image under an orientation-preserving bijection `h : P -> P`.
    //! Each proper arc [p, q) maps to [h(p), h(q)).
    template <typename Map>
    ArcSet image(Map&& h) const {
      if (is_full()) {
        return full();
      }
      std::vector<Arc<P>> mapped;
      for (auto const& a : arcs()) {
        mapped.push_back(Arc<P>::proper(h(a.from()), h(a.to())));
      }
      return normalize(mapped);
    }

    friend bool operator==(const ArcSet& a, const ArcSet& b) {
      return a.pieces_ == b.pieces_;
    }

    friend ArcSet operator|(const ArcSet& a, const ArcSet& b) {
      return a.unite(b);
    }
    friend ArcSet operator&(const ArcSet& a, const ArcSet& b) {
      return a.intersect(b);
    }
    friend ArcSet operator~(const ArcSet& a) {
      return a.complement();
    }

    //! `empty`, `full`, or space-separated arcs such as `[0,1/7) [1/3,10/21)`.
    std::string str() const {
      if (is_empty()) {
        return "empty";
      }
      std::string out;
      for (auto const& a : arcs()) {
        if (!out.empty()) {
          out += ' ';
        }
        out += a.str();
      }
      return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const ArcSet& s) {
      return os << s.str();
    }

   private:
    struct Piece {
      P                lo;
      std::optional<P> hi;

      friend bool operator==(const Piece&, const Piece&) = default;
    };

    // Cut point when `hi` is the top of the domain.
    static P upper(Piece const& piece) {
      return piece.hi ? *piece.hi : P::cut();
    }

    static bool end_less(std::optional<P> const& a, std::optional<P> const& b) {
      if (!a) {
        return false;
      }
      return !b || *a < *b;
    }

    static void add_arc(Arc<P> const& a, std::vector<Piece>& out) {
      switch (a.kind()) {
        case Arc<P>::Kind::empty:
          return;
        case Arc<P>::Kind::full:
          out.push_back({P::cut(), std::nullopt});
          return;
        default:
          break;
      }
      P const& p = a.from();
      P const& q = a.to();
      if (q == P::cut()) {
        out.push_back({p, std::nullopt});
      } else if (p < q) {
        out.push_back({p, q});
      } else {
        out.push_back({p, std::nullopt});
        out.push_back({P::cut(), q});
      }
    }

    // Sorts by `lo` and merges overlapping or abutting pieces.
    static void merge_sorted(std::vector<Piece>& v) {
      std::sort(v.begin(), v.end(), [](Piece const& x, Piece const& y) {
        return x.lo < y.lo;
      });
      std::vector<Piece> out;
      for (auto& piece : v) {
        if (!out.empty()
            && (!out.back().hi || !(*out.back().hi < piece.lo))) {
          if (end_less(out.back().hi, piece.hi)) {
            out.back().hi = piece.hi;
          }
        } else {
          out.push_back(std::move(piece));
        }
      }
      v = std::move(out);
    }

    std::vector<Piece> pieces_;
  };

  //! Lebesgue measure of a circle arc set.
  inline Rational measure(const ArcSet<CirclePoint>& s) {
    Rational total;
    for (auto const& a : s.arcs()) {
      if (a.kind() == Arc<CirclePoint>::Kind::full) {
        return Rational(1);
      }
      total += (a.to().coordinate() - a.from().coordinate()).frac();
    }
    return total;
  }

}  // namespace pingpong

#endif  // PINGPONG_ARCSET_HPP_
