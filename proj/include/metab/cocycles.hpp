#pragma once

// The canonical 2-cocycle of Z^d with values in H_1(E^d), coboundaries, the
// extension groups they define, and the invariant beta classifying
// H^2(Z^2, H_1(E^2)).
//
// Action convention: in every extension (v1, h1)(v2, h2) the second cycle
// is translated by the first vector, matching path concatenation.

#include <cstddef>
#include <map>
#include <utility>

#include "homology.hpp"
#include "lattice.hpp"
#include "point.hpp"
#include "words.hpp"

namespace metab {

  //! The monomial word x1^{m_1} x2^{m_2} ... xd^{m_d}: along axis 1 first,
  //! then axis 2, and so on.
  inline Word canonical_path(Point const& m) {
    std::vector<Letter> letters;
    for (std::size_t axis = 1; axis <= m.rank(); ++axis) {
      Integer const& e    = m(axis);
      Letter         step = {axis, e < 0 ? -1 : 1};
      for (Integer n = abs(e); n > 0; --n) {
        letters.push_back(step);
      }
    }
    return free_reduce(m.rank(), letters);
  }

  //! flow(w_{g1}) + g1.flow(w_{g2}) - flow(w_{g1+g2}): the loop that follows
  //! the monomial path to g1, then the shifted monomial path to g1 + g2, and
  //! returns along the monomial path of g1 + g2.
  inline EdgeFlow canonical_cocycle(Point const& g1, Point const& g2) {
    detail::check_rank(g1.rank(), g2.rank());
    EdgeFlow out = evaluate_path(canonical_path(g1)).flow;
    out += translate(evaluate_path(canonical_path(g2)).flow, g1);
    out -= evaluate_path(canonical_path(g1 + g2)).flow;
    return out;
  }

  //! A finitely supported map Z^d -> cycles (a 1-cochain).
  class Cochain {
   public:
    explicit Cochain(std::size_t rank) : rank_(rank) {}

    std::size_t rank() const noexcept {
      return rank_;
    }

    //! Adds \p cycle to the value at \p point.
    Cochain& add(Point const& point, EdgeFlow const& cycle) {
      detail::check_rank(point.rank(), rank_);
      detail::check_rank(cycle.rank(), rank_);
      if (!is_cycle(cycle)) {
        throw NotACycle();
      }
      auto [it, inserted] = values_.try_emplace(point, cycle);
      if (!inserted) {
        it->second += cycle;
      }
      if (it->second.empty()) {
        values_.erase(it);
      }
      return *this;
    }

    EdgeFlow at(Point const& point) const {
      auto it = values_.find(point);
      return it == values_.end() ? EdgeFlow(rank_) : it->second;
    }

    std::map<Point, EdgeFlow> const& values() const noexcept {
      return values_;
    }

    Cochain& operator+=(Cochain const& other) {
      detail::check_rank(rank_, other.rank_);
      for (auto const& [p, f] : other.values_) {
        add(p, f);
      }
      return *this;
    }

   private:
    std::size_t               rank_;
    std::map<Point, EdgeFlow> values_;
  };

  //! u(g1) + g1.u(g2) - u(g1 + g2).
  inline EdgeFlow coboundary(Cochain const& u, Point const& g1, Point const& g2) {
    detail::check_rank(g1.rank(), u.rank());
    detail::check_rank(g2.rank(), u.rank());
    EdgeFlow out = u.at(g1);
    out += translate(u.at(g2), g1);
    out -= u.at(g1 + g2);
    return out;
  }

  //! A normalized cycle-valued 2-cocycle of Z^d given as a rule:
  //! scale * c + coboundary(perturbation), where c is the canonical cocycle.
  //! canonical(), scaled(k) and perturbed(y, u) cover the three families.
  class CocycleRule {
   public:
    static CocycleRule canonical(std::size_t rank) {
      return CocycleRule(rank, 1);
    }

    static CocycleRule scaled(std::size_t rank, Integer k) {
      return CocycleRule(rank, std::move(k));
    }

    //! y + coboundary(u). The perturbation must vanish at the origin, or
    //! the result would not be normalized.
    static CocycleRule perturbed(CocycleRule y, Cochain const& u) {
      detail::check_rank(y.rank(), u.rank());
      if (!u.at(Point(u.rank())).empty()) {
        throw PreconditionError(
            "perturbation must vanish at the origin to keep the cocycle "
            "normalized");
      }
      y.perturbation_ += u;
      return y;
    }

    std::size_t rank() const noexcept {
      return rank_;
    }
    Integer const& scale() const noexcept {
      return scale_;
    }
    Cochain const& perturbation() const noexcept {
      return perturbation_;
    }

    EdgeFlow operator()(Point const& g1, Point const& g2) const {
      detail::check_rank(g1.rank(), rank_);
      detail::check_rank(g2.rank(), rank_);
      EdgeFlow out(rank_);
      if (scale_ != 0) {
        out = scale_ * canonical_cocycle(g1, g2);
      }
      if (!perturbation_.values().empty()) {
        out += coboundary(perturbation_, g1, g2);
      }
      return out;
    }

   private:
    CocycleRule(std::size_t rank, Integer scale)
        : rank_(rank), scale_(std::move(scale)), perturbation_(rank) {}

    std::size_t rank_;
    Integer     scale_;
    Cochain     perturbation_;
  };

  //! y(g1,g2) + y(g1+g2,g3) - y(g1,g2+g3) - g1.y(g2,g3) == 0.
  template <typename Cocycle>
  bool check_cocycle_identity(Cocycle const& y,
                              Point const&   g1,
                              Point const&   g2,
                              Point const&   g3) {
    EdgeFlow sum = y(g1, g2);
    sum += y(g1 + g2, g3);
    sum -= y(g1, g2 + g3);
    sum -= translate(y(g2, g3), g1);
    return sum.empty();
  }

  //! Element (v, h) of the extension Z^d x_y H_1(E^d).
  struct ExtensionElem {
    Point    vec;
    EdgeFlow cycle;

    friend bool operator==(ExtensionElem const&, ExtensionElem const&) = default;
  };

  //! The group law (v1, h1)(v2, h2) = (v1 + v2, h1 + v1.h2 + y(v1, v2)) for
  //! a normalized cocycle y.
  template <typename Cocycle>
  class Extension {
   public:
    Extension(std::size_t rank, Cocycle y) : rank_(rank), y_(std::move(y)) {}

    ExtensionElem identity() const {
      return {Point(rank_), EdgeFlow(rank_)};
    }

    ExtensionElem mul(ExtensionElem const& a, ExtensionElem const& b) const {
      EdgeFlow h = a.cycle;
      h += translate(b.cycle, a.vec);
      h += y_(a.vec, b.vec);
      return {a.vec + b.vec, std::move(h)};
    }

    //! Solves (v, h)(-v, h') = identity: h' = -(-v).(h + y(v, -v)).
    ExtensionElem inv(ExtensionElem const& a) const {
      Point    minus = -a.vec;
      EdgeFlow h     = a.cycle + y_(a.vec, minus);
      return {minus, -translate(h, minus)};
    }

    ExtensionElem comm(ExtensionElem const& a, ExtensionElem const& b) const {
      return mul(mul(a, b), mul(inv(a), inv(b)));
    }

    ExtensionElem conj(ExtensionElem const& a, ExtensionElem const& by) const {
      return mul(mul(by, a), inv(by));
    }

    Cocycle const& cocycle() const noexcept {
      return y_;
    }

   private:
    std::size_t rank_;
    Cocycle     y_;
  };

  //! The cycle h with [(e_1, 0), (e_2, 0)] = (0, h) in the planar extension
  //! defined by y.
  template <typename Cocycle>
  EdgeFlow commutator_defect(Cocycle const& y) {
    Extension<Cocycle const&> ext(2, y);
    ExtensionElem             x{Point::unit(2, 1), EdgeFlow(2)};
    ExtensionElem             z{Point::unit(2, 2), EdgeFlow(2)};
    ExtensionElem             c = ext.comm(x, z);
    if (!c.vec.is_zero()) {
      throw PreconditionError("commutator of basis lifts left Z^2 fibre");
    }
    return c.cycle;
  }

  //! Algebraic area of the commutator defect; constant on cohomology
  //! classes, with beta(canonical) = 1.
  template <typename Cocycle>
  Integer beta(Cocycle const& y) {
    return algebraic_area(commutator_defect(y));
  }

  inline Integer beta(CocycleRule const& y) {
    if (y.rank() != 2) {
      throw PreconditionError("beta is defined for rank 2 cocycles only");
    }
    return algebraic_area(commutator_defect(y));
  }

}  // namespace metab
