#pragma once

// Plaquettes (unit squares) as generators of H_1(E^d), the decomposition of
// cycles into plaquettes, and the algebraic area of planar cycles.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chain.hpp"
#include "lattice.hpp"
#include "point.hpp"

namespace metab {

  //! The oriented boundary of the unit square at `base` spanned by axes
  //! i < j.
  struct Plaquette {
    Point       base;
    std::size_t i = 1;
    std::size_t j = 2;

    friend bool operator==(Plaquette const&, Plaquette const&) = default;
    friend bool operator<(Plaquette const& a, Plaquette const& b) {
      if (!(a.base == b.base)) {
        return a.base < b.base;
      }
      if (a.i != b.i) {
        return a.i < b.i;
      }
      return a.j < b.j;
    }
  };

  template <>
  struct ChainKeyTraits<Plaquette> {
    static void validate(Plaquette const& p, std::size_t rank) {
      detail::check_rank(p.base.rank(), rank);
      if (!(1 <= p.i && p.i < p.j && p.j <= rank)) {
        throw PreconditionError("plaquette axes must satisfy 1 <= i < j <= "
                                + std::to_string(rank));
      }
    }
  };

  using PlaquetteSum = Chain<Plaquette>;

  //! Boundary of p(m, i, j), oriented so that it equals the flow of the
  //! commutator x_i x_j x_i^-1 x_j^-1 started at m.
  inline EdgeFlow plaquette_boundary(Plaquette const& p) {
    std::size_t const rank = p.base.rank();
    ChainKeyTraits<Plaquette>::validate(p, rank);
    EdgeFlow f(rank);
    f.add(EdgeKey{p.base, p.i}, 1);
    f.add(EdgeKey{p.base + Point::unit(rank, p.i), p.j}, 1);
    f.add(EdgeKey{p.base + Point::unit(rank, p.j), p.i}, -1);
    f.add(EdgeKey{p.base, p.j}, -1);
    return f;
  }

  //! The edge flow represented by a plaquette sum.
  inline EdgeFlow plaquette_boundary(PlaquetteSum const& s) {
    EdgeFlow f(s.rank());
    for (auto const& [p, mult] : s) {
      f += mult * plaquette_boundary(p);
    }
    return f;
  }

  namespace detail {
    inline void require_cycle(EdgeFlow const& f) {
      if (!is_cycle(f)) {
        throw NotACycle();
      }
    }

    inline void require_planar(EdgeFlow const& f) {
      if (f.rank() != 2) {
        throw PreconditionError("planar operation needs rank 2, got rank "
                                + std::to_string(f.rank()));
      }
    }

    // Planar peeling. `pick` chooses which column to work on next, among
    // the columns that still carry horizontal flow; the lowest horizontal
    // edge of that column is cancelled with the plaquette above it, which
    // pushes its multiplicity to m + e_2. A column of a cycle has zero
    // horizontal sum, so it drains bottom-up, and once no horizontal edge
    // is left the remaining vertical-only cycle is empty. Every choice
    // yields the same coefficients.
    inline PlaquetteSum
    peel_planar(EdgeFlow work,
                std::function<std::size_t(std::size_t)> const& pick) {
      PlaquetteSum out(2);
      std::vector<EdgeKey> horizontal;
      while (true) {
        horizontal.clear();
        for (auto const& kv : work) {
          if (kv.first.axis == 1
              && (horizontal.empty() || horizontal.back().base(1) != kv.first.base(1))) {
            horizontal.push_back(kv.first);
          }
        }
        if (horizontal.empty()) {
          break;
        }
        EdgeKey const& edge = horizontal[pick(horizontal.size())];
        Integer        mult = work.at(edge);
        Plaquette      p{edge.base, 1, 2};
        out.add(p, mult);
        work -= mult * plaquette_boundary(p);
      }
      if (!work.empty()) {
        throw NotACycle();
      }
      return out;
    }
  }  // namespace detail

  //! The unique plaquette coefficients of a planar cycle.
  //!
  //! Repeatedly cancels the lexicographically smallest supported edge. For a
  //! cycle that edge is always horizontal (axis 1), and the plaquette above
  //! it introduces only larger keys.
  inline PlaquetteSum decompose_cycle_2d(EdgeFlow const& f) {
    detail::require_planar(f);
    detail::require_cycle(f);
    PlaquetteSum out(2);
    EdgeFlow     work = f;
    while (!work.empty()) {
      auto const& [edge, value] = *work.begin();
      if (edge.axis != 1) {
        throw NotACycle();
      }
      Plaquette p{edge.base, 1, 2};
      Integer   mult = value;
      out.add(p, mult);
      work -= mult * plaquette_boundary(p);
    }
    return out;
  }

  //! Some plaquette sum whose boundary is \p f; canonical only for d = 2.
  //!
  //! For d >= 3 each edge (m, i) is closed up by the monomial paths to its
  //! endpoints, which differ from it by sliding the edge along the staircase
  //! from (m_1..m_i, 0..0) to m through axes j > i. Each unit slide sweeps
  //! one plaquette p(q, i, j). The monomial path pieces cancel because f is
  //! a cycle.
  inline PlaquetteSum decompose_cycle(EdgeFlow const& f) {
    std::size_t const rank = f.rank();
    if (rank < 2) {
      detail::require_cycle(f);
      return PlaquetteSum(rank);
    }
    if (rank == 2) {
      return decompose_cycle_2d(f);
    }
    detail::require_cycle(f);
    PlaquetteSum out(rank);
    for (auto const& [edge, mult] : f) {
      std::size_t const i = edge.axis;
      Point             q = edge.base;
      for (std::size_t j = i + 1; j <= rank; ++j) {
        q(j) = 0;
      }
      for (std::size_t j = i + 1; j <= rank; ++j) {
        Integer const& target = edge.base(j);
        while (q(j) < target) {
          out.add(Plaquette{q, i, j}, -mult);
          q(j) += 1;
        }
        while (q(j) > target) {
          q(j) -= 1;
          out.add(Plaquette{q, i, j}, mult);
        }
      }
    }
    return out;
  }

  //! Sum of the plaquette coefficients of a planar cycle.
  inline Integer algebraic_area(EdgeFlow const& f) {
    return decompose_cycle_2d(f).total();
  }

  //! The six faces of the unit cube at `base` spanned by i < j < k, signed
  //! so that their boundaries cancel:
  //!   p(m,i,j) - p(m,i,k) + p(m,j,k)
  //!     - p(m+e_k,i,j) + p(m+e_j,i,k) - p(m+e_i,j,k).
  inline PlaquetteSum cube_relation(Point const& base,
                                    std::size_t  i,
                                    std::size_t  j,
                                    std::size_t  k) {
    std::size_t const rank = base.rank();
    if (rank < 3) {
      throw PreconditionError("cube relations need rank >= 3");
    }
    if (!(1 <= i && i < j && j < k && k <= rank)) {
      throw PreconditionError("cube axes must satisfy 1 <= i < j < k <= "
                              + std::to_string(rank));
    }
    PlaquetteSum s(rank);
    s.add(Plaquette{base, i, j}, 1);
    s.add(Plaquette{base, i, k}, -1);
    s.add(Plaquette{base, j, k}, 1);
    s.add(Plaquette{base + Point::unit(rank, k), i, j}, -1);
    s.add(Plaquette{base + Point::unit(rank, j), i, k}, 1);
    s.add(Plaquette{base + Point::unit(rank, i), j, k}, -1);
    return s;
  }

  //! Projection onto the (i, j) coordinate plane, i < j. Edges along other
  //! axes collapse to points and are dropped.
  inline EdgeFlow project_flow(EdgeFlow const& f, std::size_t i, std::size_t j) {
    if (!(1 <= i && i < j && j <= f.rank())) {
      throw PreconditionError("projection axes must satisfy 1 <= i < j <= "
                              + std::to_string(f.rank()));
    }
    EdgeFlow out(2);
    for (auto const& [edge, mult] : f) {
      if (edge.axis != i && edge.axis != j) {
        continue;
      }
      Point base(std::vector<Integer>{edge.base(i), edge.base(j)});
      out.add(EdgeKey{std::move(base), edge.axis == i ? 1u : 2u}, mult);
    }
    return out;
  }

}  // namespace metab
