#pragma once

// The grid complex E^d: unit edges between integer points of R^d, integer
// edge flows on it, and the evaluation of words as lattice paths.

#include <cstddef>
#include <span>
#include <string>

#include "chain.hpp"
#include "point.hpp"
#include "words.hpp"

namespace metab {

  //! The unit edge from `base` to `base + e_axis`. Edges are only ever keyed
  //! in this positive orientation; traversing one backwards is recorded as a
  //! negative multiplicity.
  struct EdgeKey {
    Point       base;
    std::size_t axis = 1;

    friend bool operator==(EdgeKey const&, EdgeKey const&) = default;
    friend bool operator<(EdgeKey const& a, EdgeKey const& b) {
      if (a.base == b.base) {
        return a.axis < b.axis;
      }
      return a.base < b.base;
    }
  };

  template <>
  struct ChainKeyTraits<EdgeKey> {
    static void validate(EdgeKey const& e, std::size_t rank) {
      detail::check_rank(e.base.rank(), rank);
      if (e.axis < 1 || e.axis > rank) {
        throw PreconditionError("edge axis " + std::to_string(e.axis)
                                + " out of range 1.." + std::to_string(rank));
      }
    }
  };

  //! Net signed number of traversals per edge; the 1-chains of E^d.
  using EdgeFlow = Chain<EdgeKey>;

  //! Endpoint and edge flow of the path a word traces from the origin.
  struct PathEvaluation {
    Point    endpoint;
    EdgeFlow flow;

    friend bool operator==(PathEvaluation const&,
                           PathEvaluation const&) = default;
  };

  //! Walks the letters from the origin one unit edge at a time. Works on raw
  //! (unreduced) letter sequences; a back-and-forth step cancels in the flow.
  inline PathEvaluation evaluate_path(std::size_t              rank,
                                      std::span<Letter const> letters) {
    PathEvaluation result{Point(rank), EdgeFlow(rank)};
    Point&         pos = result.endpoint;
    for (Letter const& l : letters) {
      detail::check_letter(l, rank);
      if (l.sign > 0) {
        result.flow.add(EdgeKey{pos, l.axis}, 1);
        pos(l.axis) += 1;
      } else {
        pos(l.axis) -= 1;
        result.flow.add(EdgeKey{pos, l.axis}, -1);
      }
    }
    return result;
  }

  inline PathEvaluation evaluate_path(Word const& w) {
    return evaluate_path(w.rank(), w.letters());
  }

  //! Abelian image of the word: its endpoint in Z^d.
  inline Point abelian_image(Word const& w) {
    Point p(w.rank());
    for (Letter const& l : w.letters()) {
      p(l.axis) += l.sign;
    }
    return p;
  }

  //! A word lies in the kernel of F_d -> Z^d iff its path is closed.
  inline bool is_loop(Word const& w) {
    return abelian_image(w).is_zero();
  }

  inline VertexChain boundary(EdgeFlow const& f) {
    VertexChain out(f.rank());
    for (auto const& [edge, mult] : f) {
      out.add(edge.base + Point::unit(f.rank(), edge.axis), mult);
      out.add(edge.base, -mult);
    }
    return out;
  }

  inline bool is_cycle(EdgeFlow const& f) {
    return boundary(f).empty();
  }

  //! Rigid shift of the support by \p v.
  inline EdgeFlow translate(EdgeFlow const& f, Point const& v) {
    detail::check_rank(f.rank(), v.rank());
    EdgeFlow out(f.rank());
    for (auto const& [edge, mult] : f) {
      out.add(EdgeKey{edge.base + v, edge.axis}, mult);
    }
    return out;
  }

  inline VertexChain translate(VertexChain const& c, Point const& v) {
    detail::check_rank(c.rank(), v.rank());
    VertexChain out(c.rank());
    for (auto const& [vertex, mult] : c) {
      out.add(vertex + v, mult);
    }
    return out;
  }

  inline EdgeFlow add_flows(EdgeFlow const& f, EdgeFlow const& g) {
    return f + g;
  }

  inline EdgeFlow negate_flow(EdgeFlow const& f) {
    return -f;
  }

}  // namespace metab
