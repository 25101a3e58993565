#pragma once

// The free metabelian group Met(d) = F_d / F_d'' in edge-flow normal form,
// and the Magnus embedding as an independent encoding of the same group.

#include <cstddef>
#include <vector>

#include "cocycles.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "words.hpp"

namespace metab {

  //! An element of Met(d): endpoint of any representing path plus its net
  //! edge flow. Two words are equal in Met(d) iff both components agree.
  struct MetabelianElem {
    Point    endpoint;
    EdgeFlow flow;

    std::size_t rank() const noexcept {
      return endpoint.rank();
    }
    friend bool operator==(MetabelianElem const&,
                           MetabelianElem const&) = default;
  };

  inline MetabelianElem met_identity(std::size_t rank) {
    return {Point(rank), EdgeFlow(rank)};
  }

  inline MetabelianElem met_from_word(Word const& w) {
    PathEvaluation e = evaluate_path(w);
    return {std::move(e.endpoint), std::move(e.flow)};
  }

  //! Concatenation of paths: the second flow is shifted to start where the
  //! first path ends.
  inline MetabelianElem met_mul(MetabelianElem const& a, MetabelianElem const& b) {
    detail::check_rank(a.rank(), b.rank());
    return {a.endpoint + b.endpoint, a.flow + translate(b.flow, a.endpoint)};
  }

  inline MetabelianElem met_inv(MetabelianElem const& a) {
    Point minus = -a.endpoint;
    return {minus, -translate(a.flow, minus)};
  }

  //! b a b^-1
  inline MetabelianElem met_conj(MetabelianElem const& a, MetabelianElem const& b) {
    return met_mul(met_mul(b, a), met_inv(b));
  }

  //! a b a^-1 b^-1
  inline MetabelianElem met_comm(MetabelianElem const& a, MetabelianElem const& b) {
    return met_mul(met_mul(a, b), met_mul(met_inv(a), met_inv(b)));
  }

  //! The word problem in Met(d).
  inline bool met_eq(Word const& w1, Word const& w2) {
    detail::check_rank(w1.rank(), w2.rank());
    return met_from_word(w1) == met_from_word(w2);
  }

  //! x1^{m_1}..xd^{m_d} [x_i, x_j] xd^{-m_d}..x1^{-m_1}, i.e. the plaquette
  //! p(m, i, j) as an element of the commutator subgroup.
  inline MetabelianElem plaquette_element(Plaquette const& p) {
    std::size_t const rank = p.base.rank();
    ChainKeyTraits<Plaquette>::validate(p, rank);
    Word prefix = canonical_path(p.base);
    Word xi     = free_reduce(rank, std::vector<Letter>{{p.i, 1}});
    Word xj     = free_reduce(rank, std::vector<Letter>{{p.j, 1}});
    Word w      = concat(concat(prefix, commutator(xi, xj)), invert(prefix));
    return met_from_word(w);
  }

  //! Image of the extension pair (g, p) in Met(d): the monomial element for
  //! g times the plaquette element for p.
  inline MetabelianElem alpha_image(Point const& g, Plaquette const& p) {
    return met_mul(met_from_word(canonical_path(g)), plaquette_element(p));
  }

  //! Image of (g, 0) under the same map.
  inline MetabelianElem alpha_image(Point const& g) {
    return met_from_word(canonical_path(g));
  }

  // -- Magnus embedding ------------------------------------------------------

  //! Finitely supported integer combination of monomials t^m, m in Z^d.
  using LaurentPolynomial = Chain<Point>;

  //! The upper triangular Magnus matrix [[t^monomial, sum_i D_i s_i], [0, 1]]
  //! of a word, with D_i its i-th Fox derivative pushed to Z[Z^d].
  struct FoxImage {
    Point                          monomial;
    std::vector<LaurentPolynomial> derivatives;

    std::size_t rank() const noexcept {
      return monomial.rank();
    }

    static FoxImage identity(std::size_t rank) {
      return {Point(rank), std::vector<LaurentPolynomial>(rank, LaurentPolynomial(rank))};
    }

    //! Matrix product: (t^a, D)(t^b, E) = (t^{a+b}, D + t^a E).
    friend FoxImage operator*(FoxImage const& lhs, FoxImage const& rhs) {
      detail::check_rank(lhs.rank(), rhs.rank());
      FoxImage out = lhs;
      out.monomial += rhs.monomial;
      for (std::size_t i = 0; i < rhs.derivatives.size(); ++i) {
        for (auto const& [m, coeff] : rhs.derivatives[i]) {
          out.derivatives[i].add(lhs.monomial + m, coeff);
        }
      }
      return out;
    }

    friend bool operator==(FoxImage const&, FoxImage const&) = default;
  };

  //! x_i -> (t_i, s_i), x_i^-1 -> (t_i^-1, -t_i^-1 s_i).
  inline FoxImage fox_generator(std::size_t rank, Letter l) {
    detail::check_letter(l, rank);
    FoxImage g  = FoxImage::identity(rank);
    g.monomial  = Point::unit(rank, l.axis, l.sign);
    Point where = l.sign > 0 ? Point(rank) : g.monomial;
    g.derivatives[l.axis - 1].add(where, l.sign);
    return g;
  }

  inline FoxImage fox_image(Word const& w) {
    FoxImage acc = FoxImage::identity(w.rank());
    for (Letter const& l : w.letters()) {
      acc = acc * fox_generator(w.rank(), l);
    }
    return acc;
  }

}  // namespace metab
