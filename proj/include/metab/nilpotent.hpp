#pragma once

// The free 2-step nilpotent group on d generators (the discrete Heisenberg
// group for d = 2) with elements stored as endpoint plus signed areas.

#include <cstddef>
#include <string>
#include <vector>

#include "lattice.hpp"
#include "point.hpp"
#include "words.hpp"

namespace metab {

  //! (v, A) with A strictly upper triangular: A(i, j), i < j, is the line
  //! integral of x_i dx_j along any representing path.
  class HeisenbergElem {
   public:
    explicit HeisenbergElem(std::size_t rank)
        : endpoint_(rank), areas_(rank * (rank - 1) / 2) {}

    std::size_t rank() const noexcept {
      return endpoint_.rank();
    }
    Point const& endpoint() const noexcept {
      return endpoint_;
    }
    Point& endpoint() noexcept {
      return endpoint_;
    }

    Integer const& area(std::size_t i, std::size_t j) const {
      return areas_[index(i, j)];
    }
    Integer& area(std::size_t i, std::size_t j) {
      return areas_[index(i, j)];
    }

    bool is_identity() const {
      if (!endpoint_.is_zero()) {
        return false;
      }
      for (auto const& a : areas_) {
        if (a != 0) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(HeisenbergElem const&,
                           HeisenbergElem const&) = default;

   private:
    std::size_t index(std::size_t i, std::size_t j) const {
      std::size_t const d = rank();
      if (!(1 <= i && i < j && j <= d)) {
        throw PreconditionError("area index needs 1 <= i < j <= "
                                + std::to_string(d));
      }
      // row-major over the strict upper triangle
      return (i - 1) * (2 * d - i) / 2 + (j - i - 1);
    }

    Point                endpoint_;
    std::vector<Integer> areas_;
  };

  //! Appends one unit step per letter: a step of sign s along axis j adds
  //! s * v_i to A(i, j) for every i < j.
  inline HeisenbergElem heis_eval(Word const& w) {
    HeisenbergElem h(w.rank());
    Point&         v = h.endpoint();
    for (Letter const& l : w.letters()) {
      for (std::size_t i = 1; i < l.axis; ++i) {
        if (l.sign > 0) {
          h.area(i, l.axis) += v(i);
        } else {
          h.area(i, l.axis) -= v(i);
        }
      }
      v(l.axis) += l.sign;
    }
    return h;
  }

  //! (v, A)(w, B) = (v + w, A + B + C), C(i, j) = v_i w_j.
  inline HeisenbergElem heis_mul(HeisenbergElem const& a, HeisenbergElem const& b) {
    detail::check_rank(a.rank(), b.rank());
    std::size_t const d = a.rank();
    HeisenbergElem    out(d);
    out.endpoint() = a.endpoint() + b.endpoint();
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) {
        out.area(i, j) = a.area(i, j) + b.area(i, j)
                         + a.endpoint()(i) * b.endpoint()(j);
      }
    }
    return out;
  }

  inline HeisenbergElem heis_inv(HeisenbergElem const& a) {
    std::size_t const d = a.rank();
    HeisenbergElem    out(d);
    out.endpoint() = -a.endpoint();
    for (std::size_t i = 1; i <= d; ++i) {
      for (std::size_t j = i + 1; j <= d; ++j) {
        out.area(i, j) = a.endpoint()(i) * a.endpoint()(j) - a.area(i, j);
      }
    }
    return out;
  }

  inline HeisenbergElem heis_comm(HeisenbergElem const& a, HeisenbergElem const& b) {
    return heis_mul(heis_mul(a, b), heis_mul(heis_inv(a), heis_inv(b)));
  }

  //! Trivial iff the path is closed and every projected signed area vanishes.
  inline bool heis_trivial(Word const& w) {
    return heis_eval(w).is_identity();
  }

  inline bool heis_eq(Word const& w1, Word const& w2) {
    detail::check_rank(w1.rank(), w2.rank());
    return heis_eval(w1) == heis_eval(w2);
  }

}  // namespace metab
