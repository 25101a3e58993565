#pragma once

// The groups Met_k(2) = < x, y, z | [x,y] = z^k, conjugates of z commute >,
// realized as extensions of H_1(E^2) by Z^2 with cocycle k * c.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cocycles.hpp"
#include "homology.hpp"
#include "metabelian.hpp"

namespace metab {

  //! ((m, n), cycle) in Met_k(2). The level k is fixed per group.
  struct SatelliteElem {
    Integer  k;
    Point    vec;
    EdgeFlow cycle;

    friend bool operator==(SatelliteElem const&, SatelliteElem const&) = default;
  };

  namespace detail {
    inline Extension<CocycleRule> satellite_group(Integer const& k) {
      return Extension<CocycleRule>(2, CocycleRule::scaled(2, k));
    }

    inline void check_level(Integer const& a, Integer const& b) {
      if (a != b) {
        throw PreconditionError("satellite level mismatch: " + a.str() + " vs "
                                + b.str());
      }
    }

    inline SatelliteElem wrap(Integer const& k, ExtensionElem e) {
      return {k, std::move(e.vec), std::move(e.cycle)};
    }

    inline ExtensionElem unwrap(SatelliteElem const& a) {
      return {a.vec, a.cycle};
    }
  }  // namespace detail

  inline SatelliteElem sat_identity(Integer const& k) {
    return {k, Point(2), EdgeFlow(2)};
  }

  //! (v1 + v2, h1 + v1.h2 + k c(v1, v2)).
  inline SatelliteElem sat_mul(SatelliteElem const& a, SatelliteElem const& b) {
    detail::check_level(a.k, b.k);
    return detail::wrap(
        a.k, detail::satellite_group(a.k).mul(detail::unwrap(a), detail::unwrap(b)));
  }

  inline SatelliteElem sat_inv(SatelliteElem const& a) {
    return detail::wrap(a.k, detail::satellite_group(a.k).inv(detail::unwrap(a)));
  }

  //! g a g^-1
  inline SatelliteElem sat_conj(SatelliteElem const& a, SatelliteElem const& g) {
    return sat_mul(sat_mul(g, a), sat_inv(g));
  }

  inline SatelliteElem sat_comm(SatelliteElem const& a, SatelliteElem const& b) {
    return sat_mul(sat_mul(a, b), sat_mul(sat_inv(a), sat_inv(b)));
  }

  inline SatelliteElem sat_pow(SatelliteElem const& a, Integer n) {
    SatelliteElem base = n < 0 ? sat_inv(a) : a;
    SatelliteElem acc  = sat_identity(a.k);
    for (n = abs(n); n > 0; --n) {
      acc = sat_mul(acc, base);
    }
    return acc;
  }

  //! x = (e_1, 0), y = (e_2, 0), z = (0, p(0)).
  inline SatelliteElem sat_generator(char name, Integer const& k) {
    switch (name) {
      case 'x':
        return {k, Point::unit(2, 1), EdgeFlow(2)};
      case 'y':
        return {k, Point::unit(2, 2), EdgeFlow(2)};
      case 'z':
        return {k, Point(2), plaquette_boundary(Plaquette{Point(2), 1, 2})};
      default:
        throw PreconditionError(std::string("unknown satellite generator '")
                                + name + "'");
    }
  }

  //! A letter over the alphabet {x, y, z} and inverses.
  struct SatLetter {
    char gen  = 'x';
    int  sign = 1;
  };

  //! Same token grammar as words, with heads x, y or z: "x y^-2 . z".
  inline std::vector<SatLetter> parse_sat_letters(std::string_view text) {
    std::vector<SatLetter> out;
    detail::for_each_token(text, [&](std::string_view token) {
      std::string_view head;
      long long        e = detail::split_exponent(token, head);
      if (head != "x" && head != "y" && head != "z") {
        throw ParseError("bad token '" + std::string(token)
                         + "' (expected x, y or z)");
      }
      SatLetter l{head.front(), e < 0 ? -1 : 1};
      unsigned long long n = e < 0 ? 0ULL - static_cast<unsigned long long>(e)
                                   : static_cast<unsigned long long>(e);
      out.insert(out.end(), n, l);
    });
    return out;
  }

  inline SatelliteElem sat_from_word(std::vector<SatLetter> const& letters,
                                     Integer const&                k) {
    SatelliteElem acc = sat_identity(k);
    for (SatLetter const& l : letters) {
      SatelliteElem g = sat_generator(l.gen, k);
      acc             = sat_mul(acc, l.sign > 0 ? g : sat_inv(g));
    }
    return acc;
  }

  inline SatelliteElem sat_from_word(std::string_view text, Integer const& k) {
    return sat_from_word(parse_sat_letters(text), k);
  }

  //! N: the normal closure of z, i.e. the elements with zero vector part.
  inline bool sat_in_N(SatelliteElem const& a) {
    return a.vec.is_zero();
  }

  //! M: the normal closure of z^k; every plaquette coefficient lies in kZ.
  inline bool sat_in_M(SatelliteElem const& a) {
    if (!sat_in_N(a)) {
      return false;
    }
    for (auto const& [p, mult] : decompose_cycle_2d(a.cycle)) {
      if (!divisible_by(mult, a.k)) {
        return false;
      }
    }
    return true;
  }

  //! The commutator subgroup: zero vector part and area in kZ.
  inline bool sat_in_commutant(SatelliteElem const& a) {
    return sat_in_N(a) && divisible_by(algebraic_area(a.cycle), a.k);
  }

  //! Order of the image of z in the abelianization, found by searching
  //! z, z^2, ... up to |k|. std::nullopt means infinite order (k = 0).
  inline std::optional<Integer> sat_abelianization_order_of_z(Integer const& k) {
    if (k == 0) {
      return std::nullopt;
    }
    SatelliteElem const z   = sat_generator('z', k);
    SatelliteElem       acc = z;
    for (Integer j = 1; j <= abs(k); ++j) {
      if (sat_in_commutant(acc)) {
        return j;
      }
      acc = sat_mul(acc, z);
    }
    throw PreconditionError("no power of z up to |k| is a commutator");
  }

  //! Met(2) -> Met_1(2): (v, f) -> (v, f - flow(w_v)), with w_v the monomial
  //! path to v.
  inline SatelliteElem satellite_from_metabelian(MetabelianElem const& a) {
    detail::check_rank(a.rank(), 2);
    EdgeFlow cycle = a.flow - evaluate_path(canonical_path(a.endpoint)).flow;
    return {Integer(1), a.endpoint, std::move(cycle)};
  }

}  // namespace metab
