#pragma once

// JSON encodings. Integers that fit in 64 bits are JSON numbers; larger ones
// are decimal strings. Arrays follow the chains' key order, so output is
// byte-deterministic.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "cocycles.hpp"
#include "homology.hpp"
#include "lattice.hpp"
#include "metabelian.hpp"
#include "nilpotent.hpp"
#include "satellite.hpp"
#include "words.hpp"

namespace metab {

  using json = nlohmann::json;

  inline json to_json(Integer const& x) {
    if (detail::fits_int64(x)) {
      return json(x.convert_to<std::int64_t>());
    }
    return json(x.str());
  }

  inline json to_json(Point const& p) {
    json out = json::array();
    for (auto const& c : p.coords()) {
      out.push_back(to_json(c));
    }
    return out;
  }

  inline json to_json(Word const& w) {
    return {{"d", w.rank()}, {"length", w.length()}, {"word", to_string(w)}};
  }

  inline json to_json(EdgeFlow const& f) {
    json out = json::array();
    for (auto const& [e, mult] : f) {
      out.push_back({{"base", to_json(e.base)}, {"axis", e.axis}, {"mult", to_json(mult)}});
    }
    return out;
  }

  inline json to_json(PathEvaluation const& e) {
    return {{"endpoint", to_json(e.endpoint)}, {"flow", to_json(e.flow)}};
  }

  inline json to_json(MetabelianElem const& a) {
    return {{"endpoint", to_json(a.endpoint)}, {"flow", to_json(a.flow)}};
  }

  inline json to_json(PlaquetteSum const& s) {
    json out = json::array();
    for (auto const& [p, mult] : s) {
      out.push_back({{"base", to_json(p.base)},
                     {"i", p.i},
                     {"j", p.j},
                     {"mult", to_json(mult)}});
    }
    return out;
  }

  inline json to_json(FoxImage const& f) {
    json derivs = json::array();
    for (auto const& poly : f.derivatives) {
      json terms = json::array();
      for (auto const& [m, coeff] : poly) {
        terms.push_back({{"exp", to_json(m)}, {"coeff", to_json(coeff)}});
      }
      derivs.push_back(std::move(terms));
    }
    return {{"monomial", to_json(f.monomial)}, {"derivatives", std::move(derivs)}};
  }

  inline json to_json(HeisenbergElem const& h) {
    json areas = json::array();
    for (std::size_t i = 1; i <= h.rank(); ++i) {
      for (std::size_t j = i + 1; j <= h.rank(); ++j) {
        areas.push_back({{"i", i}, {"j", j}, {"value", to_json(h.area(i, j))}});
      }
    }
    return {{"endpoint", to_json(h.endpoint())}, {"areas", std::move(areas)}};
  }

  inline json to_json(SatelliteElem const& a) {
    return {{"k", to_json(a.k)}, {"vec", to_json(a.vec)}, {"cycle", to_json(a.cycle)}};
  }

  // -- decoding --------------------------------------------------------------

  inline Integer integer_from_json(json const& j) {
    if (j.is_number_integer()) {
      return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                    : Integer(j.get<std::int64_t>());
    }
    if (j.is_string()) {
      std::string s = j.get<std::string>();
      std::size_t digits = (!s.empty() && s[0] == '-') ? 1 : 0;
      if (s.size() == digits
          || s.find_first_not_of("0123456789", digits) != std::string::npos) {
        throw ParseError("bad integer string '" + s + "'");
      }
      return Integer(s);
    }
    throw ParseError("expected an integer, got " + j.dump());
  }

  inline Point point_from_json(json const& j) {
    if (!j.is_array()) {
      throw ParseError("expected an integer array, got " + j.dump());
    }
    std::vector<Integer> coords;
    for (auto const& c : j) {
      coords.push_back(integer_from_json(c));
    }
    return Point(std::move(coords));
  }

  namespace detail {
    inline json const& field(json const& obj, char const* name) {
      if (!obj.is_object() || !obj.contains(name)) {
        throw ParseError(std::string("missing field '") + name + "' in "
                         + obj.dump());
      }
      return obj.at(name);
    }

    inline std::size_t axis_from_json(json const& j) {
      if (!j.is_number_unsigned()) {
        throw ParseError("expected a positive axis index, got " + j.dump());
      }
      return j.get<std::size_t>();
    }
  }  // namespace detail

  inline PlaquetteSum plaquette_sum_from_json(json const& j, std::size_t rank) {
    if (!j.is_array()) {
      throw ParseError("plaquette sum must be an array");
    }
    PlaquetteSum out(rank);
    for (auto const& item : j) {
      Plaquette p{point_from_json(detail::field(item, "base")),
                  detail::axis_from_json(detail::field(item, "i")),
                  detail::axis_from_json(detail::field(item, "j"))};
      out.add(p, integer_from_json(detail::field(item, "mult")));
    }
    return out;
  }

  //! [{"vertex": [m, n], "plaquettes": <plaquette sum>}, ...]
  inline Cochain cochain_from_json(json const& j, std::size_t rank) {
    if (!j.is_array()) {
      throw ParseError("perturbation must be an array of {vertex, plaquettes}");
    }
    Cochain u(rank);
    for (auto const& item : j) {
      Point vertex = point_from_json(detail::field(item, "vertex"));
      detail::check_rank(vertex.rank(), rank);
      u.add(vertex, plaquette_boundary(plaquette_sum_from_json(
                        detail::field(item, "plaquettes"), rank)));
    }
    return u;
  }

}  // namespace metab
