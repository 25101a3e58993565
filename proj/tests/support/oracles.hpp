#pragma once

// Independent reference computations used to check the library. Nothing
// here calls the routine it is compared against.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "metab/metab.hpp"

namespace metab::testing {

  //! Edge flow by listing the visited vertices and counting, for every
  //! consecutive pair, the traversal of the edge between them.
  inline std::map<std::pair<std::vector<long long>, std::size_t>, long long>
  traced_flow(std::size_t rank, std::vector<Letter> const& letters) {
    std::vector<std::vector<long long>> vertices{std::vector<long long>(rank, 0)};
    for (Letter const& l : letters) {
      auto next = vertices.back();
      next[l.axis - 1] += l.sign;
      vertices.push_back(next);
    }
    std::map<std::pair<std::vector<long long>, std::size_t>, long long> flow;
    for (std::size_t n = 0; n + 1 < vertices.size(); ++n) {
      auto const& a = vertices[n];
      auto const& b = vertices[n + 1];
      for (std::size_t axis = 0; axis < rank; ++axis) {
        if (a[axis] != b[axis]) {
          bool forward = b[axis] > a[axis];
          auto key     = std::make_pair(forward ? a : b, axis + 1);
          flow[key] += forward ? 1 : -1;
          if (flow[key] == 0) {
            flow.erase(key);
          }
        }
      }
    }
    return flow;
  }

  inline bool same_flow(EdgeFlow const& f,
                        std::map<std::pair<std::vector<long long>, std::size_t>, long long> const& g) {
    if (f.size() != g.size()) {
      return false;
    }
    for (auto const& [key, mult] : g) {
      Point base(key.first.size());
      for (std::size_t a = 0; a < key.first.size(); ++a) {
        base(a + 1) = key.first[a];
      }
      if (f.at(EdgeKey{base, key.second}) != mult) {
        return false;
      }
    }
    return true;
  }

  //! Plaquette coefficients of a planar cycle by column integration: the
  //! coefficient at (a, b) is the total horizontal flow through (a, b') over
  //! b' <= b.
  inline PlaquetteSum column_integral(EdgeFlow const& f) {
    std::map<Integer, std::map<Integer, Integer>> columns;
    for (auto const& [e, mult] : f) {
      if (e.axis == 1) {
        columns[e.base(1)][e.base(2)] += mult;
      }
    }
    PlaquetteSum out(2);
    for (auto const& [a, column] : columns) {
      Integer running = 0;
      Integer b       = column.begin()->first;
      Integer top     = column.rbegin()->first;
      for (; b <= top; ++b) {
        auto it = column.find(b);
        if (it != column.end()) {
          running += it->second;
        }
        out.add(Plaquette{Point(std::vector<Integer>{a, b}), 1, 2}, running);
      }
    }
    return out;
  }

  //! Shoelace formula for the signed area enclosed by a closed planar path
  //! given by its vertices; returns twice the area.
  inline long long twice_shoelace(std::vector<std::pair<long long, long long>> const& v) {
    long long s = 0;
    for (std::size_t n = 0; n + 1 < v.size(); ++n) {
      s += v[n].first * v[n + 1].second - v[n + 1].first * v[n].second;
    }
    return s;
  }

  //! Vertices of the (i, j) projection of a word's path.
  inline std::vector<std::pair<long long, long long>>
  projected_vertices(Word const& w, std::size_t i, std::size_t j) {
    std::vector<std::pair<long long, long long>> out{{0, 0}};
    for (Letter const& l : w.letters()) {
      auto p = out.back();
      if (l.axis == i) {
        p.first += l.sign;
      } else if (l.axis == j) {
        p.second += l.sign;
      }
      out.push_back(p);
    }
    return out;
  }

}  // namespace metab::testing
