#pragma once

// Exact integers and integer lattice points.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace metab {

  //! Arbitrary precision signed integer used for every coordinate and
  //! multiplicity.
  using Integer = boost::multiprecision::cpp_int;

  inline Integer abs(Integer const& x) {
    return x < 0 ? Integer(-x) : x;
  }

  //! True iff \p x lies in the subgroup mZ, with 0Z = {0}.
  inline bool divisible_by(Integer const& x, Integer const& m) {
    if (m == 0) {
      return x == 0;
    }
    Integer r = x % m;
    return r == 0;
  }

  //! A point (or translation vector) of Z^d.
  class Point {
   public:
    Point() = default;
    explicit Point(std::size_t rank) : coords_(rank) {}
    explicit Point(std::vector<Integer> coords) : coords_(std::move(coords)) {}
    Point(std::initializer_list<long long> coords) {
      coords_.reserve(coords.size());
      for (long long c : coords) {
        coords_.emplace_back(c);
      }
    }

    //! The standard basis vector e_axis (axis is 1-based).
    static Point unit(std::size_t rank, std::size_t axis, int sign = 1) {
      if (axis < 1 || axis > rank) {
        throw PreconditionError("axis " + std::to_string(axis)
                                + " out of range 1.." + std::to_string(rank));
      }
      Point p(rank);
      p.coords_[axis - 1] = sign;
      return p;
    }

    std::size_t rank() const noexcept {
      return coords_.size();
    }

    //! 1-based coordinate access.
    Integer const& operator()(std::size_t axis) const {
      return coords_.at(axis - 1);
    }
    Integer& operator()(std::size_t axis) {
      return coords_.at(axis - 1);
    }

    std::vector<Integer> const& coords() const noexcept {
      return coords_;
    }

    bool is_zero() const {
      return std::all_of(coords_.begin(), coords_.end(), [](Integer const& c) {
        return c == 0;
      });
    }

    Point& operator+=(Point const& other) {
      detail::check_rank(rank(), other.rank());
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += other.coords_[i];
      }
      return *this;
    }

    Point& operator-=(Point const& other) {
      detail::check_rank(rank(), other.rank());
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= other.coords_[i];
      }
      return *this;
    }

    Point& operator*=(Integer const& s) {
      for (auto& c : coords_) {
        c *= s;
      }
      return *this;
    }

    friend Point operator+(Point lhs, Point const& rhs) {
      return lhs += rhs;
    }
    friend Point operator-(Point lhs, Point const& rhs) {
      return lhs -= rhs;
    }
    friend Point operator*(Integer const& s, Point p) {
      return p *= s;
    }
    friend Point operator-(Point p) {
      for (auto& c : p.coords_) {
        c = -c;
      }
      return p;
    }

    friend bool operator==(Point const& a, Point const& b) {
      return a.coords_ == b.coords_;
    }
    friend bool operator<(Point const& a, Point const& b) {
      return a.coords_ < b.coords_;
    }

    //! "1,-2,0"
    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i != 0) {
          out += ',';
        }
        out += coords_[i].str();
      }
      return out;
    }

   private:
    std::vector<Integer> coords_;
  };

  //! Parses a comma separated list of decimal integers, e.g. "3,-1".
  inline Point parse_point(std::string const& text) {
    std::vector<Integer> coords;
    std::size_t pos = 0;
    while (true) {
      std::size_t comma = text.find(',', pos);
      std::string item = text.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      item.erase(0, item.find_first_not_of(" \t"));
      item.erase(item.find_last_not_of(" \t") + 1);
      std::size_t digits = (!item.empty() && (item[0] == '-' || item[0] == '+'))
                               ? 1
                               : 0;
      if (item.size() == digits
          || item.find_first_not_of("0123456789", digits)
                 != std::string::npos) {
        throw ParseError("bad integer '" + item + "' in vector '" + text + "'");
      }
      if (item[0] == '+') {
        item.erase(0, 1);
      }
      coords.emplace_back(item);
      if (comma == std::string::npos) {
        break;
      }
      pos = comma + 1;
    }
    return Point(std::move(coords));
  }

  namespace detail {
    inline bool fits_int64(Integer const& x) {
      return x >= std::numeric_limits<std::int64_t>::min()
             && x <= std::numeric_limits<std::int64_t>::max();
    }
  }  // namespace detail

}  // namespace metab
