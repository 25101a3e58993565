#pragma once

// Finitely supported integer combinations of lattice cells.

#include <cstddef>
#include <map>
#include <utility>

#include "error.hpp"
#include "point.hpp"

namespace metab {

  //! Specialize for each cell type that can appear as a chain key. The
  //! specialization provides `static void validate(Key const&, std::size_t
  //! rank)` which throws if the key does not live in Z^rank.
  template <typename Key>
  struct ChainKeyTraits;

  template <>
  struct ChainKeyTraits<Point> {
    static void validate(Point const& p, std::size_t rank) {
      detail::check_rank(p.rank(), rank);
    }
  };

  //! A finitely supported map Key -> nonzero Integer over a fixed rank.
  //!
  //! Zero values are never stored, so two chains are equal iff their maps
  //! are equal. Iteration is in increasing key order.
  template <typename Key>
  class Chain {
   public:
    using key_type       = Key;
    using map_type       = std::map<Key, Integer>;
    using const_iterator = typename map_type::const_iterator;

    explicit Chain(std::size_t rank) : rank_(rank) {}

    std::size_t rank() const noexcept {
      return rank_;
    }
    bool empty() const noexcept {
      return entries_.empty();
    }
    std::size_t size() const noexcept {
      return entries_.size();
    }
    const_iterator begin() const noexcept {
      return entries_.begin();
    }
    const_iterator end() const noexcept {
      return entries_.end();
    }
    map_type const& entries() const noexcept {
      return entries_;
    }

    //! Value at \p key, zero if unsupported.
    Integer at(Key const& key) const {
      auto it = entries_.find(key);
      return it == entries_.end() ? Integer(0) : it->second;
    }

    //! Adds \p delta to the value at \p key.
    Chain& add(Key const& key, Integer const& delta) {
      if (delta == 0) {
        return *this;
      }
      ChainKeyTraits<Key>::validate(key, rank_);
      auto [it, inserted] = entries_.try_emplace(key, delta);
      if (!inserted) {
        it->second += delta;
        if (it->second == 0) {
          entries_.erase(it);
        }
      }
      return *this;
    }

    Chain& operator+=(Chain const& other) {
      detail::check_rank(rank_, other.rank_);
      for (auto const& [key, value] : other.entries_) {
        add(key, value);
      }
      return *this;
    }

    Chain& operator-=(Chain const& other) {
      detail::check_rank(rank_, other.rank_);
      for (auto const& [key, value] : other.entries_) {
        add(key, -value);
      }
      return *this;
    }

    Chain& operator*=(Integer const& s) {
      if (s == 0) {
        entries_.clear();
      } else {
        for (auto& kv : entries_) {
          kv.second *= s;
        }
      }
      return *this;
    }

    friend Chain operator+(Chain lhs, Chain const& rhs) {
      return lhs += rhs;
    }
    friend Chain operator-(Chain lhs, Chain const& rhs) {
      return lhs -= rhs;
    }
    friend Chain operator-(Chain c) {
      for (auto& kv : c.entries_) {
        kv.second = -kv.second;
      }
      return c;
    }
    friend Chain operator*(Integer const& s, Chain c) {
      return c *= s;
    }

    friend bool operator==(Chain const& a, Chain const& b) {
      return a.rank_ == b.rank_ && a.entries_ == b.entries_;
    }

    //! Sum of all values.
    Integer total() const {
      Integer sum = 0;
      for (auto const& kv : entries_) {
        sum += kv.second;
      }
      return sum;
    }

   private:
    std::size_t rank_;
    map_type    entries_;
  };

  //! A 0-chain: finitely supported integer combination of vertices.
  using VertexChain = Chain<Point>;

}  // namespace metab
