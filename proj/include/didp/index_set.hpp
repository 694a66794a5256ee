#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "didp/errors.hpp"

namespace didp {

// Fixed-width bitset over the object indices {0, ..., n-1} of one object
// type. The width is the universe size, which makes complement well-defined
// and keeps hashing cheap for the solver's state registry.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static IndexSet full(int universe) {
    IndexSet s(universe);
    for (int i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  int universe() const { return universe_; }

  bool contains(std::int64_t i) const {
    if (i < 0 || i >= universe_) return false;
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void insert(std::int64_t i) {
    check_range(i);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }

  void erase(std::int64_t i) {
    check_range(i);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }

  IndexSet& operator|=(const IndexSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  IndexSet& operator&=(const IndexSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }

  IndexSet& operator-=(const IndexSet& o) {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend IndexSet operator|(IndexSet a, const IndexSet& b) { return a |= b; }
  friend IndexSet operator&(IndexSet a, const IndexSet& b) { return a &= b; }
  friend IndexSet operator-(IndexSet a, const IndexSet& b) { return a -= b; }

  IndexSet complement() const {
    IndexSet r(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.mask_tail();
    return r;
  }

  bool subset_of(const IndexSet& o) const {
    check_same(o);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (words_[k] & ~o.words_[k]) return false;
    }
    return true;
  }

  friend bool operator==(const IndexSet& a, const IndexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return !(a == b); }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        out.push_back(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        int bit = std::countr_zero(w);
        fn(static_cast<int>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  std::size_t hash() const {
    std::size_t h = std::hash<int>{}(universe_);
    for (auto w : words_) {
      h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }

  std::string str() const {
    std::string out = "{";
    bool first = true;
    for_each([&](int i) {
      if (!first) out += ", ";
      out += std::to_string(i);
      first = false;
    });
    out += "}";
    return out;
  }

 private:
  void check_range(std::int64_t i) const {
    if (i < 0 || i >= universe_) {
      throw EvalError("set element " + std::to_string(i) + " outside universe of size " +
                      std::to_string(universe_));
    }
  }

  void check_same(const IndexSet& o) const {
    if (universe_ != o.universe_) {
      throw EvalError("set operation on mismatched universes (" + std::to_string(universe_) +
                      " vs " + std::to_string(o.universe_) + ")");
    }
  }

  void mask_tail() {
    int tail = universe_ & 63;
    if (tail != 0 && !words_.empty()) {
      words_.back() &= (std::uint64_t{1} << tail) - 1;
    }
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace didp
