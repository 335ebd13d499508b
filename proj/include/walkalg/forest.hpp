#ifndef WALKALG_FOREST_HPP
#define WALKALG_FOREST_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "walkalg/walk.hpp"

namespace walkalg {

// An ordered word of walks. The empty word is the unit of the word
// concatenation product. Degree is the sum of member degrees.
//
// Comparisons are hot (linear combinations sort on them), so each word
// precomputes a flat key: every member contributes its degree followed by
// its labels. The degree prefix makes the stream parse unambiguously, and
// lexicographic key order coincides with the member-by-member order.
class Forest {
 public:
  Forest() = default;
  explicit Forest(std::vector<Walk> members) : members_(std::move(members)) {
    build_key();
  }
  explicit Forest(Walk w) {
    members_.push_back(std::move(w));
    build_key();
  }
  static Forest unit() { return Forest(); }

  bool is_unit() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  std::size_t degree() const;
  const Walk& operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Walk>& members() const { return members_; }
  const std::vector<std::int64_t>& key() const { return key_; }

  friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
    return a.key_ <=> b.key_;
  }
  friend bool operator==(const Forest& a, const Forest& b) {
    return a.key_ == b.key_;
  }

 private:
  void build_key();

  std::vector<Walk> members_;
  std::vector<std::int64_t> key_;
};

// Word concatenation.
Forest operator*(const Forest& a, const Forest& b);

// A multiset of walks, kept in the canonical order (degree, vertex
// sequence). Image of a Forest once the member order is forgotten.
class MultisetForest {
 public:
  MultisetForest() = default;
  explicit MultisetForest(std::vector<Walk> members);
  static MultisetForest unit() { return MultisetForest(); }

  bool is_unit() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  std::size_t degree() const;
  const std::vector<Walk>& members() const { return members_; }

  friend std::strong_ordering operator<=>(const MultisetForest& a,
                                          const MultisetForest& b) {
    return a.key_ <=> b.key_;
  }
  friend bool operator==(const MultisetForest& a, const MultisetForest& b) {
    return a.key_ == b.key_;
  }

 private:
  void build_key();

  std::vector<Walk> members_;  // sorted
  std::vector<std::int64_t> key_;
};

// Commutative product: multiset union.
MultisetForest operator*(const MultisetForest& a, const MultisetForest& b);

MultisetForest to_multiset(const Forest& f);

// "11|233" style rendering; the empty word renders as "()".
std::string to_string(const Forest& f);
std::string to_string(const MultisetForest& m);

}  // namespace walkalg

#endif  // WALKALG_FOREST_HPP
