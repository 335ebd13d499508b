#include "walkalg/forest.hpp"

#include <algorithm>
#include <sstream>

namespace walkalg {

namespace {

std::vector<std::int64_t> flat_key(const std::vector<Walk>& members) {
  std::vector<std::int64_t> key;
  std::size_t total = members.size();
  for (const Walk& w : members) total += w.num_vertices();
  key.reserve(total);
  for (const Walk& w : members) {
    key.push_back(static_cast<std::int64_t>(w.degree()));
    for (std::size_t i = 0; i < w.num_vertices(); ++i) key.push_back(w[i]);
  }
  return key;
}

}  // namespace

void Forest::build_key() { key_ = flat_key(members_); }

void MultisetForest::build_key() { key_ = flat_key(members_); }

std::size_t Forest::degree() const {
  std::size_t d = 0;
  for (const Walk& w : members_) d += w.degree();
  return d;
}

Forest operator*(const Forest& a, const Forest& b) {
  std::vector<Walk> m = a.members();
  m.insert(m.end(), b.members().begin(), b.members().end());
  return Forest(std::move(m));
}

MultisetForest::MultisetForest(std::vector<Walk> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  build_key();
}

std::size_t MultisetForest::degree() const {
  std::size_t d = 0;
  for (const Walk& w : members_) d += w.degree();
  return d;
}

MultisetForest operator*(const MultisetForest& a, const MultisetForest& b) {
  std::vector<Walk> m = a.members();
  m.insert(m.end(), b.members().begin(), b.members().end());
  return MultisetForest(std::move(m));
}

MultisetForest to_multiset(const Forest& f) {
  return MultisetForest(f.members());
}

namespace {

std::string join_members(const std::vector<Walk>& members) {
  if (members.empty()) return "()";
  std::ostringstream out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i > 0) out << '|';
    out << to_string(members[i]);
  }
  return out.str();
}

}  // namespace

std::string to_string(const Forest& f) { return join_members(f.members()); }

std::string to_string(const MultisetForest& m) {
  return join_members(m.members());
}

}  // namespace walkalg
