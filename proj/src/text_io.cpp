#include "walkalg/text_io.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace walkalg {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c);
  });
}

VertexId parse_label(const std::string& token) {
  if (!all_digits(token))
    throw std::invalid_argument("parse_walk: bad vertex label '" + token +
                                "'");
  try {
    return static_cast<VertexId>(std::stoll(token));
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("parse_walk: vertex label out of range '" +
                                token + "'");
  }
}

}  // namespace

Walk parse_walk(const std::string& text) {
  auto is_space = [](unsigned char c) { return std::isspace(c); };
  auto begin = std::find_if_not(text.begin(), text.end(), is_space);
  auto end = std::find_if_not(text.rbegin(), text.rend(), is_space).base();
  if (begin >= end) throw std::invalid_argument("parse_walk: empty input");
  std::string body(begin, end);

  std::vector<VertexId> labels;
  if (all_digits(body)) {
    for (char c : body) labels.push_back(c - '0');
    return Walk(std::move(labels));
  }
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    labels.push_back(parse_label(token));
    token.clear();
  };
  for (char c : body) {
    if (c == ',' || c == '-' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      token += c;
  }
  flush();
  if (labels.empty())
    throw std::invalid_argument("parse_walk: no vertex labels in input");
  return Walk(std::move(labels));
}

}  // namespace walkalg
