#ifndef WALKALG_TEXT_IO_HPP
#define WALKALG_TEXT_IO_HPP

#include <string>

#include "walkalg/walk.hpp"

namespace walkalg {

// Parse a walk from text. A token of digits only is read one vertex per
// digit ("12321"); otherwise the text is split on commas, spaces, or
// dashes into integer labels ("10,2,10" or "3-45-3"). Throws
// std::invalid_argument on empty input or malformed labels.
Walk parse_walk(const std::string& text);

}  // namespace walkalg

#endif  // WALKALG_TEXT_IO_HPP
