#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rlcode {

/// Exact membership grade in [0,1].
using Grade = boost::rational<std::int64_t>;

/// Parses `p/q` or an integer. Throws ParseError on malformed text, a zero
/// denominator, or a value outside [0,1].
Grade parse_grade(std::string_view text);

/// Parses a rational without the [0,1] restriction.
Grade parse_rational(std::string_view text);

/// `p/q` in lowest terms, or `p` when the denominator is 1.
std::string format_grade(const Grade& g);

}  // namespace rlcode
