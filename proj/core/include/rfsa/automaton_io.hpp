#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rfsa/automaton.hpp"

namespace rfsa {

/// Line-based text format:
///
///     # comment
///     alphabet: a b
///     states: 3
///     initial: 0
///     final: 0 2
///     trans: 0 a 1
///
/// Several ids on `initial:` or repeated `trans:` lines for one
/// (state, symbol) pair describe an NFA. Unknown keys, repeated header
/// lines and out-of-range ids raise ParseError carrying the line number.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(std::string_view text);

/// Inverse of parse_automaton; transitions are listed by state, symbol and
/// target in increasing order.
std::string format_automaton(const Automaton& a);

} // namespace rfsa
