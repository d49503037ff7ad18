#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "shakelink/diagram.hpp"

namespace shakelink {

// Diagram text format.
//
//   link m=2            header: closed link with declared component count
//   stringlink m=3      header: string link with declared strand count
//   X 1 2 3 4 sign=+1   crossing, arcs in order: incoming under, outgoing
//                       under, incoming over, outgoing over
//   O 7                 crossing-free closed component using arc 7
//   E bottom 1 4        string link boundary: strand position 1 meets the
//   E top 1 9           bottom edge at arc 4 and the top edge at arc 9
//   # comment           comments run to end of line; blank lines ignored
//
// Arc labels are positive integers. Emission relabels arcs canonically, so
// parse(emit(d)) reproduces d up to a consistent renaming of arcs.

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line_, int col_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(col_) + ": " +
                           what_),
        line(line_),
        col(col_) {}
};

using ParsedDiagram = std::variant<LinkDiagram, StringLinkDiagram>;

ParsedDiagram parse_pd(const std::string& text);

// Convenience wrappers that reject the other diagram kind.
LinkDiagram parse_link(const std::string& text);
StringLinkDiagram parse_string_link(const std::string& text);

std::string emit_pd(const LinkDiagram& d);
std::string emit_pd(const StringLinkDiagram& s);

}  // namespace shakelink
