#include "shakelink/pd_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <vector>

namespace shakelink {

namespace {

struct Token {
  std::string text;
  int col;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
           line[i] != '#') {
      ++i;
    }
    toks.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return toks;
}

int parse_int(const Token& tok, int line_no, const char* what) {
  int value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line_no, tok.col, std::string("expected ") + what + ", got '" + tok.text + "'");
  }
  return value;
}

int parse_sign_token(const Token& tok, int line_no) {
  if (tok.text == "sign=+1") return 1;
  if (tok.text == "sign=-1") return -1;
  throw ParseError(line_no, tok.col, "expected sign=+1 or sign=-1, got '" + tok.text + "'");
}

std::string format_sign(int sign) { return sign > 0 ? "sign=+1" : "sign=-1"; }

std::string emit_crossings(const std::vector<Crossing>& crossings,
                           const std::map<Arc, Arc>& relabel) {
  std::ostringstream out;
  for (const Crossing& c : crossings) {
    out << "X " << relabel.at(c.in_under()) << ' ' << relabel.at(c.out_under()) << ' '
        << relabel.at(c.in_over()) << ' ' << relabel.at(c.out_over()) << ' '
        << format_sign(c.sign) << '\n';
  }
  return out.str();
}

}  // namespace

ParsedDiagram parse_pd(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_no = 0;

  bool have_header = false;
  bool is_string_link = false;
  int declared_m = -1;

  std::vector<Crossing> crossings;
  std::vector<Arc> lone_arcs;
  std::map<int, std::pair<Arc, int>> bottom_at;  // position -> (arc, line)
  std::map<int, std::pair<Arc, int>> top_at;

  while (std::getline(in, line)) {
    ++line_no;
    std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const Token& head = toks[0];

    if (!have_header) {
      if (head.text != "link" && head.text != "stringlink") {
        throw ParseError(line_no, head.col, "expected 'link' or 'stringlink' header");
      }
      if (toks.size() != 2 || toks[1].text.rfind("m=", 0) != 0) {
        throw ParseError(line_no, head.col, "header must read '" + head.text + " m=<count>'");
      }
      Token count{toks[1].text.substr(2), toks[1].col + 2};
      declared_m = parse_int(count, line_no, "component count");
      if (declared_m < 0) {
        throw ParseError(line_no, count.col, "component count must be nonnegative");
      }
      is_string_link = head.text == "stringlink";
      have_header = true;
      continue;
    }

    if (head.text == "X") {
      if (toks.size() != 6) {
        throw ParseError(line_no, head.col,
                         "crossing line needs four arcs and a sign: X <in-under> <out-under> "
                         "<in-over> <out-over> sign=<+1|-1>");
      }
      Arc a = parse_int(toks[1], line_no, "arc label");
      Arc b = parse_int(toks[2], line_no, "arc label");
      Arc c = parse_int(toks[3], line_no, "arc label");
      Arc d = parse_int(toks[4], line_no, "arc label");
      int sign = parse_sign_token(toks[5], line_no);
      Arc arcs[4] = {a, b, c, d};
      for (std::size_t k = 0; k < 4; ++k) {
        if (arcs[k] <= 0) {
          throw ParseError(line_no, toks[k + 1].col, "arc labels must be positive");
        }
      }
      crossings.push_back(Crossing::from_tuple(a, b, c, d, sign));
      continue;
    }

    if (head.text == "O") {
      if (is_string_link) {
        throw ParseError(line_no, head.col,
                         "crossing-free closed components cannot occur in a string link");
      }
      if (toks.size() != 2) {
        throw ParseError(line_no, head.col, "expected O <arc>");
      }
      Arc a = parse_int(toks[1], line_no, "arc label");
      if (a <= 0) throw ParseError(line_no, toks[1].col, "arc labels must be positive");
      lone_arcs.push_back(a);
      continue;
    }

    if (head.text == "E") {
      if (!is_string_link) {
        throw ParseError(line_no, head.col, "boundary lines only apply to string links");
      }
      if (toks.size() != 4 || (toks[1].text != "bottom" && toks[1].text != "top")) {
        throw ParseError(line_no, head.col, "expected E bottom|top <position> <arc>");
      }
      int pos = parse_int(toks[2], line_no, "strand position");
      Arc a = parse_int(toks[3], line_no, "arc label");
      if (pos < 1 || pos > declared_m) {
        throw ParseError(line_no, toks[2].col,
                         "strand position out of range 1.." + std::to_string(declared_m));
      }
      if (a <= 0) throw ParseError(line_no, toks[3].col, "arc labels must be positive");
      auto& table = toks[1].text == "bottom" ? bottom_at : top_at;
      auto [it, fresh] = table.emplace(pos, std::make_pair(a, line_no));
      if (!fresh) {
        throw ParseError(line_no, toks[2].col,
                         toks[1].text + " endpoint for position " + std::to_string(pos) +
                             " already set on line " + std::to_string(it->second.second));
      }
      continue;
    }

    throw ParseError(line_no, head.col, "unknown line kind '" + head.text + "'");
  }

  if (!have_header) throw ParseError(line_no + 1, 1, "missing 'link' or 'stringlink' header");

  if (!is_string_link) {
    return LinkDiagram::make(std::move(crossings), std::move(lone_arcs), declared_m);
  }

  std::vector<Arc> bottom, top;
  for (int pos = 1; pos <= declared_m; ++pos) {
    auto bit = bottom_at.find(pos);
    auto tit = top_at.find(pos);
    if (bit == bottom_at.end() || tit == top_at.end()) {
      throw ParseError(line_no + 1, 1,
                       "missing " + std::string(bit == bottom_at.end() ? "bottom" : "top") +
                           " endpoint for strand position " + std::to_string(pos));
    }
    bottom.push_back(bit->second.first);
    top.push_back(tit->second.first);
  }
  return StringLinkDiagram::make(std::move(crossings), std::move(bottom), std::move(top));
}

LinkDiagram parse_link(const std::string& text) {
  ParsedDiagram p = parse_pd(text);
  if (auto* d = std::get_if<LinkDiagram>(&p)) return std::move(*d);
  throw DiagramError("expected a closed link diagram, got a string link");
}

StringLinkDiagram parse_string_link(const std::string& text) {
  ParsedDiagram p = parse_pd(text);
  if (auto* s = std::get_if<StringLinkDiagram>(&p)) return std::move(*s);
  throw DiagramError("expected a string link diagram, got a closed link");
}

std::string emit_pd(const LinkDiagram& d) {
  std::map<Arc, Arc> relabel;
  Arc next = 1;
  for (const auto& comp : d.components()) {
    for (Arc a : comp) relabel[a] = next++;
  }
  std::ostringstream out;
  out << "link m=" << d.m() << '\n';
  out << emit_crossings(d.crossings(), relabel);
  std::vector<Arc> lone;
  for (Arc a : d.lone_arcs()) lone.push_back(relabel.at(a));
  std::sort(lone.begin(), lone.end());
  for (Arc a : lone) out << "O " << a << '\n';
  return out.str();
}

std::string emit_pd(const StringLinkDiagram& s) {
  std::map<Arc, Arc> relabel;
  Arc next = 1;
  for (const auto& strand : s.strands()) {
    for (Arc a : strand) relabel[a] = next++;
  }
  std::ostringstream out;
  out << "stringlink m=" << s.m() << '\n';
  out << emit_crossings(s.crossings(), relabel);
  for (std::size_t i = 0; i < s.bottom().size(); ++i) {
    out << "E bottom " << i + 1 << ' ' << relabel.at(s.bottom()[i]) << '\n';
  }
  for (std::size_t i = 0; i < s.top().size(); ++i) {
    out << "E top " << i + 1 << ' ' << relabel.at(s.top()[i]) << '\n';
  }
  return out.str();
}

}  // namespace shakelink
