#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "stallings/errors.hpp"
#include "stallings/rewriting.hpp"

namespace stallings {

namespace {

std::string word_field(const Word& w) { return w.empty() ? "-" : w.str(); }

Word parse_word_field(std::string_view field, std::size_t line_number) {
  if (field == "-") return Word{};
  try {
    return Word::parse(field);
  } catch (const ParseError& e) {
    throw TraceFormatError("line " + std::to_string(line_number) + ": " +
                           e.what());
  }
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_position(std::string_view field, std::size_t line_number) {
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size() ||
      value > UINT32_MAX) {
    throw TraceFormatError("line " + std::to_string(line_number) +
                           ": bad position '" + std::string(field) + "'");
  }
  return static_cast<std::size_t>(value);
}

std::string_view chomp(const std::string& line) {
  std::string_view v(line);
  if (!v.empty() && v.back() == '\r') v.remove_suffix(1);
  return v;
}

}  // namespace

std::string format_move(const Move& m) {
  switch (m.kind) {
    case MoveKind::FreeReduce:
      return "F " + std::to_string(m.position);
    case MoveKind::FreeExpand:
      return "E " + std::to_string(m.position) + " " + m.letter.to_char();
    case MoveKind::ApplyRelator:
      return "R " + std::to_string(m.position) + " " + word_field(m.lhs()) +
             " " + word_field(m.rhs());
  }
  return {};
}

Move parse_move(std::string_view line, std::size_t line_number) {
  const auto fields = split_fields(line);
  auto fail = [&](const std::string& why) -> Move {
    throw TraceFormatError("line " + std::to_string(line_number) + ": " + why);
  };
  if (fields.empty()) return fail("empty move line");
  const std::string_view tag = fields[0];
  if (tag == "F") {
    if (fields.size() != 2) return fail("F takes one position");
    return Move::reduce(parse_position(fields[1], line_number));
  }
  if (tag == "E") {
    if (fields.size() != 3 || fields[2].size() != 1) {
      return fail("E takes a position and one letter");
    }
    Letter x;
    try {
      x = Letter::from_char(fields[2][0]);
    } catch (const ParseError&) {
      return fail("bad letter in E move");
    }
    return Move::expand(parse_position(fields[1], line_number), x);
  }
  if (tag == "R") {
    if (fields.size() != 4) return fail("R takes a position, lhs and rhs");
    const Word lhs = parse_word_field(fields[2], line_number);
    const Word rhs = parse_word_field(fields[3], line_number);
    const auto id = RewriteTable::instance().find(lhs, rhs);
    if (!id) return fail("(" + lhs.str() + ", " + rhs.str() + ") is not a rewrite pair");
    return Move::relator(parse_position(fields[1], line_number), *id);
  }
  return fail("unknown move tag '" + std::string(tag) + "'");
}

void write_trace(std::ostream& os, const Trace& t) {
  StreamSink sink(os, t.start);
  for (const Move& m : t.moves) sink.on_move(m);
}

Trace read_trace(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw TraceFormatError("missing start word");
  Trace t;
  try {
    t.start = Word::parse(chomp(line));
  } catch (const ParseError& e) {
    throw TraceFormatError(std::string("line 1: ") + e.what());
  }
  std::size_t line_number = 1;
  while (std::getline(is, line)) {
    ++line_number;
    t.moves.push_back(parse_move(chomp(line), line_number));
  }
  return t;
}

VerifyReport verify_trace_stream(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw TraceFormatError("missing start word");
  Word start;
  try {
    start = Word::parse(chomp(line));
  } catch (const ParseError& e) {
    throw TraceFormatError(std::string("line 1: ") + e.what());
  }
  TraceReplayer replayer(start);
  std::size_t line_number = 1;
  while (std::getline(is, line)) {
    ++line_number;
    replayer.apply(parse_move(chomp(line), line_number));
  }
  return replayer.report();
}

StreamSink::StreamSink(std::ostream& os, const Word& start) : os_(os) {
  os_ << start.str() << '\n';
}

void StreamSink::on_move(const Move& m) { os_ << format_move(m) << '\n'; }

}  // namespace stallings
