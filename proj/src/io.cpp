#include "tropvis/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

namespace tropvis {
namespace {

struct Token {
  std::string text;
  std::size_t line;
  std::size_t column;
};

struct Line {
  std::vector<Token> tokens;
  std::size_t number;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  std::size_t number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    Line line{{}, number};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos == raw.size()) break;
      std::size_t end = pos;
      while (end < raw.size() && !std::isspace(static_cast<unsigned char>(raw[end]))) ++end;
      line.tokens.push_back({raw.substr(pos, end - pos), number, pos + 1});
      pos = end;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

enum class Domain { times, plus };

std::size_t parse_order(const Line& line) {
  if (line.tokens.size() != 1)
    throw ParseError("expected the dimension n alone on its line", line.number, 1);
  const Token& t = line.tokens.front();
  std::size_t used = 0;
  unsigned long long n = 0;
  try {
    n = std::stoull(t.text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != t.text.size() || n == 0 || t.text.front() == '-' || t.text.front() == '+')
    throw ParseError("dimension must be a positive integer, got '" + t.text + "'", t.line, t.column);
  return static_cast<std::size_t>(n);
}

Rational times_entry(const Token& t) {
  auto r = parse_rational(t.text);
  if (!r) throw ParseError("malformed entry '" + t.text + "'", t.line, t.column);
  if (sgn(*r) < 0) throw NegativeEntry("negative entry '" + t.text + "'", t.line, t.column);
  return *r;
}

double plus_entry(const Token& t) {
  if (t.text == "-inf") return -std::numeric_limits<double>::infinity();
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(t.text.c_str(), &end);
  if (end != t.text.c_str() + t.text.size() || !std::isfinite(v) || errno == ERANGE)
    throw ParseError("malformed log-domain entry '" + t.text + "'", t.line, t.column);
  return v;
}

struct Body {
  Domain domain = Domain::times;
  std::size_t n = 0;
  std::vector<Token> entries;
};

Body read_body(const std::string& text, bool rows) {
  std::vector<Line> lines = tokenize(text);
  Body body;
  std::size_t at = 0;
  if (at < lines.size() && lines[at].tokens.front().text == "domain:") {
    const Line& l = lines[at];
    if (!rows) throw ParseError("a domain line is only allowed in matrix files", l.number, 1);
    if (l.tokens.size() != 2 || (l.tokens[1].text != "times" && l.tokens[1].text != "plus"))
      throw ParseError("expected 'domain: times' or 'domain: plus'", l.number, 1);
    body.domain = l.tokens[1].text == "plus" ? Domain::plus : Domain::times;
    ++at;
  }
  if (at == lines.size()) throw ParseError("missing dimension line", lines.empty() ? 1 : lines.back().number + 1, 1);
  body.n = parse_order(lines[at++]);
  if (rows) {
    for (std::size_t r = 0; r < body.n; ++r) {
      if (at == lines.size()) {
        std::size_t next = lines.back().number + 1;
        throw ParseError("expected " + std::to_string(body.n) + " rows, got " + std::to_string(r), next, 1);
      }
      const Line& l = lines[at++];
      if (l.tokens.size() != body.n) {
        std::size_t col = l.tokens.size() > body.n ? l.tokens[body.n].column : l.tokens.back().column;
        throw ParseError("row has " + std::to_string(l.tokens.size()) + " entries, expected " +
                             std::to_string(body.n),
                         l.number, col);
      }
      body.entries.insert(body.entries.end(), l.tokens.begin(), l.tokens.end());
    }
    if (at != lines.size()) throw ParseError("unexpected content after the last row", lines[at].number, 1);
  } else {
    for (; at < lines.size(); ++at)
      body.entries.insert(body.entries.end(), lines[at].tokens.begin(), lines[at].tokens.end());
    if (body.entries.size() != body.n) {
      std::size_t line = body.entries.empty() ? lines.back().number : body.entries.back().line;
      throw ParseError("expected " + std::to_string(body.n) + " entries, got " +
                           std::to_string(body.entries.size()),
                       line, 1);
    }
  }
  return body;
}

std::vector<Exact> exact_entries(const Body& body) {
  if (body.domain == Domain::plus)
    throw ModeMismatch("plus-domain input holds logarithms and can only be read in float mode");
  std::vector<Exact> out;
  out.reserve(body.entries.size());
  for (const auto& t : body.entries) out.emplace_back(times_entry(t));
  return out;
}

std::vector<LogReal> float_entries(const Body& body) {
  std::vector<LogReal> out;
  out.reserve(body.entries.size());
  for (const auto& t : body.entries) {
    if (body.domain == Domain::plus) {
      out.push_back(LogReal::from_log(plus_entry(t)));
    } else {
      out.push_back(LogReal::from_log(Exact(times_entry(t)).log()));
    }
  }
  return out;
}

bool wants_exact(const Body& body, ModeRequest mode) {
  if (mode == ModeRequest::automatic) return body.domain == Domain::times;
  return mode == ModeRequest::exact;
}

std::string log_string(double v) {
  if (std::isinf(v)) return "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

AnyMatrix parse_matrix(const std::string& text, ModeRequest mode) {
  Body body = read_body(text, true);
  if (wants_exact(body, mode)) return Matrix<Exact>(body.n, exact_entries(body));
  return Matrix<LogReal>(body.n, float_entries(body));
}

std::variant<Vector<Exact>, Vector<LogReal>> parse_vector(const std::string& text, ModeRequest mode) {
  Body body = read_body(text, false);
  if (wants_exact(body, mode)) return exact_entries(body);
  return float_entries(body);
}

std::string serialize_matrix(const Matrix<Exact>& a) {
  std::string out = std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!a(i, j).is_rational())
        throw ModeMismatch("entry " + a(i, j).to_string() + " is irrational; serialize in float mode");
      if (j) out += ' ';
      out += a(i, j).rational().get_str();
    }
    out += '\n';
  }
  return out;
}

std::string serialize_matrix(const Matrix<LogReal>& a) {
  std::string out = "domain: plus\n" + std::to_string(a.size()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (j) out += ' ';
      out += log_string(a(i, j).log());
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace tropvis
