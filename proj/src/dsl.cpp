#include <cctype>
#include <map>
#include <set>

#include "quivermod/errors.hpp"
#include "quivermod/io.hpp"

namespace quivermod {

namespace {

enum class Tok { Ident, Number, Colon, Arrow, Star, Plus, Minus, Equals, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  int column = 0;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

bool is_trivial_name(const std::string& s) {
  if (s.size() < 3 || s[0] != 'e' || s[1] != '_') return false;
  for (std::size_t i = 2; i < s.size(); ++i)
    if (!digit(s[i])) return false;
  return true;
}

std::vector<Token> lex(std::string_view line, int line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    const int col = static_cast<int>(i) + 1;
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (ident_start(c)) {
      std::size_t j = i;
      while (j < line.size() && ident_char(line[j])) ++j;
      out.push_back({Tok::Ident, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (digit(c)) {
      std::size_t j = i;
      while (j < line.size() && digit(line[j])) ++j;
      if (j < line.size() && line[j] == '/') {
        ++j;
        if (j >= line.size() || !digit(line[j]))
          throw SyntaxError(ErrorCode::Syntax, line_no, static_cast<int>(j) + 1, "expected denominator");
        while (j < line.size() && digit(line[j])) ++j;
      }
      out.push_back({Tok::Number, std::string(line.substr(i, j - i)), col});
      i = j;
    } else if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", col});
      i += 2;
    } else {
      Tok kind;
      switch (c) {
        case ':': kind = Tok::Colon; break;
        case '*': kind = Tok::Star; break;
        case '+': kind = Tok::Plus; break;
        case '-': kind = Tok::Minus; break;
        case '=': kind = Tok::Equals; break;
        default:
          throw SyntaxError(ErrorCode::Syntax, line_no, col, std::string("unexpected character '") + c + "'");
      }
      out.push_back({kind, std::string(1, c), col});
      ++i;
    }
  }
  out.push_back({Tok::End, "", static_cast<int>(line.size()) + 1});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::End ? "end of line" : "'" + t.text + "'"; }

struct PositionedTerm {
  RawTerm term;
  int column = 0;
  std::vector<int> name_columns;
};

struct PositionedRelation {
  int line = 0;
  std::vector<PositionedTerm> terms;
};

class LineParser {
 public:
  LineParser(std::vector<Token> tokens, int line_no) : tokens_(std::move(tokens)), line_(line_no) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& expected) const {
    throw SyntaxError(ErrorCode::Syntax, line_, t.column, "expected " + expected + ", found " + describe(t));
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(peek(), what);
    return next();
  }

  std::int64_t integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && peek().kind == Tok::Minus) {
      next();
      negative = true;
    }
    const Token& t = expect(Tok::Number, "integer");
    if (t.text.find('/') != std::string::npos) fail(t, "integer");
    std::int64_t v = 0;
    try {
      v = std::stoll(t.text);
    } catch (const std::out_of_range&) {
      throw SyntaxError(ErrorCode::Syntax, line_, t.column, "integer out of range");
    }
    return negative ? -v : v;
  }

  void end() {
    if (peek().kind != Tok::End) fail(peek(), "end of line");
  }

  PositionedTerm term(bool negative) {
    PositionedTerm out;
    out.column = peek().column;
    Rational coefficient = 1;
    if (peek().kind == Tok::Number) {
      coefficient = parse_rational(next().text);
      expect(Tok::Star, "'*' after coefficient");
    }
    out.term.coefficient = negative ? Rational(-coefficient) : coefficient;
    for (;;) {
      const Token& name = expect(Tok::Ident, "arrow name");
      out.term.written_arrows.push_back(name.text);
      out.name_columns.push_back(name.column);
      if (peek().kind != Tok::Star) break;
      next();
    }
    for (std::size_t k = 0; k < out.term.written_arrows.size(); ++k) {
      const std::string& n = out.term.written_arrows[k];
      if (!is_trivial_name(n)) continue;
      if (out.term.written_arrows.size() != 1)
        throw SyntaxError(ErrorCode::Syntax, line_, out.name_columns[k], "trivial path '" + n + "' must stand alone");
      try {
        out.term.trivial_vertex = static_cast<VertexId>(std::stoull(n.substr(2)));
      } catch (const std::out_of_range&) {
        throw SyntaxError(ErrorCode::Syntax, line_, out.name_columns[k], "vertex index out of range");
      }
      out.term.written_arrows.clear();
    }
    return out;
  }

  PositionedRelation relation() {
    PositionedRelation rel;
    rel.line = line_;
    bool negative = false;
    if (peek().kind == Tok::Minus) {
      next();
      negative = true;
    } else if (peek().kind == Tok::Plus) {
      next();
    }
    rel.terms.push_back(term(negative));
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      negative = next().kind == Tok::Minus;
      rel.terms.push_back(term(negative));
    }
    end();
    return rel;
  }

  std::map<std::int64_t, std::int64_t> assignments(bool allow_sign) {
    std::map<std::int64_t, std::int64_t> out;
    do {
      const Token& at = peek();
      const std::int64_t key = integer(false);
      expect(Tok::Equals, "'='");
      const std::int64_t value = integer(allow_sign);
      if (!out.emplace(key, value).second)
        throw SyntaxError(ErrorCode::Syntax, line_, at.column, "vertex " + std::to_string(key) + " assigned twice");
    } while (peek().kind != Tok::End);
    return out;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

struct Assigned {
  int line = 0;
  std::map<std::int64_t, std::int64_t> values;
};

std::vector<std::int64_t> complete(const Assigned& a, std::int64_t vertices, const std::string& what) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(vertices), 0);
  std::set<std::int64_t> seen;
  for (const auto& [k, v] : a.values) {
    if (k < 0 || k >= vertices)
      throw SyntaxError(ErrorCode::Syntax, a.line, 1, what + " names vertex " + std::to_string(k) + " outside 0.." +
                                                         std::to_string(vertices - 1));
    out[static_cast<std::size_t>(k)] = v;
    seen.insert(k);
  }
  if (static_cast<std::int64_t>(seen.size()) != vertices)
    throw SyntaxError(ErrorCode::Syntax, a.line, 1, what + " must give a value for every vertex");
  return out;
}

std::string coefficient_prefix(const Rational& magnitude) {
  return magnitude == 1 ? std::string() : to_string(magnitude) + "*";
}

}  // namespace

QuiverFile parse_quiver_file(std::string_view text) {
  RawQuiver raw;
  std::optional<int> name_line, vertices_line;
  std::vector<int> arrow_lines;
  std::vector<PositionedRelation> relations;
  std::optional<Assigned> dim, theta;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view line = text.substr(start, stop - start);
    ++line_no;
    start = stop + 1;

    LineParser p(lex(line, line_no), line_no);
    if (p.peek().kind == Tok::End) continue;
    const Token keyword = p.next();
    if (keyword.kind != Tok::Ident) p.fail(keyword, "a keyword");
    if (keyword.text == "quiver") {
      if (name_line) throw SyntaxError(ErrorCode::Syntax, line_no, keyword.column, "second 'quiver' line");
      raw.name = p.expect(Tok::Ident, "quiver name").text;
      p.end();
      name_line = line_no;
    } else if (keyword.text == "vertices") {
      if (vertices_line) throw SyntaxError(ErrorCode::Syntax, line_no, keyword.column, "second 'vertices' line");
      raw.vertex_count = p.integer(false);
      p.end();
      vertices_line = line_no;
    } else if (keyword.text == "arrow") {
      const Token name = p.expect(Tok::Ident, "arrow name");
      if (is_trivial_name(name.text))
        throw SyntaxError(ErrorCode::Syntax, line_no, name.column, "'" + name.text + "' is reserved for trivial paths");
      p.expect(Tok::Colon, "':'");
      const std::int64_t tail = p.integer(false);
      p.expect(Tok::Arrow, "'->'");
      const std::int64_t head = p.integer(false);
      p.end();
      raw.arrows.push_back({name.text, tail, head});
      arrow_lines.push_back(line_no);
    } else if (keyword.text == "relation") {
      relations.push_back(p.relation());
    } else if (keyword.text == "dim" || keyword.text == "theta") {
      auto& slot = keyword.text == "dim" ? dim : theta;
      if (slot) throw SyntaxError(ErrorCode::Syntax, line_no, keyword.column, "second '" + keyword.text + "' line");
      slot = Assigned{line_no, p.assignments(keyword.text == "theta")};
    } else {
      throw SyntaxError(ErrorCode::Syntax, line_no, keyword.column, "unknown keyword '" + keyword.text + "'");
    }
    if (stop == text.size()) break;
  }
  if (!name_line) throw SyntaxError(ErrorCode::Syntax, line_no, 1, "missing 'quiver' line");
  if (!vertices_line) throw SyntaxError(ErrorCode::Syntax, line_no, 1, "missing 'vertices' line");

  std::map<std::string, const RawArrow*> by_name;
  for (const auto& a : raw.arrows) by_name.emplace(a.name, &a);
  for (const auto& rel : relations) {
    for (const auto& t : rel.terms) {
      const auto& names = t.term.written_arrows;
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (!by_name.contains(names[k]))
          throw SyntaxError(ErrorCode::UnknownArrow, rel.line, t.name_columns[k], "unknown arrow '" + names[k] + "'");
      }
      for (std::size_t k = 0; k + 1 < names.size(); ++k) {
        if (by_name[names[k + 1]]->head != by_name[names[k]]->tail)
          throw SyntaxError(ErrorCode::NoncomposableTerm, rel.line, t.name_columns[k],
                            "'" + names[k] + "' cannot follow '" + names[k + 1] + "'");
      }
    }
    RawRelation r;
    for (const auto& t : rel.terms) r.terms.push_back(t.term);
    raw.relations.push_back(std::move(r));
  }

  QuiverFile out;
  out.quiver = std::make_shared<const QuiverPresentation>(validate_presentation(raw));
  if (dim) {
    const auto values = complete(*dim, raw.vertex_count, "dim");
    for (auto v : values)
      if (v < 0) throw SyntaxError(ErrorCode::Syntax, dim->line, 1, "dimensions must be non-negative");
    out.dimension = DimensionVector(values);
  }
  if (theta) out.theta = Theta(complete(*theta, raw.vertex_count, "theta"));
  return out;
}

std::string emit_quiver_file(const QuiverPresentation& quiver, const std::optional<DimensionVector>& dimension,
                             const std::optional<Theta>& theta) {
  std::string out = "quiver " + quiver.name() + "\n";
  out += "vertices " + std::to_string(quiver.vertex_count()) + "\n";
  for (const auto& a : quiver.arrows())
    out += "arrow " + a.name + ": " + std::to_string(a.tail) + " -> " + std::to_string(a.head) + "\n";
  for (const auto& rel : quiver.relations()) {
    out += "relation ";
    for (std::size_t k = 0; k < rel.terms.size(); ++k) {
      const auto& t = rel.terms[k];
      const bool negative = t.coefficient < 0;
      if (k == 0) out += negative ? "-" : "";
      else out += negative ? " - " : " + ";
      out += coefficient_prefix(negative ? Rational(-t.coefficient) : t.coefficient);
      out += quiver.path_string(t.path);
    }
    out += "\n";
  }
  const auto assignments = [&](const std::string& keyword, const std::vector<std::int64_t>& values) {
    out += keyword;
    for (std::size_t i = 0; i < values.size(); ++i) out += " " + std::to_string(i) + "=" + std::to_string(values[i]);
    out += "\n";
  };
  if (dimension) assignments("dim", dimension->values());
  if (theta) assignments("theta", theta->weights());
  return out;
}

}  // namespace quivermod
