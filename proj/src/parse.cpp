#include "imp/parse.hpp"

#include <cctype>
#include <optional>
#include <sstream>

namespace imp {

namespace {

std::string describe(const std::vector<std::string>& expected, const std::string& found) {
  std::ostringstream out;
  out << "expected ";
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (k > 0) out << (k + 1 == expected.size() ? " or " : ", ");
    out << expected[k];
  }
  out << ", found " << found;
  return out.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       std::string found)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                         describe(expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok {
  Ident,
  Number,
  Skip,
  While,
  Do,
  Done,
  Plus,
  Less,
  Semi,
  Becomes,
  LBrace,
  RBrace,
  LBracket,
  RBracket,
  LParen,
  RParen,
  Comma,
  And,
  Tilde,
  Arrow,
  End,
};

std::string spelling(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::Skip: return "'skip'";
    case Tok::While: return "'while'";
    case Tok::Do: return "'do'";
    case Tok::Done: return "'done'";
    case Tok::Plus: return "'+'";
    case Tok::Less: return "'<'";
    case Tok::Semi: return "';'";
    case Tok::Becomes: return "':='";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::And: return "'/\\'";
    case Tok::Tilde: return "'~'";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t pos = 0;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  };
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  auto is_word = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
  };

  while (pos < src.size()) {
    char c = src[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const std::size_t start_line = line;
    const std::size_t start_col = col;
    auto emit = [&](Tok kind, std::size_t len) {
      out.push_back({kind, std::string(src.substr(pos, len)), start_line, start_col});
      advance(len);
    };
    auto next_is = [&](char expect) { return pos + 1 < src.size() && src[pos + 1] == expect; };

    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (pos + len < src.size() && is_word(src[pos + len])) ++len;
      std::string_view word = src.substr(pos, len);
      Tok kind = Tok::Ident;
      if (word == "skip") kind = Tok::Skip;
      else if (word == "while") kind = Tok::While;
      else if (word == "do") kind = Tok::Do;
      else if (word == "done") kind = Tok::Done;
      emit(kind, len);
    } else if (is_digit(c) || (c == '-' && pos + 1 < src.size() && is_digit(src[pos + 1]))) {
      std::size_t len = 1;
      while (pos + len < src.size() && is_digit(src[pos + len])) ++len;
      emit(Tok::Number, len);
    } else if (c == '-' && next_is('>')) {
      emit(Tok::Arrow, 2);
    } else if (c == ':' && next_is('=')) {
      emit(Tok::Becomes, 2);
    } else if (c == '/' && next_is('\\')) {
      emit(Tok::And, 2);
    } else {
      Tok kind;
      switch (c) {
        case '+': kind = Tok::Plus; break;
        case '<': kind = Tok::Less; break;
        case ';': kind = Tok::Semi; break;
        case '{': kind = Tok::LBrace; break;
        case '}': kind = Tok::RBrace; break;
        case '[': kind = Tok::LBracket; break;
        case ']': kind = Tok::RBracket; break;
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case '~': kind = Tok::Tilde; break;
        default:
          throw ParseError(start_line, start_col, {"a token"},
                           "character '" + std::string(1, c) + "'");
      }
      emit(kind, 1);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  template <class F>
  auto whole(F&& parse_fn) {
    auto result = parse_fn();
    expect_one(Tok::End);
    return result;
  }

  AExpr aexpr() {
    AExpr acc = aterm();
    while (accept(Tok::Plus)) acc = plus(std::move(acc), aterm());
    return acc;
  }

  BExpr bexpr() {
    AExpr lhs = aexpr();
    expect_one(Tok::Less);
    return lt(std::move(lhs), aexpr());
  }

  Assert assertion() {
    Assert first = aconj();
    if (!accept(Tok::And)) return first;
    return conj(std::move(first), assertion());
  }

  Condition condition() {
    Assert hyp = assertion();
    expect_one(Tok::Arrow);
    return Condition{std::move(hyp), assertion()};
  }

  AInstr ainstr() {
    AInstr first = aitem();
    if (!accept(Tok::Semi)) return first;
    return aseq(std::move(first), ainstr());
  }

  Instr instr() {
    Instr first = item();
    if (!accept(Tok::Semi)) return first;
    return seq(std::move(first), instr());
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  [[noreturn]] void fail(std::vector<Tok> expected) const {
    std::vector<std::string> names;
    names.reserve(expected.size());
    for (Tok t : expected) names.push_back(spelling(t));
    const Token& t = peek();
    std::string found = t.kind == Tok::End ? spelling(Tok::End) : "'" + t.text + "'";
    throw ParseError(t.line, t.column, std::move(names), std::move(found));
  }

  const Token& expect_one(Tok kind) {
    if (peek().kind != kind) fail({kind});
    return tokens_[pos_++];
  }

  AExpr aterm() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        ++pos_;
        return num(*parse_integer(t.text));
      case Tok::Ident:
        ++pos_;
        return var(t.text);
      case Tok::LParen: {
        ++pos_;
        AExpr inner = aexpr();
        expect_one(Tok::RParen);
        return inner;
      }
      default:
        fail({Tok::Number, Tok::Ident, Tok::LParen});
    }
  }

  Assert aconj() {
    const Token& t = peek();
    if (t.kind == Tok::Tilde) {
      ++pos_;
      return negate(aconj());
    }
    if (t.kind == Tok::Ident && tokens_[pos_ + 1].kind == Tok::LParen) return pred_app();
    if (t.kind == Tok::LParen) {
      // Either a parenthesised arithmetic operand of a comparison or a
      // parenthesised assertion; try the comparison first.
      const std::size_t saved = pos_;
      try {
        return test(bexpr());
      } catch (const ParseError& first_error) {
        const std::size_t comparison_reach = reach(first_error);
        pos_ = saved;
        try {
          ++pos_;
          Assert inner = assertion();
          expect_one(Tok::RParen);
          return inner;
        } catch (const ParseError& second_error) {
          if (reach(second_error) >= comparison_reach) throw;
          throw first_error;
        }
      }
    }
    if (t.kind == Tok::Number || t.kind == Tok::Ident) return test(bexpr());
    fail({Tok::Tilde, Tok::Ident, Tok::Number, Tok::LParen});
  }

  Assert pred_app() {
    Ident name = expect_one(Tok::Ident).text;
    expect_one(Tok::LParen);
    std::vector<AExpr> args;
    if (!accept(Tok::RParen)) {
      args.push_back(aexpr());
      while (accept(Tok::Comma)) args.push_back(aexpr());
      if (!accept(Tok::RParen)) fail({Tok::Comma, Tok::RParen, Tok::Plus});
    }
    return pred(std::move(name), std::move(args));
  }

  AInstr aitem() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Skip:
        ++pos_;
        return askip();
      case Tok::Ident: {
        Ident target = t.text;
        ++pos_;
        expect_one(Tok::Becomes);
        return aassign(std::move(target), aexpr());
      }
      case Tok::LBrace: {
        ++pos_;
        Assert a = assertion();
        expect_one(Tok::RBrace);
        return prec(std::move(a), aitem());
      }
      case Tok::While: {
        ++pos_;
        BExpr b = bexpr();
        expect_one(Tok::Do);
        expect_one(Tok::LBracket);
        Assert inv = assertion();
        expect_one(Tok::RBracket);
        AInstr body = ainstr();
        expect_one(Tok::Done);
        return awhile(std::move(b), std::move(inv), std::move(body));
      }
      case Tok::LParen: {
        ++pos_;
        AInstr inner = ainstr();
        expect_one(Tok::RParen);
        return inner;
      }
      default:
        fail({Tok::Skip, Tok::Ident, Tok::LBrace, Tok::While, Tok::LParen});
    }
  }

  Instr item() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Skip:
        ++pos_;
        return skip();
      case Tok::Ident: {
        Ident target = t.text;
        ++pos_;
        expect_one(Tok::Becomes);
        return assign(std::move(target), aexpr());
      }
      case Tok::While: {
        ++pos_;
        BExpr b = bexpr();
        expect_one(Tok::Do);
        Instr body = instr();
        expect_one(Tok::Done);
        return while_loop(std::move(b), std::move(body));
      }
      case Tok::LParen: {
        ++pos_;
        Instr inner = instr();
        expect_one(Tok::RParen);
        return inner;
      }
      default:
        fail({Tok::Skip, Tok::Ident, Tok::While, Tok::LParen});
    }
  }

  std::size_t reach(const ParseError& e) const {
    for (std::size_t k = 0; k < tokens_.size(); ++k) {
      if (tokens_[k].line == e.line() && tokens_[k].column == e.column()) return k;
    }
    return tokens_.size();
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

AExpr parse_aexpr(std::string_view text) {
  Parser p(text);
  return p.whole([&] { return p.aexpr(); });
}

BExpr parse_bexpr(std::string_view text) {
  Parser p(text);
  return p.whole([&] { return p.bexpr(); });
}

Assert parse_assert(std::string_view text) {
  Parser p(text);
  return p.whole([&] { return p.assertion(); });
}

Condition parse_condition(std::string_view text) {
  Parser p(text);
  return p.whole([&] { return p.condition(); });
}

AInstr parse_instr(std::string_view text) {
  Parser p(text);
  return p.whole([&] { return p.ainstr(); });
}

Instr parse_bare(std::string_view text) {
  Parser p(text);
  return p.whole([&] { return p.instr(); });
}

}  // namespace imp
