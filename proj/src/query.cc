// Copyright 2026 The xpsearch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "xps/query.h"

#include <charconv>
#include <limits>

#include "xps/error.h"
#include "xps/strings.h"

namespace xps {

namespace {

enum class TokenKind { kIdent, kStar, kOp, kNumber, kString, kEnd };

struct Lexeme {
  TokenKind kind = TokenKind::kEnd;
  std::string text;  // identifier, decoded string, or number spelling
  CompareOp op = CompareOp::kEqual;
  size_t offset = 0;
};

std::string_view KindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kIdent: return "identifier";
    case TokenKind::kStar: return "'*'";
    case TokenKind::kOp: return "comparison operator";
    case TokenKind::kNumber: return "number";
    case TokenKind::kString: return "quoted predicate";
    case TokenKind::kEnd: return "end of query";
  }
  return "token";
}

bool IsIdentStart(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

Error SyntaxError(size_t offset, const std::string &message) {
  return Error(ErrorCode::kBadQuery,
               "syntax error at offset " + std::to_string(offset) + ": " + message, offset);
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Lexeme Next() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' ||
                                   text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
    Lexeme lex;
    lex.offset = pos_;
    if (pos_ >= text_.size()) return lex;

    char c = text_[pos_];
    if (IsIdentStart(c)) {
      size_t start = pos_;
      while (pos_ < text_.size() && (IsIdentStart(text_[pos_]) || IsDigit(text_[pos_]))) ++pos_;
      lex.kind = TokenKind::kIdent;
      lex.text = std::string(text_.substr(start, pos_ - start));
      return lex;
    }
    if (IsDigit(c) || (c == '-' && pos_ + 1 < text_.size() && IsDigit(text_[pos_ + 1]))) {
      size_t start = pos_;
      if (c == '-') ++pos_;
      while (pos_ < text_.size() && IsDigit(text_[pos_])) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '.') {
        if (pos_ + 1 >= text_.size() || !IsDigit(text_[pos_ + 1])) {
          throw SyntaxError(pos_, "expected digits after decimal point");
        }
        ++pos_;
        while (pos_ < text_.size() && IsDigit(text_[pos_])) ++pos_;
      }
      lex.kind = TokenKind::kNumber;
      lex.text = std::string(text_.substr(start, pos_ - start));
      return lex;
    }
    if (c == '"') {
      ++pos_;
      lex.kind = TokenKind::kString;
      while (true) {
        if (pos_ >= text_.size()) throw SyntaxError(lex.offset, "unterminated quoted predicate");
        char d = text_[pos_++];
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= text_.size()) throw SyntaxError(lex.offset, "unterminated quoted predicate");
          d = text_[pos_++];
        }
        lex.text.push_back(d);
      }
      return lex;
    }
    if (c == '*') {
      ++pos_;
      lex.kind = TokenKind::kStar;
      return lex;
    }
    if (c == '<' || c == '>' || c == '=') {
      ++pos_;
      lex.kind = TokenKind::kOp;
      bool eq = pos_ < text_.size() && text_[pos_] == '=' && c != '=';
      if (eq) ++pos_;
      if (c == '<') lex.op = eq ? CompareOp::kLessEqual : CompareOp::kLess;
      if (c == '>') lex.op = eq ? CompareOp::kGreaterEqual : CompareOp::kGreater;
      if (c == '=') lex.op = CompareOp::kEqual;
      return lex;
    }
    // U+2264 and U+2265.
    if (text_.substr(pos_, 3) == "\xE2\x89\xA4" || text_.substr(pos_, 3) == "\xE2\x89\xA5") {
      lex.kind = TokenKind::kOp;
      lex.op = text_[pos_ + 2] == '\xA4' ? CompareOp::kLessEqual : CompareOp::kGreaterEqual;
      pos_ += 3;
      return lex;
    }
    throw SyntaxError(pos_, "unexpected character");
  }

 private:
  std::string_view text_;
  size_t pos_ = 0;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { Advance(); }

  Query Parse() {
    Query query;
    ExpectKeyword("select");
    if (current_.kind != TokenKind::kStar) Fail("expected '*'");
    Advance();
    ExpectKeyword("from");
    if (current_.kind != TokenKind::kIdent || IsReserved(current_.text)) {
      Fail("expected relation name");
    }
    auto relation = ParseCategory(current_.text);
    if (!relation) {
      throw Error(ErrorCode::kBadQuery, "unknown relation '" + current_.text + "'",
                  current_.offset);
    }
    query.relation = *relation;
    Advance();
    if (current_.kind == TokenKind::kIdent && !IsReserved(current_.text)) Advance();  // alias

    if (IsKeyword("where")) {
      Advance();
      ParseTerm(query);
      while (true) {
        if (IsKeyword("and")) {
          Advance();
          ParseTerm(query);
        } else if (IsKeyword("or") || IsKeyword("not")) {
          RejectConnective();
        } else {
          break;
        }
      }
    }
    if (IsKeyword("limit")) {
      Advance();
      if (current_.kind != TokenKind::kNumber) Fail("expected a positive integer");
      int limit = 0;
      const std::string &s = current_.text;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), limit);
      if (ec != std::errc() || ptr != s.data() + s.size() || limit <= 0) {
        Fail("expected a positive integer");
      }
      query.limit = limit;
      Advance();
    }
    if (current_.kind != TokenKind::kEnd) {
      if (IsKeyword("or") || IsKeyword("not")) RejectConnective();
      Fail("expected 'and', 'limit' or end of query");
    }
    return query;
  }

 private:
  void Advance() { current_ = lexer_.Next(); }

  bool IsKeyword(std::string_view word) const {
    return current_.kind == TokenKind::kIdent && ToLower(current_.text) == word;
  }

  static bool IsReserved(std::string_view ident) {
    std::string lower = ToLower(ident);
    return lower == "select" || lower == "from" || lower == "where" || lower == "and" ||
           lower == "or" || lower == "not" || lower == "limit";
  }

  [[noreturn]] void Fail(const std::string &expected) const {
    std::string found = current_.kind == TokenKind::kIdent ? "'" + current_.text + "'"
                                                           : std::string(KindName(current_.kind));
    throw SyntaxError(current_.offset, expected + ", found " + found);
  }

  [[noreturn]] void RejectConnective() const {
    throw Error(ErrorCode::kBadQuery,
                "unsupported connective '" + ToLower(current_.text) + "' at offset " +
                    std::to_string(current_.offset) + ": only 'and' is supported",
                current_.offset);
  }

  void ExpectKeyword(std::string_view word) {
    if (!IsKeyword(word)) Fail("expected '" + std::string(word) + "'");
    Advance();
  }

  void ParseTerm(Query &query) {
    if (current_.kind == TokenKind::kString) {
      std::string predicate(Trim(current_.text));
      if (predicate.empty()) Fail("expected a non-empty predicate");
      query.subjective.push_back(std::move(predicate));
      Advance();
      return;
    }
    if (IsKeyword("not") || IsKeyword("or")) RejectConnective();
    if (current_.kind != TokenKind::kIdent || IsReserved(current_.text)) {
      Fail("expected comparison or quoted predicate");
    }
    Comparison cmp;
    cmp.attribute = current_.text;
    Advance();
    if (current_.kind != TokenKind::kOp) Fail("expected comparison operator");
    cmp.op = current_.op;
    Advance();
    if (current_.kind != TokenKind::kNumber) Fail("expected number");
    const std::string &s = current_.text;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cmp.value);
    if (ec != std::errc() || ptr != s.data() + s.size()) Fail("expected finite number");
    if (cmp.value == 0) cmp.value = 0;  // fold -0
    query.objective.push_back(std::move(cmp));
    Advance();
  }

  Lexer lexer_;
  Lexeme current_;
};

std::string FormatNumber(double value) {
  char buf[512];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed);
  if (ec != std::errc()) return "0";
  return std::string(buf, ptr);
}

}  // namespace

std::string_view CompareOpSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kLess: return "<";
    case CompareOp::kLessEqual: return "<=";
    case CompareOp::kGreater: return ">";
    case CompareOp::kGreaterEqual: return ">=";
    case CompareOp::kEqual: return "=";
  }
  return "=";
}

Query ParseQuery(std::string_view text) { return Parser(text).Parse(); }

std::string QuotePredicate(std::string_view predicate) {
  std::string out = "\"";
  for (char c : predicate) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string RenderQuery(const Query &query) {
  std::string out = "select * from ";
  out.append(RelationName(query.relation));
  std::vector<std::string> terms;
  for (const auto &cmp : query.objective) {
    terms.push_back(cmp.attribute + " " + std::string(CompareOpSymbol(cmp.op)) + " " +
                    FormatNumber(cmp.value));
  }
  for (const auto &predicate : query.subjective) terms.push_back(QuotePredicate(predicate));
  if (!terms.empty()) {
    out.append(" where ");
    out.append(Join(terms, " and "));
  }
  if (query.limit) out.append(" limit " + std::to_string(*query.limit));
  return out;
}

}  // namespace xps
