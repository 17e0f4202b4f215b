// Copyright 2026 The Goalcheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "goalcheck/answer.h"

#include <cctype>
#include <cmath>
#include <vector>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"

namespace goalcheck {
namespace {

using Node = AnswerExpr::Node;
using NodePtr = std::shared_ptr<const Node>;
using Op = AnswerExpr::Op;

constexpr std::string_view kSqrtSign = "√";
constexpr std::string_view kMinusSign = "−";
constexpr std::string_view kTimesSign = "×";
constexpr std::string_view kDivideSign = "÷";
constexpr std::string_view kDotSign = "·";
constexpr std::string_view kDegreeSign = "°";
constexpr std::string_view kSquaredSign = "²";
constexpr std::string_view kCubedSign = "³";

bool IsAsciiAlpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool IsDigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

enum class Tok { kNumber, kPlus, kMinus, kTimes, kDivide, kSqrt, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  double number = 0.0;
};

std::vector<Token> Tokenize(std::string_view s) {
  std::vector<Token> out;
  size_t i = 0;
  const auto starts = [&](std::string_view sym) { return s.substr(i).starts_with(sym); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (IsDigit(c) || (c == '.' && i + 1 < s.size() && IsDigit(s[i + 1]))) {
      size_t start = i;
      while (i < s.size() && IsDigit(s[i])) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && IsDigit(s[i])) ++i;
      }
      auto v = ParseNumber(s.substr(start, i - start));
      if (!v) throw ParseError("bad number '" + std::string(s.substr(start, i - start)) + "'");
      out.push_back({Tok::kNumber, *v});
    } else if (c == '+') {
      out.push_back({Tok::kPlus});
      ++i;
    } else if (c == '-') {
      out.push_back({Tok::kMinus});
      ++i;
    } else if (c == '*') {
      out.push_back({Tok::kTimes});
      ++i;
    } else if (c == '/') {
      out.push_back({Tok::kDivide});
      ++i;
    } else if (c == '(' || c == '{') {
      out.push_back({Tok::kLParen});
      ++i;
    } else if (c == ')' || c == '}') {
      out.push_back({Tok::kRParen});
      ++i;
    } else if (starts(kMinusSign)) {
      out.push_back({Tok::kMinus});
      i += kMinusSign.size();
    } else if (starts(kTimesSign)) {
      out.push_back({Tok::kTimes});
      i += kTimesSign.size();
    } else if (starts(kDotSign)) {
      out.push_back({Tok::kTimes});
      i += kDotSign.size();
    } else if (starts(kDivideSign)) {
      out.push_back({Tok::kDivide});
      i += kDivideSign.size();
    } else if (starts(kSqrtSign)) {
      out.push_back({Tok::kSqrt});
      i += kSqrtSign.size();
    } else if (starts("\\sqrt")) {
      out.push_back({Tok::kSqrt});
      i += 5;
    } else if (starts("sqrt")) {
      out.push_back({Tok::kSqrt});
      i += 4;
    } else {
      throw ParseError("unexpected character in answer");
    }
  }
  out.push_back({Tok::kEnd});
  return out;
}

NodePtr MakeNumber(double v) {
  auto n = std::make_shared<Node>();
  n->op = Op::kNumber;
  n->number = v;
  return n;
}

NodePtr MakeNode(Op op, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary | <implicit> primary)*
// unary   := ('+' | '-') unary | primary
// primary := number | sqrt unary | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  NodePtr ParseAll() {
    NodePtr e = Expr();
    if (Peek() != Tok::kEnd) throw ParseError("trailing tokens in answer");
    return e;
  }

 private:
  Tok Peek() const { return toks_[pos_].kind; }
  const Token& Next() { return toks_[pos_++]; }

  NodePtr Expr() {
    NodePtr lhs = Term();
    while (Peek() == Tok::kPlus || Peek() == Tok::kMinus) {
      const Op op = Next().kind == Tok::kPlus ? Op::kAdd : Op::kSub;
      lhs = MakeNode(op, lhs, Term());
    }
    return lhs;
  }

  NodePtr Term() {
    NodePtr lhs = Unary();
    while (true) {
      if (Peek() == Tok::kTimes || Peek() == Tok::kDivide) {
        const Op op = Next().kind == Tok::kTimes ? Op::kMul : Op::kDiv;
        lhs = MakeNode(op, lhs, Unary());
      } else if (Peek() == Tok::kSqrt || Peek() == Tok::kLParen) {
        lhs = MakeNode(Op::kMul, lhs, Primary());
      } else {
        return lhs;
      }
    }
  }

  NodePtr Unary() {
    if (++depth_ > kMaxNesting) throw ParseError("answer nested too deeply");
    struct Leave {
      int& d;
      ~Leave() { --d; }
    } leave{depth_};
    if (Peek() == Tok::kMinus) {
      Next();
      return MakeNode(Op::kNeg, Unary());
    }
    if (Peek() == Tok::kPlus) {
      Next();
      return Unary();
    }
    return Primary();
  }

  NodePtr Primary() {
    const Token& t = Next();
    switch (t.kind) {
      case Tok::kNumber:
        return MakeNumber(t.number);
      case Tok::kSqrt:
        return MakeNode(Op::kSqrt, Unary());
      case Tok::kLParen: {
        NodePtr inner = Expr();
        if (Next().kind != Tok::kRParen) throw ParseError("missing ')' in answer");
        return inner;
      }
      default:
        throw ParseError("unexpected token in answer");
    }
  }

  static constexpr int kMaxNesting = 256;

  std::vector<Token> toks_;
  size_t pos_ = 0;
  int depth_ = 0;
};

double Evaluate(const Node& n) {
  switch (n.op) {
    case Op::kNumber:
      return n.number;
    case Op::kNeg:
      return -Evaluate(*n.lhs);
    case Op::kAdd:
      return Evaluate(*n.lhs) + Evaluate(*n.rhs);
    case Op::kSub:
      return Evaluate(*n.lhs) - Evaluate(*n.rhs);
    case Op::kMul:
      return Evaluate(*n.lhs) * Evaluate(*n.rhs);
    case Op::kDiv: {
      const double den = Evaluate(*n.rhs);
      if (den == 0.0) throw EvalError("division by zero in answer");
      return Evaluate(*n.lhs) / den;
    }
    case Op::kSqrt: {
      const double x = Evaluate(*n.lhs);
      if (x < 0.0) throw EvalError("square root of a negative number in answer");
      return std::sqrt(x);
    }
  }
  return 0.0;
}

std::string Render(const Node& n) {
  switch (n.op) {
    case Op::kNumber:
      return FormatNumber(n.number);
    case Op::kNeg:
      return "(-" + Render(*n.lhs) + ")";
    case Op::kSqrt:
      return "sqrt(" + Render(*n.lhs) + ")";
    case Op::kAdd:
      return "(" + Render(*n.lhs) + " + " + Render(*n.rhs) + ")";
    case Op::kSub:
      return "(" + Render(*n.lhs) + " - " + Render(*n.rhs) + ")";
    case Op::kMul:
      return "(" + Render(*n.lhs) + " * " + Render(*n.rhs) + ")";
    case Op::kDiv:
      return "(" + Render(*n.lhs) + " / " + Render(*n.rhs) + ")";
  }
  return {};
}

}  // namespace

AnswerExpr AnswerExpr::FromValue(double value) {
  return AnswerExpr(MakeNumber(value), value);
}

std::string AnswerExpr::ToString() const { return Render(*root_); }

std::string_view StripUnits(std::string_view text) {
  text = Trim(text);
  while (!text.empty()) {
    const size_t before = text.size();
    while (!text.empty() && IsAsciiAlpha(text.back())) text.remove_suffix(1);
    for (std::string_view sym : {kDegreeSign, kSquaredSign, kCubedSign}) {
      while (text.ends_with(sym)) text.remove_suffix(sym.size());
    }
    // "cm^2": an exponent only counts as a unit when letters precede it.
    size_t k = text.size();
    while (k > 0 && IsDigit(text[k - 1])) --k;
    if (k < text.size() && k >= 2 && text[k - 1] == '^' && IsAsciiAlpha(text[k - 2])) {
      text = text.substr(0, k - 1);
    }
    text = Trim(text);
    if (text.size() == before) break;
  }
  return text;
}

AnswerExpr ParseAnswer(std::string_view text) {
  const std::string_view body = StripUnits(text);
  if (body.empty()) throw ParseError("empty answer");
  NodePtr root = Parser(Tokenize(body)).ParseAll();
  const double value = Evaluate(*root);
  if (!std::isfinite(value)) throw EvalError("answer is not finite");
  return AnswerExpr(std::move(root), value);
}

bool Equivalent(const AnswerExpr& a, const AnswerExpr& b, QuantityKind kind,
                const EquivalenceConfig& cfg) {
  return WithinTolerance(a.value(), b.value(), kind, cfg.tol);
}

bool Verify(std::string_view predicted, const SubGoal& truth,
            const EquivalenceConfig& cfg) {
  try {
    return Equivalent(ParseAnswer(predicted), AnswerExpr::FromValue(truth.expected),
                      truth.kind, cfg);
  } catch (const Error&) {
    return false;
  }
}

}  // namespace goalcheck
