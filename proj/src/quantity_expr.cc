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

#include "goalcheck/quantity_expr.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "goalcheck/error.h"
#include "goalcheck/numeric_text.h"

namespace goalcheck {
namespace {

std::string_view OpName(QuantityExpr::Op op) {
  switch (op) {
    case QuantityExpr::Op::kSegLength:
      return "len";
    case QuantityExpr::Op::kDirAngle:
      return "angle";
    case QuantityExpr::Op::kSignedArea:
      return "area";
    case QuantityExpr::Op::kDiv:
      return "div";
    case QuantityExpr::Op::kSub:
      return "sub";
    case QuantityExpr::Op::kAdd:
      return "add";
    case QuantityExpr::Op::kConst:
      return "const";
  }
  return "";
}

std::string JoinSegment(const std::string& a, const std::string& b) {
  if (a.size() == 1 && b.size() == 1) return a + b;
  return a + " " + b;
}

bool IsBinary(QuantityExpr::Op op) {
  return op == QuantityExpr::Op::kDiv || op == QuantityExpr::Op::kSub ||
         op == QuantityExpr::Op::kAdd;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  QuantityExpr ParseAll() {
    QuantityExpr e = ParseExpr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw ParseError("bad quantity expression '" + std::string(text_) +
                     "': " + why);
  }

  void SkipSpace() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  void Expect(char c) {
    SkipSpace();
    if (pos_ >= text_.size() || text_[pos_] != c) {
      Fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  // Identifier or number token, up to the next delimiter.
  std::string_view Token() {
    SkipSpace();
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '(' &&
           text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) Fail("expected a token");
    return text_.substr(start, pos_ - start);
  }

  std::vector<std::string> PointArgs(size_t count) {
    std::vector<std::string> names;
    for (size_t i = 0; i < count; ++i) {
      if (i > 0) Expect(',');
      names.emplace_back(Token());
    }
    return names;
  }

  QuantityExpr ParseExpr() {
    const std::string_view head = Token();
    Expect('(');
    std::optional<QuantityExpr> result;
    try {
      if (head == "len") {
        auto p = PointArgs(2);
        result = QuantityExpr::SegLength(p[0], p[1]);
      } else if (head == "angle") {
        auto p = PointArgs(4);
        result = QuantityExpr::DirAngle(p[0], p[1], p[2], p[3]);
      } else if (head == "area") {
        auto p = PointArgs(3);
        result = QuantityExpr::SignedArea(p[0], p[1], p[2]);
      } else if (head == "const") {
        auto value = ParseNumber(Token());
        if (!value) Fail("bad constant");
        result = QuantityExpr::Const(*value);
      } else if (head == "div" || head == "sub" || head == "add") {
        QuantityExpr lhs = ParseExpr();
        Expect(',');
        QuantityExpr rhs = ParseExpr();
        if (head == "div") {
          result = QuantityExpr::Div(std::move(lhs), std::move(rhs));
        } else if (head == "sub") {
          result = QuantityExpr::Sub(std::move(lhs), std::move(rhs));
        } else {
          result = QuantityExpr::Add(std::move(lhs), std::move(rhs));
        }
      } else {
        Fail("unknown operator '" + std::string(head) + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      Fail(e.what());
    }
    Expect(')');
    return *result;
  }

  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace

QuantityExpr QuantityExpr::SegLength(std::string a, std::string b) {
  QuantityExpr e;
  e.op_ = Op::kSegLength;
  e.kind_ = QuantityKind::kLength;
  e.points_ = {std::move(a), std::move(b)};
  return e;
}

QuantityExpr QuantityExpr::DirAngle(std::string a, std::string b, std::string c,
                                    std::string d) {
  QuantityExpr e;
  e.op_ = Op::kDirAngle;
  e.kind_ = QuantityKind::kAngle;
  e.points_ = {std::move(a), std::move(b), std::move(c), std::move(d)};
  return e;
}

QuantityExpr QuantityExpr::SignedArea(std::string a, std::string b,
                                      std::string c) {
  QuantityExpr e;
  e.op_ = Op::kSignedArea;
  e.kind_ = QuantityKind::kArea;
  e.points_ = {std::move(a), std::move(b), std::move(c)};
  return e;
}

QuantityExpr QuantityExpr::Const(double value) {
  QuantityExpr e;
  e.op_ = Op::kConst;
  e.kind_ = QuantityKind::kRatio;
  e.constant_ = value;
  return e;
}

QuantityExpr QuantityExpr::Binary(Op op, QuantityExpr lhs, QuantityExpr rhs) {
  QuantityExpr e;
  e.op_ = op;
  const QuantityKind l = lhs.kind();
  const QuantityKind r = rhs.kind();
  if (op == Op::kDiv) {
    const bool lengths = l == QuantityKind::kLength && r == QuantityKind::kLength;
    const bool ratios = l == QuantityKind::kRatio && r == QuantityKind::kRatio;
    if (!lengths && !ratios) {
      throw Error("div needs length/length or ratio/ratio, got " +
                  std::string(KindName(l)) + "/" + std::string(KindName(r)));
    }
    e.kind_ = QuantityKind::kRatio;
  } else {
    if (l != QuantityKind::kAngle || r != QuantityKind::kAngle) {
      throw Error(std::string(OpName(op)) + " needs angle operands, got " +
                  std::string(KindName(l)) + ", " + std::string(KindName(r)));
    }
    e.kind_ = QuantityKind::kAngleCombo;
  }
  e.depth_ = 1 + std::max(lhs.depth(), rhs.depth());
  if (e.depth_ > kMaxDepth) throw Error("quantity expression too deep");
  e.lhs_ = std::make_shared<const QuantityExpr>(std::move(lhs));
  e.rhs_ = std::make_shared<const QuantityExpr>(std::move(rhs));
  return e;
}

QuantityExpr QuantityExpr::Div(QuantityExpr num, QuantityExpr den) {
  return Binary(Op::kDiv, std::move(num), std::move(den));
}

QuantityExpr QuantityExpr::Sub(QuantityExpr lhs, QuantityExpr rhs) {
  return Binary(Op::kSub, std::move(lhs), std::move(rhs));
}

QuantityExpr QuantityExpr::Add(QuantityExpr lhs, QuantityExpr rhs) {
  return Binary(Op::kAdd, std::move(lhs), std::move(rhs));
}

QuantityExpr QuantityExpr::Parse(std::string_view text) {
  return ExprParser(text).ParseAll();
}

std::string QuantityExpr::Serialize() const {
  std::string out(OpName(op_));
  out += '(';
  if (op_ == Op::kConst) {
    out += FormatNumber(constant_);
  } else if (IsBinary(op_)) {
    out += lhs_->Serialize();
    out += ',';
    out += rhs_->Serialize();
  } else {
    for (size_t i = 0; i < points_.size(); ++i) {
      if (i > 0) out += ',';
      out += points_[i];
    }
  }
  out += ')';
  return out;
}

std::string QuantityExpr::Display() const {
  switch (op_) {
    case Op::kSegLength:
      return "|" + JoinSegment(points_[0], points_[1]) + "|";
    case Op::kDirAngle:
      return "∠(" + JoinSegment(points_[0], points_[1]) + "," +
             JoinSegment(points_[2], points_[3]) + ")";
    case Op::kSignedArea:
      return "area(" + points_[0] + "," + points_[1] + "," + points_[2] + ")";
    case Op::kConst:
      return FormatNumber(constant_);
    case Op::kDiv:
    case Op::kSub:
    case Op::kAdd: {
      const auto wrap = [](const QuantityExpr& child) {
        return IsBinary(child.op()) ? "(" + child.Display() + ")"
                                    : child.Display();
      };
      const std::string_view sep =
          op_ == Op::kDiv ? "/" : (op_ == Op::kSub ? " - " : " + ");
      return wrap(*lhs_) + std::string(sep) + wrap(*rhs_);
    }
  }
  return {};
}

std::vector<std::string> QuantityExpr::ReferencedPoints() const {
  std::vector<std::string> out;
  const auto visit = [&out](const QuantityExpr& e, const auto& self) -> void {
    if (IsBinary(e.op())) {
      self(e.lhs(), self);
      self(e.rhs(), self);
      return;
    }
    for (const auto& p : e.points()) {
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
  };
  visit(*this, visit);
  return out;
}

bool operator==(const QuantityExpr& a, const QuantityExpr& b) {
  if (a.op_ != b.op_ || a.points_ != b.points_ || a.constant_ != b.constant_) {
    return false;
  }
  if (!IsBinary(a.op_)) return true;
  return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
}

}  // namespace goalcheck
