#include "imp/syntax.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace imp {

std::string to_string(const Integer& n) { return n.str(); }

std::optional<Integer> parse_integer(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && text[pos] == '-') ++pos;
  if (pos == text.size()) return std::nullopt;
  for (std::size_t k = pos; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
  }
  // cpp_int reads a leading 0 as an octal prefix.
  bool negative = pos == 1;
  std::string_view digits = text.substr(pos);
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  Integer n{std::string(digits)};
  return negative ? Integer(-n) : n;
}

// ---------------------------------------------------------------------------

namespace {

template <class Node, class Alt>
std::shared_ptr<const Node> make_node(Alt&& alt) {
  return std::make_shared<const Node>(std::forward<Alt>(alt));
}

template <class Handle>
bool same_tree(const Handle& a, const Handle& b) {
  return &a.node() == &b.node() || a.node() == b.node();
}

}  // namespace

AExpr::AExpr(Var v) : node_(make_node<Node>(std::move(v))) {}
AExpr::AExpr(Num n) : node_(make_node<Node>(std::move(n))) {}
AExpr::AExpr(Plus p) : node_(make_node<Node>(std::move(p))) {}
bool operator==(const AExpr& a, const AExpr& b) { return same_tree(a, b); }

Instr::Instr(Skip s) : node_(make_node<Node>(s)) {}
Instr::Instr(Assign a) : node_(make_node<Node>(std::move(a))) {}
Instr::Instr(Seq s) : node_(make_node<Node>(std::move(s))) {}
Instr::Instr(While w) : node_(make_node<Node>(std::move(w))) {}
bool operator==(const Instr& a, const Instr& b) { return same_tree(a, b); }

Assert::Assert(Test t) : node_(make_node<Node>(std::move(t))) {}
Assert::Assert(Not n) : node_(make_node<Node>(std::move(n))) {}
Assert::Assert(Conj c) : node_(make_node<Node>(std::move(c))) {}
Assert::Assert(Pred p) : node_(make_node<Node>(std::move(p))) {}
bool operator==(const Assert& a, const Assert& b) { return same_tree(a, b); }

AInstr::AInstr(Prec p) : node_(make_node<Node>(std::move(p))) {}
AInstr::AInstr(ASkip s) : node_(make_node<Node>(s)) {}
AInstr::AInstr(AAssign a) : node_(make_node<Node>(std::move(a))) {}
AInstr::AInstr(ASeq s) : node_(make_node<Node>(std::move(s))) {}
AInstr::AInstr(AWhile w) : node_(make_node<Node>(std::move(w))) {}
bool operator==(const AInstr& a, const AInstr& b) { return same_tree(a, b); }

// ---------------------------------------------------------------------------

AExpr var(Ident name) { return Var{std::move(name)}; }
AExpr num(Integer n) { return Num{std::move(n)}; }
AExpr plus(AExpr lhs, AExpr rhs) { return Plus{std::move(lhs), std::move(rhs)}; }
BExpr lt(AExpr lhs, AExpr rhs) { return BExpr{std::move(lhs), std::move(rhs)}; }

Instr skip() { return Skip{}; }
Instr assign(Ident target, AExpr value) { return Assign{std::move(target), std::move(value)}; }
Instr seq(Instr first, Instr second) { return Seq{std::move(first), std::move(second)}; }
Instr while_loop(BExpr test, Instr body) { return While{std::move(test), std::move(body)}; }

Assert test(BExpr b) { return Test{std::move(b)}; }
Assert negate(Assert a) { return Not{std::move(a)}; }
Assert conj(Assert lhs, Assert rhs) { return Conj{std::move(lhs), std::move(rhs)}; }
Assert pred(Ident name, std::vector<AExpr> args) { return Pred{std::move(name), std::move(args)}; }

AInstr prec(Assert a, AInstr body) { return Prec{std::move(a), std::move(body)}; }
AInstr askip() { return ASkip{}; }
AInstr aassign(Ident target, AExpr value) { return AAssign{std::move(target), std::move(value)}; }
AInstr aseq(AInstr first, AInstr second) { return ASeq{std::move(first), std::move(second)}; }
AInstr awhile(BExpr test, Assert invariant, AInstr body) {
  return AWhile{std::move(test), std::move(invariant), std::move(body)};
}

const Assert& true_assert() {
  static const Assert a = test(lt(num(0), num(1)));
  return a;
}

const Assert& false_assert() {
  static const Assert a = test(lt(num(0), num(0)));
  return a;
}

// ---------------------------------------------------------------------------

Instr un_annot(const AInstr& i) {
  return std::visit(
      Overloaded{
          [](const Prec& p) { return un_annot(p.body); },
          [](const ASkip&) { return skip(); },
          [](const AAssign& a) { return assign(a.target, a.value); },
          [](const ASeq& s) { return seq(un_annot(s.first), un_annot(s.second)); },
          [](const AWhile& w) { return while_loop(w.test, un_annot(w.body)); },
      },
      i.node());
}

AInstr mark(const Instr& i) {
  return std::visit(
      Overloaded{
          [](const Skip&) { return prec(false_assert(), askip()); },
          [](const Assign& a) { return prec(false_assert(), aassign(a.target, a.value)); },
          [](const Seq& s) { return aseq(mark(s.first), mark(s.second)); },
          [](const While& w) {
            return prec(false_assert(), awhile(w.test, false_assert(), mark(w.body)));
          },
      },
      i.node());
}

namespace {

constexpr std::array<std::string_view, 4> kKeywords = {"skip", "while", "do", "done"};

class VarCollector {
 public:
  void add(const Ident& name) {
    if (seen_.insert(name).second) order_.push_back(name);
  }

  void walk(const AExpr& a) {
    std::visit(Overloaded{
                   [&](const Var& v) { add(v.name); },
                   [](const Num&) {},
                   [&](const Plus& p) {
                     walk(p.lhs);
                     walk(p.rhs);
                   },
               },
               a.node());
  }

  void walk(const BExpr& b) {
    walk(b.lhs);
    walk(b.rhs);
  }

  void walk(const Instr& i) {
    std::visit(Overloaded{
                   [](const Skip&) {},
                   [&](const Assign& a) {
                     add(a.target);
                     walk(a.value);
                   },
                   [&](const Seq& s) {
                     walk(s.first);
                     walk(s.second);
                   },
                   [&](const While& w) {
                     walk(w.test);
                     walk(w.body);
                   },
               },
               i.node());
  }

  void walk(const Assert& a) {
    std::visit(Overloaded{
                   [&](const Test& t) { walk(t.cond); },
                   [&](const Not& n) { walk(n.arg); },
                   [&](const Conj& c) {
                     walk(c.lhs);
                     walk(c.rhs);
                   },
                   [&](const Pred& p) {
                     for (const auto& arg : p.args) walk(arg);
                   },
               },
               a.node());
  }

  void walk(const AInstr& i) {
    std::visit(Overloaded{
                   [&](const Prec& p) {
                     walk(p.assertion);
                     walk(p.body);
                   },
                   [](const ASkip&) {},
                   [&](const AAssign& a) {
                     add(a.target);
                     walk(a.value);
                   },
                   [&](const ASeq& s) {
                     walk(s.first);
                     walk(s.second);
                   },
                   [&](const AWhile& w) {
                     walk(w.test);
                     walk(w.invariant);
                     walk(w.body);
                   },
               },
               i.node());
  }

  std::vector<Ident> take() { return std::move(order_); }

 private:
  std::set<Ident> seen_;
  std::vector<Ident> order_;
};

template <class T>
std::vector<Ident> collect(const T& t) {
  VarCollector c;
  c.walk(t);
  return c.take();
}

}  // namespace

bool is_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

bool is_identifier(std::string_view word) {
  if (word.empty()) return false;
  auto head = static_cast<unsigned char>(word.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char ch : word.substr(1)) {
    auto c = static_cast<unsigned char>(ch);
    if (!std::isalnum(c) && c != '_') return false;
  }
  return !is_keyword(word);
}

std::vector<Ident> variables(const AExpr& a) { return collect(a); }
std::vector<Ident> variables(const BExpr& b) { return collect(b); }
std::vector<Ident> variables(const Instr& i) { return collect(i); }
std::vector<Ident> variables(const Assert& a) { return collect(a); }
std::vector<Ident> variables(const AInstr& i) { return collect(i); }

std::vector<Ident> variables(const Condition& c) {
  VarCollector v;
  v.walk(c.hyp);
  v.walk(c.concl);
  return v.take();
}

AInstrCounts count_nodes(const AInstr& i) {
  AInstrCounts counts;
  auto walk = [&](auto& self, const AInstr& node) -> void {
    std::visit(Overloaded{
                   [&](const Prec& p) {
                     ++counts.prec;
                     self(self, p.body);
                   },
                   [](const ASkip&) {},
                   [](const AAssign&) {},
                   [&](const ASeq& s) {
                     self(self, s.first);
                     self(self, s.second);
                   },
                   [&](const AWhile& w) {
                     ++counts.loops;
                     self(self, w.body);
                   },
               },
               node.node());
  };
  walk(walk, i);
  return counts;
}

}  // namespace imp
