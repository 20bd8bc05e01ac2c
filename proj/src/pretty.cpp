#include "imp/pretty.hpp"

namespace imp {

namespace {

void print(std::string& out, const AExpr& a) {
  std::visit(Overloaded{
                 [&](const Var& v) { out += v.name; },
                 [&](const Num& n) { out += to_string(n.value); },
                 [&](const Plus& p) {
                   print(out, p.lhs);
                   out += " + ";
                   const bool nested = std::holds_alternative<Plus>(p.rhs.node());
                   if (nested) out += '(';
                   print(out, p.rhs);
                   if (nested) out += ')';
                 },
             },
             a.node());
}

void print(std::string& out, const BExpr& b) {
  print(out, b.lhs);
  out += " < ";
  print(out, b.rhs);
}

void print(std::string& out, const Assert& a);

void print_atom(std::string& out, const Assert& a) {
  const bool compound = std::holds_alternative<Conj>(a.node());
  if (compound) out += '(';
  print(out, a);
  if (compound) out += ')';
}

void print(std::string& out, const Assert& a) {
  std::visit(Overloaded{
                 [&](const Test& t) { print(out, t.cond); },
                 [&](const Not& n) {
                   out += "~ ";
                   print_atom(out, n.arg);
                 },
                 [&](const Conj& c) {
                   print_atom(out, c.lhs);
                   out += " /\\ ";
                   print(out, c.rhs);
                 },
                 [&](const Pred& p) {
                   out += p.name;
                   out += '(';
                   for (std::size_t k = 0; k < p.args.size(); ++k) {
                     if (k > 0) out += ',';
                     print(out, p.args[k]);
                   }
                   out += ')';
                 },
             },
             a.node());
}

void print(std::string& out, const Instr& i);

void print_item(std::string& out, const Instr& i) {
  const bool grouped = std::holds_alternative<Seq>(i.node());
  if (grouped) out += '(';
  print(out, i);
  if (grouped) out += ')';
}

void print(std::string& out, const Instr& i) {
  std::visit(Overloaded{
                 [&](const Skip&) { out += "skip"; },
                 [&](const Assign& a) {
                   out += a.target;
                   out += " := ";
                   print(out, a.value);
                 },
                 [&](const Seq& s) {
                   print_item(out, s.first);
                   out += "; ";
                   print(out, s.second);
                 },
                 [&](const While& w) {
                   out += "while ";
                   print(out, w.test);
                   out += " do ";
                   print(out, w.body);
                   out += " done";
                 },
             },
             i.node());
}

void print(std::string& out, const AInstr& i);

void print_item(std::string& out, const AInstr& i) {
  const bool grouped = std::holds_alternative<ASeq>(i.node());
  if (grouped) out += '(';
  print(out, i);
  if (grouped) out += ')';
}

void print(std::string& out, const AInstr& i) {
  std::visit(Overloaded{
                 [&](const Prec& p) {
                   out += "{ ";
                   print(out, p.assertion);
                   out += " } ";
                   print_item(out, p.body);
                 },
                 [&](const ASkip&) { out += "skip"; },
                 [&](const AAssign& a) {
                   out += a.target;
                   out += " := ";
                   print(out, a.value);
                 },
                 [&](const ASeq& s) {
                   print_item(out, s.first);
                   out += "; ";
                   print(out, s.second);
                 },
                 [&](const AWhile& w) {
                   out += "while ";
                   print(out, w.test);
                   out += " do [ ";
                   print(out, w.invariant);
                   out += " ] ";
                   print(out, w.body);
                   out += " done";
                 },
             },
             i.node());
}

template <class T>
std::string render(const T& t) {
  std::string out;
  print(out, t);
  return out;
}

}  // namespace

std::string pretty(const AExpr& a) { return render(a); }
std::string pretty(const BExpr& b) { return render(b); }
std::string pretty(const Instr& i) { return render(i); }
std::string pretty(const Assert& a) { return render(a); }
std::string pretty(const AInstr& i) { return render(i); }

std::string pretty(const Condition& c) {
  std::string out;
  print(out, c.hyp);
  out += " -> ";
  print(out, c.concl);
  return out;
}

}  // namespace imp
