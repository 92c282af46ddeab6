#include "artifact/periodring.hpp"

#include <cctype>
#include <stdexcept>

namespace artifact::period {

namespace {

struct Node {
  std::string atom;  // empty for a list
  std::vector<Node> items;
  bool is_atom() const { return !atom.empty(); }
};

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char c : text) {
    if (c == '(' || c == ')') {
      flush();
      tokens.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return tokens;
}

Node parse_node(const std::vector<std::string>& tokens, std::size_t& pos) {
  if (pos >= tokens.size()) throw std::invalid_argument("unexpected end of expression");
  const std::string& t = tokens[pos++];
  if (t == ")") throw std::invalid_argument("unexpected ')'");
  if (t != "(") return Node{t, {}};
  Node list;
  while (true) {
    if (pos >= tokens.size()) throw std::invalid_argument("missing ')'");
    if (tokens[pos] == ")") {
      ++pos;
      break;
    }
    list.items.push_back(parse_node(tokens, pos));
  }
  if (list.items.empty()) throw std::invalid_argument("empty list");
  return list;
}

Node parse(const std::string& text) {
  auto tokens = tokenize(text);
  std::size_t pos = 0;
  Node n = parse_node(tokens, pos);
  if (pos != tokens.size()) throw std::invalid_argument("trailing tokens in expression");
  return n;
}

bool looks_numeric(const std::string& s) {
  if (s == "2pii") return false;
  char c = s.front();
  return std::isdigit(static_cast<unsigned char>(c)) || ((c == '-' || c == '+' || c == '.') && s.size() > 1 &&
                                                         std::isdigit(static_cast<unsigned char>(s[1])));
}

bool is_builtin_symbol(const std::string& s) {
  return s == "pi" || s == "i" || s == "2pii" || s == "sqrtD" || s == "sqrt-D";
}

void collect(const Node& n, Alphabet::Builder& b, std::vector<std::string>& seen) {
  if (n.is_atom()) {
    const std::string& s = n.atom;
    if (looks_numeric(s) || is_builtin_symbol(s)) return;
    std::string base = s;
    bool pair = false;
    for (const char* suffix : {"[s]", "[sb]"}) {
      std::string suf(suffix);
      if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
        base = s.substr(0, s.size() - suf.size());
        pair = true;
      }
    }
    std::string key = pair ? base + "[]" : s;
    for (const auto& k : seen)
      if (k == key) return;
    seen.push_back(key);
    if (pair)
      b.embedded(base);
    else
      b.indeterminate(s);
    return;
  }
  for (std::size_t k = 0; k < n.items.size(); ++k) {
    if (k == 0 && n.items[0].is_atom()) continue;
    collect(n.items[k], b, seen);
  }
}

PeriodScalar eval(const Node& n, const AlphabetPtr& a) {
  if (n.is_atom()) {
    const std::string& s = n.atom;
    if (looks_numeric(s)) {
      if (parse_rational(s) == 0) throw std::invalid_argument("zero is not a period");
      return a->one();
    }
    if (s == "pi") return a->pi();
    if (s == "i") return a->i();
    if (s == "2pii") return a->two_pi_i();
    if (s == "sqrtD") return a->sqrt_d();
    if (s == "sqrt-D") return a->sqrt_minus_d();
    return a->var(s);
  }
  const Node& head = n.items[0];
  if (!head.is_atom()) throw std::invalid_argument("list must start with an operator");
  const std::string& op = head.atom;
  std::size_t argc = n.items.size() - 1;
  auto arity = [&](std::size_t want) {
    if (argc != want) throw std::invalid_argument("operator " + op + " expects " + std::to_string(want) + " argument(s)");
  };
  if (op == "*") {
    PeriodScalar r = a->one();
    for (std::size_t k = 1; k < n.items.size(); ++k) r *= eval(n.items[k], a);
    return r;
  }
  if (op == "/") {
    if (argc < 1) throw std::invalid_argument("operator / expects arguments");
    if (argc == 1) return eval(n.items[1], a).inv();
    PeriodScalar r = eval(n.items[1], a);
    for (std::size_t k = 2; k < n.items.size(); ++k) r /= eval(n.items[k], a);
    return r;
  }
  if (op == "^") {
    arity(2);
    if (!n.items[2].is_atom()) throw std::invalid_argument("exponent must be a rational literal");
    return eval(n.items[1], a).pow(parse_rational(n.items[2].atom));
  }
  if (op == "inv") {
    arity(1);
    return eval(n.items[1], a).inv();
  }
  if (op == "conj") {
    arity(1);
    return eval(n.items[1], a).conj();
  }
  if (op == "sqrt") {
    arity(1);
    return eval(n.items[1], a).pow(Rational(1, 2));
  }
  throw std::invalid_argument("unknown operator: " + op);
}

}  // namespace

ExprReport evaluate_expression(const std::string& expr, const std::vector<std::string>& relations) {
  Node root = parse(expr);
  std::vector<Node> rels;
  for (const auto& r : relations) rels.push_back(parse(r));
  Alphabet::Builder builder;
  std::vector<std::string> seen;
  collect(root, builder, seen);
  for (const auto& r : rels) collect(r, builder, seen);
  AlphabetPtr alphabet = builder.build();

  RelationSet set(alphabet);
  for (std::size_t k = 0; k < rels.size(); ++k)
    set.add_trivial("rel" + std::to_string(k + 1), eval(rels[k], alphabet));
  set.check_consistent();

  PeriodScalar x = eval(root, alphabet);
  ExprReport report;
  PeriodScalar rq = set.reduce(x, Modulus::Q);
  PeriodScalar rs = set.reduce(x, Modulus::SqrtQ);
  report.canonical_q = rq.str();
  report.canonical_sqrt_q = rs.str();
  report.trivial_q = rq.is_one();
  report.trivial_sqrt_q = rs.is_one();
  return report;
}

}  // namespace artifact::period
