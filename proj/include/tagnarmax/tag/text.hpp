#pragma once

// Text formats for syntactic trees, grammars and derivation trees.
//
//   tree       := label marker? ( '(' tree* ')' )?
//   label      := bare | '"' escaped '"'
//   marker     := '↓' | '★'
//
// A label followed by parentheses is a nonterminal ("NP()" is a nonterminal
// leaf without markers); a marked leaf is a nonterminal; a bare "ε" is the
// empty word; any other leaf is a terminal.
//
//   grammar    := header* block*
//   header     := ('nonterminals:' | 'terminals:') symbol* EOL | 'start:' symbol EOL
//   block      := ('initial' | 'auxiliary') name '=' tree
//
//   derivation := name ( '[' edge (',' edge)* ']' )?
//   edge       := ('sub' | 'adj') '@' address '->' derivation

#include <string>
#include <string_view>

#include "tagnarmax/tag/derivation.hpp"

namespace tagnarmax::tag {

namespace text_detail {

inline constexpr std::string_view kDown = "\xE2\x86\x93";     // ↓
inline constexpr std::string_view kStar = "\xE2\x98\x85";     // ★
inline constexpr std::string_view kEpsilon = "\xCE\xB5";      // ε

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  bool at(std::string_view s) const { return text.substr(pos, s.size()) == s; }

  void skip_space() {
    while (!done()) {
      if (is_space(text[pos])) {
        ++pos;
      } else if (text[pos] == '#' && (pos == 0 || text[pos - 1] == '\n')) {
        while (!done() && text[pos] != '\n') ++pos;
      } else {
        break;
      }
    }
  }

  // Skip blanks but stop at a newline.
  void skip_blank() {
    while (!done() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r')) ++pos;
  }

  void expect(std::string_view s) {
    if (!at(s)) throw SyntaxError(pos, "expected '" + std::string(s) + "'");
    pos += s.size();
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos, what); }
};

inline std::string read_quoted(Cursor& c) {
  c.expect("\"");
  std::string out;
  while (true) {
    if (c.done()) c.fail("unterminated quoted label");
    char ch = c.text[c.pos++];
    if (ch == '"') return out;
    if (ch == '\\') {
      if (c.done()) c.fail("dangling escape");
      ch = c.text[c.pos++];
    }
    out += ch;
  }
}

// Bare tree label: stops at whitespace, parentheses, quotes and markers.
inline std::string read_bare_label(Cursor& c) {
  const std::size_t start = c.pos;
  while (!c.done()) {
    const char ch = c.peek();
    if (is_space(ch) || ch == '(' || ch == ')' || ch == '"' || ch == '\\' || c.at(kDown) || c.at(kStar)) break;
    ++c.pos;
  }
  if (c.pos == start) c.fail("expected a label");
  return std::string(c.text.substr(start, c.pos - start));
}

inline bool needs_quotes(std::string_view s) {
  if (s.empty() || s == kEpsilon) return true;
  for (char ch : s)
    if (is_space(ch) || ch == '(' || ch == ')' || ch == '"' || ch == '\\') return true;
  return s.find(kDown) != std::string_view::npos || s.find(kStar) != std::string_view::npos;
}

inline void write_label(std::string& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out += s;
    return;
  }
  out += '"';
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  out += '"';
}

struct RawNode {
  std::string name;
  bool quoted = false;
  bool substitution = false;
  bool foot = false;
  bool parenthesized = false;
  std::vector<RawNode> children;
};

inline RawNode read_raw(Cursor& c, int depth) {
  if (depth > 10000) c.fail("tree nesting too deep");
  c.skip_space();
  RawNode node;
  if (c.peek() == '"') {
    node.name = read_quoted(c);
    node.quoted = true;
  } else {
    node.name = read_bare_label(c);
  }
  if (c.at(kDown)) {
    c.pos += kDown.size();
    node.substitution = true;
  } else if (c.at(kStar)) {
    c.pos += kStar.size();
    node.foot = true;
  }
  const std::size_t before = c.pos;
  c.skip_space();
  if (c.peek() == '(') {
    if (node.substitution || node.foot) c.fail("marked node '" + node.name + "' cannot have children");
    ++c.pos;
    node.parenthesized = true;
    while (true) {
      c.skip_space();
      if (c.done()) c.fail("unbalanced parentheses");
      if (c.peek() == ')') {
        ++c.pos;
        break;
      }
      node.children.push_back(read_raw(c, depth + 1));
    }
  } else {
    c.pos = before;
  }
  return node;
}

inline NodeLabel raw_label(const RawNode& n) {
  if (n.substitution) return NodeLabel::substitution_site(n.name);
  if (n.foot) return NodeLabel::foot(n.name);
  if (n.parenthesized) return NodeLabel::nonterminal(n.name);
  if (!n.quoted && n.name == kEpsilon) return NodeLabel::epsilon();
  return NodeLabel::terminal(n.name);
}

inline void build(SyntacticTree& t, NodeId parent, const RawNode& n) {
  const NodeId id = t.add_child(parent, raw_label(n));
  for (const auto& c : n.children) build(t, id, c);
}

inline SyntacticTree read_tree(Cursor& c) {
  const RawNode raw = read_raw(c, 0);
  SyntacticTree t(raw_label(raw));
  for (const auto& ch : raw.children) build(t, t.root(), ch);
  return t;
}

inline void write_tree(std::string& out, const SyntacticTree& t, NodeId id) {
  const NodeLabel& l = t.label(id);
  if (l.is_epsilon()) {
    out += kEpsilon;
    return;
  }
  write_label(out, l.name());
  if (!l.is_nonterminal()) return;
  if (l.substitution_marker()) {
    out += kDown;
    return;
  }
  if (l.foot_marker()) {
    out += kStar;
    return;
  }
  out += '(';
  bool first = true;
  for (NodeId ch : t.children(id)) {
    if (!first) out += ' ';
    first = false;
    write_tree(out, t, ch);
  }
  out += ')';
}

inline std::string read_symbol(Cursor& c) {
  if (c.peek() == '"') return read_quoted(c);
  const std::size_t start = c.pos;
  while (!c.done() && !is_space(c.peek())) ++c.pos;
  return std::string(c.text.substr(start, c.pos - start));
}

inline std::string read_name(Cursor& c) {
  const std::size_t start = c.pos;
  while (!c.done()) {
    const char ch = c.peek();
    if (is_space(ch) || ch == '[' || ch == ']' || ch == ',' || ch == '@' || ch == '=' || c.at("->")) break;
    ++c.pos;
  }
  if (c.pos == start) c.fail("expected a tree name");
  return std::string(c.text.substr(start, c.pos - start));
}

inline DerivationTree read_derivation(Cursor& c, int depth) {
  if (depth > 10000) c.fail("derivation nesting too deep");
  c.skip_space();
  DerivationTree d{read_name(c), {}};
  const std::size_t before = c.pos;
  c.skip_space();
  if (c.peek() != '[') {
    c.pos = before;
    return d;
  }
  ++c.pos;
  c.skip_space();
  if (c.peek() == ']') {
    ++c.pos;
    return d;
  }
  while (true) {
    c.skip_space();
    Operation op;
    if (c.at("sub")) {
      op = Operation::substitution;
    } else if (c.at("adj")) {
      op = Operation::adjunction;
    } else {
      c.fail("expected 'sub' or 'adj'");
    }
    c.pos += 3;
    c.skip_space();
    c.expect("@");
    c.skip_space();
    const std::size_t addr_start = c.pos;
    while (!c.done() && !is_space(c.peek()) && !c.at("->") && c.peek() != ',' && c.peek() != ']') ++c.pos;
    GornAddress address;
    try {
      address = GornAddress::parse(c.text.substr(addr_start, c.pos - addr_start));
    } catch (const SyntaxError& e) {
      throw SyntaxError(addr_start + e.position(), e.what());
    }
    c.skip_space();
    c.expect("->");
    d.edges.push_back({op, std::move(address), read_derivation(c, depth + 1)});
    c.skip_space();
    if (c.peek() == ',') {
      ++c.pos;
      continue;
    }
    c.expect("]");
    return d;
  }
}

inline void write_derivation(std::string& out, const DerivationTree& d) {
  out += d.tree;
  if (d.edges.empty()) return;
  out += '[';
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    if (i) out += ", ";
    const auto& e = d.edges[i];
    out += e.op == Operation::substitution ? "sub@" : "adj@";
    out += e.address.to_string();
    out += " -> ";
    write_derivation(out, e.child);
  }
  out += ']';
}

}  // namespace text_detail

inline SyntacticTree parse_tree(std::string_view text) {
  text_detail::Cursor c{text};
  SyntacticTree t = text_detail::read_tree(c);
  c.skip_space();
  if (!c.done()) c.fail("trailing input after tree");
  return t;
}

inline std::string format_tree(const SyntacticTree& t) {
  std::string out;
  text_detail::write_tree(out, t, t.root());
  return out;
}

inline DerivationTree parse_derivation(std::string_view text) {
  text_detail::Cursor c{text};
  DerivationTree d = text_detail::read_derivation(c, 0);
  c.skip_space();
  if (!c.done()) c.fail("trailing input after derivation");
  return d;
}

inline std::string format_derivation(const DerivationTree& d) {
  std::string out;
  text_detail::write_derivation(out, d);
  return out;
}

inline Grammar parse_grammar(std::string_view text) {
  using text_detail::Cursor;
  Cursor c{text};
  Grammar g;
  bool have_start = false;
  while (true) {
    c.skip_space();
    if (c.done()) break;
    if (c.at("nonterminals:") || c.at("terminals:")) {
      const bool nonterminal = c.at("nonterminals:");
      c.pos += nonterminal ? 13 : 10;
      auto& target = nonterminal ? g.nonterminals : g.terminals;
      while (true) {
        c.skip_blank();
        if (c.done() || c.peek() == '\n') break;
        target.insert(text_detail::read_symbol(c));
      }
    } else if (c.at("start:")) {
      c.pos += 6;
      c.skip_blank();
      if (c.done() || c.peek() == '\n') c.fail("missing start symbol");
      g.start = text_detail::read_symbol(c);
      have_start = true;
    } else if (c.at("initial") || c.at("auxiliary")) {
      const bool initial = c.at("initial");
      c.pos += initial ? 7 : 9;
      if (c.done() || !text_detail::is_space(c.peek())) c.fail("expected whitespace after tree kind");
      c.skip_space();
      std::string name = text_detail::read_name(c);
      c.skip_space();
      c.expect("=");
      SyntacticTree t = text_detail::read_tree(c);
      if (initial) {
        g.initials.push_back(ElementaryTree::initial(std::move(name), std::move(t)));
      } else {
        g.auxiliaries.push_back(ElementaryTree::auxiliary(std::move(name), std::move(t)));
      }
    } else {
      c.fail("expected a header line or a tree block");
    }
  }
  if (!have_start) throw SyntaxError(text.size(), "grammar has no 'start:' line");
  return g;
}

inline std::string format_grammar(const Grammar& g) {
  std::string out = "nonterminals:";
  for (const auto& n : g.nonterminals) {
    out += ' ';
    text_detail::write_label(out, n);
  }
  out += "\nterminals:";
  for (const auto& t : g.terminals) {
    out += ' ';
    text_detail::write_label(out, t);
  }
  out += "\nstart: ";
  text_detail::write_label(out, g.start);
  out += '\n';
  for (const auto& et : g.initials) out += "initial " + et.name + " = " + format_tree(et.tree) + '\n';
  for (const auto& et : g.auxiliaries) out += "auxiliary " + et.name + " = " + format_tree(et.tree) + '\n';
  return out;
}

}  // namespace tagnarmax::tag
