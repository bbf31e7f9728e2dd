#include "basictop/workspace.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "basictop/errors.hpp"

namespace basictop {

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

constexpr std::array<std::string_view, 6> kBuiltins{"id", "bot", "top", "neg", "dneg", "inhabited"};

bool is_builtin(std::string_view name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), name) != kBuiltins.end();
}

std::vector<Token> tokenize(std::string_view line, std::size_t number) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') break;
    std::size_t start = i;
    if (c == '{') {
      auto close = line.find('}', i);
      if (close == std::string_view::npos) throw ParseError(number, i + 1, "unterminated subset literal");
      i = close + 1;
      // A weight suffix belongs to the literal: {a, b}@u
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#' && line[i] != '\r') ++i;
    } else {
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '#' && line[i] != '{' &&
             line[i] != '\r')
        ++i;
    }
    out.push_back(Token{std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::string join_tokens(const std::vector<Token>& tokens, std::size_t from) {
  std::string s;
  for (std::size_t i = from; i < tokens.size(); ++i) s += (i > from ? " " : "") + tokens[i].text;
  return s;
}

std::size_t parse_count(const Token& t, std::size_t line) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || p != t.text.data() + t.text.size()) throw ParseError(line, t.column, "expected a number");
  return v;
}

}  // namespace

class DocumentParser {
 public:
  DocumentParser(std::string_view text, std::size_t cap) : cap_(cap) { split_sections(text); }

  Workspace build() {
    build_algebra();
    build_carrier();
    build_axiom_sets();
    build_relations();
    build_operators();
    build_topologies();
    return std::move(ws_);
  }

 private:
  static constexpr std::array<std::string_view, 6> kSections{"algebra", "carrier", "axiom_sets",
                                                             "relations", "operators", "topologies"};

  void split_sections(std::string_view text) {
    std::string current;
    std::size_t number = 0;
    while (!text.empty()) {
      ++number;
      auto nl = text.find('\n');
      std::string_view raw = text.substr(0, nl);
      text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
      auto tokens = tokenize(raw, number);
      if (tokens.empty()) continue;
      const auto& head = tokens.front().text;
      if (head.front() == '[') {
        if (head.back() != ']' || tokens.size() != 1) throw ParseError(number, tokens.front().column, "bad section header");
        current = head.substr(1, head.size() - 2);
        if (std::find(kSections.begin(), kSections.end(), current) == kSections.end())
          throw ParseError(number, tokens.front().column, "unknown section '" + current + "'");
        if (!seen_sections_.insert(current).second)
          throw ParseError(number, tokens.front().column, "section '" + current + "' appears twice");
        continue;
      }
      if (current.empty()) throw ParseError(number, tokens.front().column, "content before the first section");
      sections_[current].push_back(Line{number, std::move(tokens)});
    }
  }

  const std::vector<Line>& section(const std::string& name) {
    static const std::vector<Line> none;
    auto it = sections_.find(name);
    return it == sections_.end() ? none : it->second;
  }

  static const Token& at(const Line& l, std::size_t i, const char* what) {
    if (i >= l.tokens.size()) {
      std::size_t col = l.tokens.empty() ? 1 : l.tokens.back().column + l.tokens.back().text.size();
      throw ParseError(l.number, col, std::string("expected ") + what);
    }
    return l.tokens[i];
  }

  static void expect_end(const Line& l, std::size_t i) {
    if (i < l.tokens.size()) throw ParseError(l.number, l.tokens[i].column, "unexpected '" + l.tokens[i].text + "'");
  }

  static void expect_word(const Line& l, std::size_t i, std::string_view word) {
    const Token& t = at(l, i, std::string(word).c_str());
    if (t.text != word) throw ParseError(l.number, t.column, "expected '" + std::string(word) + "'");
  }

  void build_algebra() {
    auto& spec = ws_.algebra_;
    const auto& lines = section("algebra");
    if (lines.empty()) {
      algebra_ = std::make_shared<const HeytingAlgebra>(HeytingAlgebra::boolean());
      return;
    }
    const Line& first = lines.front();
    const Token& kind = first.tokens.front();
    std::vector<HeytingAlgebra::OrderPair> pairs;
    const char* pair_word = nullptr;
    if (kind.text == "boolean") {
      expect_end(first, 1);
      spec.kind = AlgebraSpec::Kind::boolean;
    } else if (kind.text == "chain") {
      spec.kind = AlgebraSpec::Kind::chain;
      spec.chain_length = parse_count(at(first, 1, "chain length"), first.number);
      expect_end(first, 2);
    } else if (kind.text == "elements" || kind.text == "downsets") {
      spec.kind = kind.text == "elements" ? AlgebraSpec::Kind::elements : AlgebraSpec::Kind::downsets;
      for (std::size_t i = 1; i < first.tokens.size(); ++i) spec.names.push_back(first.tokens[i].text);
      pair_word = spec.kind == AlgebraSpec::Kind::elements ? "order" : "poset";
    } else {
      throw ParseError(first.number, kind.column, "unknown algebra '" + kind.text + "'");
    }
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const Line& l = lines[k];
      if (!pair_word) throw ParseError(l.number, l.tokens.front().column, "unexpected line in algebra section");
      expect_word(l, 0, pair_word);
      const Token& lo = at(l, 1, "element");
      expect_word(l, 2, "<=");
      const Token& hi = at(l, 3, "element");
      expect_end(l, 4);
      spec.order.push_back({lo.text, hi.text});
    }
    try {
      switch (spec.kind) {
        case AlgebraSpec::Kind::boolean:
          algebra_ = std::make_shared<const HeytingAlgebra>(HeytingAlgebra::boolean());
          break;
        case AlgebraSpec::Kind::chain:
          algebra_ = std::make_shared<const HeytingAlgebra>(HeytingAlgebra::chain(spec.chain_length));
          break;
        case AlgebraSpec::Kind::elements:
          algebra_ = std::make_shared<const HeytingAlgebra>(HeytingAlgebra::from_order(spec.names, spec.order));
          break;
        case AlgebraSpec::Kind::downsets:
          algebra_ = std::make_shared<const HeytingAlgebra>(HeytingAlgebra::downsets(spec.names, spec.order));
          break;
      }
    } catch (const ValidationError& e) {
      throw ValidationError("algebra", e.what());
    }
  }

  void build_carrier() {
    const auto& lines = section("carrier");
    std::vector<std::string> points;
    for (const auto& l : lines) {
      expect_word(l, 0, "points");
      for (std::size_t i = 1; i < l.tokens.size(); ++i) {
        const auto& t = l.tokens[i];
        if (t.text.find_first_of("{},:@") != std::string::npos)
          throw ParseError(l.number, t.column, "point names may not contain braces, commas, colons or '@'");
        points.push_back(t.text);
      }
    }
    try {
      ws_.ctx_ = Context::make(algebra_, Carrier(std::move(points)), cap_);
    } catch (const ValidationError& e) {
      throw ValidationError("carrier", e.what());
    }
  }

  HSubset subset(const Line& l, const Token& t, std::string_view owner) const {
    try {
      return parse_subset(ws_.ctx_, t.text);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string(owner), "line " + std::to_string(l.number) + ": " + e.what());
    }
  }

  void check_name(const Line& l, const Token& t) const {
    if (t.text.find_first_of("{}=,:@") != std::string::npos || t.text.front() == '[')
      throw ParseError(l.number, t.column, "invalid name '" + t.text + "'");
  }

  void build_axiom_sets() {
    for (const auto& l : section("axiom_sets")) {
      const Token& name = l.tokens.front();
      check_name(l, name);
      auto it = std::find_if(ws_.axiom_sets_.begin(), ws_.axiom_sets_.end(),
                             [&](const AxiomSet& a) { return a.name() == name.text; });
      if (it == ws_.axiom_sets_.end()) {
        ws_.axiom_sets_.emplace_back(ws_.ctx_, name.text);
        it = std::prev(ws_.axiom_sets_.end());
      }
      if (l.tokens.size() == 1) continue;
      const Token& point = l.tokens[1];
      auto idx = ws_.ctx_->carrier().find(point.text);
      if (!idx) throw ValidationError(name.text, "unknown point '" + point.text + "'");
      expect_word(l, 2, "<-");
      for (std::size_t i = 3; i < l.tokens.size(); ++i) {
        const Token& t = l.tokens[i];
        if (t.text.front() != '{') throw ParseError(l.number, t.column, "expected a cover literal");
        auto at_sign = t.text.rfind('@');
        std::optional<Degree> weight;
        std::string literal = t.text;
        if (at_sign != std::string::npos && at_sign > t.text.rfind('}')) {
          literal = t.text.substr(0, at_sign);
          try {
            weight = ws_.ctx_->algebra().parse(t.text.substr(at_sign + 1));
          } catch (const ValidationError& e) {
            throw ValidationError(name.text, e.what());
          }
        }
        it->add(*idx, subset(l, Token{literal, t.column}, name.text), weight);
      }
    }
  }

  void build_relations() {
    struct Pending {
      std::string name;
      std::vector<std::string> domain;
      std::vector<std::tuple<std::string, std::string, Degree>> pairs;
      bool has_domain = false;
    };
    std::vector<Pending> pending;
    const auto& h = ws_.ctx_->algebra();
    for (const auto& l : section("relations")) {
      const Token& name = l.tokens.front();
      check_name(l, name);
      auto it = std::find_if(pending.begin(), pending.end(), [&](const Pending& p) { return p.name == name.text; });
      const Token& kind = at(l, 1, "'domain' or 'pair'");
      if (kind.text == "domain") {
        if (it != pending.end()) throw ValidationError(name.text, "duplicate relation name");
        Pending p{name.text, {}, {}, true};
        for (std::size_t i = 2; i < l.tokens.size(); ++i) p.domain.push_back(l.tokens[i].text);
        pending.push_back(std::move(p));
      } else if (kind.text == "pair") {
        if (it == pending.end()) throw ValidationError(name.text, "pair before the relation's domain line");
        const Token& x = at(l, 2, "domain point");
        const Token& a = at(l, 3, "carrier point");
        Degree d = h.top();
        if (l.tokens.size() > 4) {
          try {
            d = h.parse(l.tokens[4].text);
          } catch (const ValidationError& e) {
            throw ValidationError(name.text, e.what());
          }
          expect_end(l, 5);
        }
        it->pairs.emplace_back(x.text, a.text, d);
      } else {
        throw ParseError(l.number, kind.column, "expected 'domain' or 'pair'");
      }
    }
    for (auto& p : pending) {
      try {
        auto domain = Context::make(algebra_, Carrier(p.domain), cap_);
        const std::size_t cols = ws_.ctx_->carrier().size();
        std::vector<Degree> matrix(p.domain.size() * cols, h.bot());
        for (const auto& [x, a, d] : p.pairs)
          matrix[domain->carrier().index(x) * cols + ws_.ctx_->carrier().index(a)] = d;
        ws_.relations_.emplace_back(std::move(domain), ws_.ctx_, std::move(matrix), p.name);
      } catch (const ValidationError& e) {
        throw ValidationError(p.name, e.what());
      }
    }
  }

  void build_operators() {
    const auto& lines = section("operators");
    for (std::size_t k = 0; k < lines.size(); ++k) {
      const Line& l = lines[k];
      const Token& name = l.tokens.front();
      check_name(l, name);
      expect_word(l, 1, "=");
      if (is_builtin(name.text)) throw ValidationError(name.text, "name is reserved for a built-in operator");
      for (const auto& o : ws_.operators_)
        if (o.name == name.text) throw ValidationError(name.text, "duplicate operator name");
      const Token& head = at(l, 2, "operator expression");
      if (head.text == "table") {
        expect_end(l, 3);
        std::vector<const Line*> rows;
        for (++k; k < lines.size(); ++k) {
          if (lines[k].tokens.size() == 1 && lines[k].tokens.front().text == "end") break;
          rows.push_back(&lines[k]);
        }
        if (k == lines.size()) throw ParseError(l.number, head.column, "table without 'end'");
        ws_.operators_.push_back(table(name.text, rows));
        continue;
      }
      try {
        Operator op = expression(l, 2, name.text).with_description(name.text);
        ws_.operators_.push_back(NamedOperator{name.text, join_tokens(l.tokens, 2), std::move(op)});
      } catch (const CertificateFailure& e) {
        throw ValidationError(name.text, e.what());
      } catch (const NotCompatible& e) {
        throw ValidationError(name.text, e.what());
      } catch (const ContextMismatch& e) {
        throw ValidationError(name.text, e.what());
      }
    }
  }

  NamedOperator table(const std::string& name, const std::vector<const Line*>& rows) {
    const auto& space = ws_.ctx_->space();
    std::vector<std::optional<SubsetIndex>> image(space.size());
    std::string text = "table";
    for (const Line* r : rows) {
      const Token& in = at(*r, 0, "input subset");
      expect_word(*r, 1, "->");
      const Token& out = at(*r, 2, "output subset");
      expect_end(*r, 3);
      SubsetIndex i = space.index_of(subset(*r, in, name));
      if (image[i]) throw ValidationError(name, "input " + in.text + " listed twice");
      image[i] = space.index_of(subset(*r, out, name));
      text += "\n  " + in.text + " -> " + out.text;
    }
    std::vector<SubsetIndex> t;
    for (SubsetIndex i = 0; i < space.size(); ++i) {
      if (!image[i]) throw ValidationError(name, "table has no row for " + space[i].to_string());
      t.push_back(*image[i]);
    }
    return NamedOperator{name, text + "\nend", Operator::from_table(ws_.ctx_, name, std::move(t))};
  }

  Operator reference(const Line& l, std::size_t i) const {
    const Token& t = at(l, i, "operator name");
    try {
      return ws_.op(t.text);
    } catch (const UnknownName&) {
      throw ValidationError(t.text, "unknown operator (line " + std::to_string(l.number) + ")");
    }
  }

  std::vector<HSubset> literals(const Line& l, std::size_t from, const std::string& owner) const {
    std::vector<HSubset> out;
    for (std::size_t i = from; i < l.tokens.size(); ++i) {
      if (l.tokens[i].text.front() != '{') throw ParseError(l.number, l.tokens[i].column, "expected a subset literal");
      out.push_back(subset(l, l.tokens[i], owner));
    }
    return out;
  }

  Operator expression(const Line& l, std::size_t i, const std::string& owner) const {
    const Token& head = l.tokens[i];
    const auto& ctx = ws_.ctx_;
    const std::string& w = head.text;
    if (is_builtin(w)) {
      expect_end(l, i + 1);
      return ws_.op(w);
    }
    if (w == "const") {
      const Token& t = at(l, i + 1, "subset literal");
      expect_end(l, i + 2);
      return constant_operator(subset(l, t, owner));
    }
    if (w == "compose") {
      Operator outer = reference(l, i + 1);
      Operator inner = reference(l, i + 2);
      expect_end(l, i + 3);
      return compose(outer, inner);
    }
    if (w == "meet" || w == "join") {
      std::vector<Operator> parts;
      for (std::size_t k = i + 1; k < l.tokens.size(); ++k) parts.push_back(reference(l, k));
      return w == "meet" ? pointwise_meet(ctx, parts) : pointwise_join(ctx, parts);
    }
    if (w == "sat_family") return family_saturation(ctx, literals(l, i + 1, owner)).op();
    if (w == "red_family") return family_reduction(ctx, literals(l, i + 1, owner)).op();
    if (w == "ll" || w == "rr" || w == "aa" || w == "jj") {
      Operator arg = reference(l, i + 1);
      expect_end(l, i + 2);
      if (w == "ll") return greatest_left_compatible(arg);
      if (w == "rr") return greatest_right_compatible(arg);
      if (w == "aa") return compatible_saturation(Reduction::certify(arg)).op();
      return compatible_reduction(Saturation::certify(arg)).op();
    }
    if (w == "union_degree") {
      const Token& d = at(l, i + 1, "degree");
      expect_end(l, i + 2);
      return union_with_degree(ctx, degree(l, d)).op();
    }
    if (w == "guarded") {
      const Token& d = at(l, i + 1, "degree");
      const Token& b = at(l, i + 2, "point");
      expect_end(l, i + 3);
      auto idx = ctx->carrier().find(b.text);
      if (!idx) throw ValidationError(owner, "unknown point '" + b.text + "'");
      return guarded(ctx, degree(l, d), *idx).op();
    }
    if (w == "generate_sat" || w == "generate_red") {
      const Token& t = at(l, i + 1, "axiom-set name");
      expect_end(l, i + 2);
      const AxiomSet& ax = ws_.axiom_set(t.text);
      return w == "generate_sat" ? generate_saturation(ax).op() : generate_reduction(ax).op();
    }
    if (w == "rep_sat" || w == "rep_red") {
      const Token& t = at(l, i + 1, "relation name");
      expect_end(l, i + 2);
      BasicTopology rt = representable(ws_.relation(t.text));
      return w == "rep_sat" ? rt.saturation().op() : rt.reduction().op();
    }
    throw ParseError(l.number, head.column, "unknown operator expression '" + w + "'");
  }

  Degree degree(const Line& l, const Token& t) const {
    auto d = ws_.ctx_->algebra().find(t.text);
    if (!d) throw ParseError(l.number, t.column, "unknown degree '" + t.text + "'");
    return *d;
  }

  void build_topologies() {
    for (const auto& l : section("topologies")) {
      const Token& name = l.tokens.front();
      check_name(l, name);
      expect_word(l, 1, "=");
      const Token& a = at(l, 2, "saturation name");
      const Token& j = at(l, 3, "reduction name");
      expect_end(l, 4);
      for (const auto& t : ws_.topologies_)
        if (t.name == name.text) throw ValidationError(name.text, "duplicate topology name");
      try {
        auto t = BasicTopology::make(ws_.saturation(a.text), ws_.reduction(j.text), name.text);
        ws_.topologies_.push_back(NamedTopology{name.text, a.text, j.text, std::move(t)});
      } catch (const CertificateFailure& e) {
        throw ValidationError(name.text, e.what());
      } catch (const NotCompatible& e) {
        throw ValidationError(name.text, e.what());
      } catch (const UnknownName& e) {
        throw ValidationError(name.text, e.what());
      }
    }
  }

  std::size_t cap_;
  std::map<std::string, std::vector<Line>> sections_;
  std::set<std::string> seen_sections_;
  std::shared_ptr<const HeytingAlgebra> algebra_;
  Workspace ws_;
};

Workspace parse_document(std::string_view text, std::size_t subset_cap) {
  return DocumentParser(text, subset_cap).build();
}

Operator Workspace::op(std::string_view name) const {
  if (name == "id") return identity_operator(ctx_);
  if (name == "bot") return bottom_operator(ctx_);
  if (name == "top") return top_operator(ctx_);
  if (name == "neg") return pseudo_complement_operator(ctx_);
  if (name == "dneg") return double_negation_operator(ctx_);
  if (name == "inhabited") return inhabited_operator(ctx_);
  for (const auto& o : operators_)
    if (o.name == name) return o.op;
  throw UnknownName("unknown operator '" + std::string(name) + "'");
}

Saturation Workspace::saturation(std::string_view name) const { return Saturation::certify(op(name)); }
Reduction Workspace::reduction(std::string_view name) const { return Reduction::certify(op(name)); }

const AxiomSet& Workspace::axiom_set(std::string_view name) const {
  for (const auto& a : axiom_sets_)
    if (a.name() == name) return a;
  throw UnknownName("unknown axiom-set '" + std::string(name) + "'");
}

const HRelation& Workspace::relation(std::string_view name) const {
  for (const auto& r : relations_)
    if (r.name() == name) return r;
  throw UnknownName("unknown relation '" + std::string(name) + "'");
}

BasicTopology Workspace::topology(std::string_view name) const {
  for (const auto& t : topologies_)
    if (t.name == name) return t.topology;
  auto dash = name.find('-');
  if (dash == std::string_view::npos) throw UnknownName("unknown topology '" + std::string(name) + "'");
  return BasicTopology::make(saturation(name.substr(0, dash)), reduction(name.substr(dash + 1)), std::string(name));
}

std::string serialize(const Workspace& ws) {
  std::ostringstream out;
  const auto& spec = ws.algebra_spec();
  const auto& ctx = *ws.context();
  const auto& h = ctx.algebra();
  out << "[algebra]\n";
  switch (spec.kind) {
    case AlgebraSpec::Kind::boolean:
      out << "boolean\n";
      break;
    case AlgebraSpec::Kind::chain:
      out << "chain " << spec.chain_length << "\n";
      break;
    case AlgebraSpec::Kind::elements:
    case AlgebraSpec::Kind::downsets: {
      bool elements = spec.kind == AlgebraSpec::Kind::elements;
      out << (elements ? "elements" : "downsets");
      for (const auto& n : spec.names) out << " " << n;
      out << "\n";
      for (const auto& [lo, hi] : spec.order) out << (elements ? "order " : "poset ") << lo << " <= " << hi << "\n";
      break;
    }
  }
  out << "\n[carrier]\npoints";
  for (const auto& p : ctx.carrier().points()) out << " " << p;
  out << "\n";
  if (!ws.axiom_sets().empty()) {
    out << "\n[axiom_sets]\n";
    for (const auto& ax : ws.axiom_sets()) {
      out << ax.name() << "\n";
      for (std::size_t a = 0; a < ctx.carrier().size(); ++a) {
        if (ax.covers(a).empty()) continue;
        out << ax.name() << " " << ctx.carrier().name(a) << " <-";
        for (const auto& c : ax.covers(a)) {
          out << " " << c.subset.to_string();
          if (c.weight != h.top()) out << "@" << h.name(c.weight);
        }
        out << "\n";
      }
    }
  }
  if (!ws.relations().empty()) {
    out << "\n[relations]\n";
    for (const auto& r : ws.relations()) {
      out << r.name() << " domain";
      for (const auto& x : r.domain().carrier().points()) out << " " << x;
      out << "\n";
      for (std::size_t x = 0; x < r.domain().carrier().size(); ++x) {
        for (std::size_t a = 0; a < ctx.carrier().size(); ++a) {
          Degree d = r(x, a);
          if (d == h.bot()) continue;
          out << r.name() << " pair " << r.domain().carrier().name(x) << " " << ctx.carrier().name(a);
          if (d != h.top()) out << " " << h.name(d);
          out << "\n";
        }
      }
    }
  }
  if (!ws.operators().empty()) {
    out << "\n[operators]\n";
    for (const auto& o : ws.operators()) out << o.name << " = " << o.expression << "\n";
  }
  if (!ws.topologies().empty()) {
    out << "\n[topologies]\n";
    for (const auto& t : ws.topologies()) out << t.name << " = " << t.saturation << " " << t.reduction << "\n";
  }
  return out.str();
}

std::string default_document() { return "[algebra]\nboolean\n\n[carrier]\npoints a b\n"; }

}  // namespace basictop
