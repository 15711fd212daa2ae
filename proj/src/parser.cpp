#include "mcsreason/parser.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <vector>

#include "mcsreason/error.hpp"

namespace mcsreason {

namespace {

enum class Tok { LParen, RParen, Equals, Word, Iri, String, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;  // Word/Iri: content; String: lexical form
  std::string datatype_word;  // String with ^^: raw datatype token
  bool datatype_is_iri = false;
  std::string language;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool word_char(char ch) {
  return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-' || ch == '.' ||
         ch == ':' || static_cast<unsigned char>(ch) >= 0x80;
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space_and_comments();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      char ch = text_[pos_];
      if (ch == '(') {
        t.kind = Tok::LParen;
        advance();
      } else if (ch == ')') {
        t.kind = Tok::RParen;
        advance();
      } else if (ch == '=') {
        t.kind = Tok::Equals;
        advance();
      } else if (ch == '<') {
        t.kind = Tok::Iri;
        t.text = read_iri();
      } else if (ch == '"') {
        t.kind = Tok::String;
        read_literal(t);
      } else if (word_char(ch)) {
        t.kind = Tok::Word;
        while (pos_ < text_.size() && word_char(text_[pos_])) {
          t.text += text_[pos_];
          advance();
        }
      } else {
        throw SyntaxError(line_, column_, std::string("unexpected character '") + ch + "'");
      }
      out.push_back(std::move(t));
    }
  }

  // Lines carrying a "# injected" comment.
  const std::set<std::size_t>& injected_lines() const { return injected_lines_; }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space_and_comments() {
    while (pos_ < text_.size()) {
      char ch = text_[pos_];
      if (std::isspace(static_cast<unsigned char>(ch))) {
        advance();
      } else if (ch == '#') {
        std::size_t start = pos_ + 1;
        std::size_t comment_line = line_;
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        std::string_view body = text_.substr(start, pos_ - start);
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
          body.remove_prefix(1);
        while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
          body.remove_suffix(1);
        if (body == "injected") injected_lines_.insert(comment_line);
      } else {
        return;
      }
    }
  }

  std::string read_iri() {
    std::size_t line = line_, column = column_;
    advance();  // <
    std::string out;
    while (pos_ < text_.size() && text_[pos_] != '>') {
      if (text_[pos_] == '\n' || std::isspace(static_cast<unsigned char>(text_[pos_])))
        throw SyntaxError(line, column, "unterminated IRI");
      out += text_[pos_];
      advance();
    }
    if (pos_ >= text_.size()) throw SyntaxError(line, column, "unterminated IRI");
    advance();  // >
    if (out.empty()) throw SyntaxError(line, column, "empty IRI");
    return out;
  }

  void read_literal(Token& t) {
    std::size_t line = line_, column = column_;
    advance();  // opening quote
    while (true) {
      if (pos_ >= text_.size()) throw SyntaxError(line, column, "unterminated string literal");
      char ch = text_[pos_];
      if (ch == '"') {
        advance();
        break;
      }
      if (ch == '\\') {
        advance();
        if (pos_ >= text_.size()) throw SyntaxError(line, column, "unterminated string literal");
        ch = text_[pos_];
      }
      t.text += ch;
      advance();
    }
    if (text_.substr(pos_, 2) == "^^") {
      advance();
      advance();
      if (pos_ < text_.size() && text_[pos_] == '<') {
        t.datatype_word = read_iri();
        t.datatype_is_iri = true;
      } else {
        while (pos_ < text_.size() && word_char(text_[pos_])) {
          t.datatype_word += text_[pos_];
          advance();
        }
        if (t.datatype_word.empty()) throw SyntaxError(line_, column_, "missing datatype");
      }
    } else if (pos_ < text_.size() && text_[pos_] == '@') {
      advance();
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
        t.language += text_[pos_];
        advance();
      }
      if (t.language.empty()) throw SyntaxError(line_, column_, "missing language tag");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  std::set<std::size_t> injected_lines_;
};

bool is_axiom_keyword(std::string_view word) {
  static const std::set<std::string, std::less<>> keywords = {
      "SubClassOf",           "EquivalentClasses",       "DisjointClasses",
      "ClassAssertion",       "ObjectPropertyAssertion", "DataPropertyAssertion",
      "ObjectPropertyDomain", "ObjectPropertyRange",     "DataPropertyDomain",
      "FunctionalObjectProperty"};
  return keywords.count(word) > 0;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, PrefixMap prefixes)
      : tokens_(std::move(tokens)), prefixes_(std::move(prefixes)) {}

  bool at_end() const { return peek().kind == Tok::End; }
  bool in_ontology() const { return in_ontology_; }

  // Returns true and fills `out` for an axiom; false for a header or
  // declaration that yields no axiom.
  bool statement(Axiom& out, std::size_t& end_line, bool allow_headers) {
    if (in_ontology_ && peek().kind == Tok::RParen) {
      next();
      in_ontology_ = false;
      return false;
    }
    const Token& head = expect(Tok::Word, "statement keyword");
    if (allow_headers && head.text == "Prefix") {
      prefix_declaration();
      return false;
    }
    if (allow_headers && head.text == "Ontology" && !in_ontology_) {
      expect(Tok::LParen, "'('");
      // Optional ontology IRI and version IRI.
      for (int k = 0; k < 2; ++k) {
        bool iri = peek().kind == Tok::Iri || (peek().kind == Tok::Word && peek(1).kind != Tok::LParen);
        if (!iri) break;
        next();
      }
      in_ontology_ = true;
      return false;
    }
    if (allow_headers && (head.text == "Declaration" || head.text == "Import" || head.text == "Annotation")) {
      skip_balanced();
      return false;
    }
    if (!is_axiom_keyword(head.text)) {
      if (peek().kind == Tok::LParen) throw unsupported(head);
      throw SyntaxError(head.line, head.column, "expected an axiom, found '" + head.text + "'");
    }
    expect(Tok::LParen, "'('");
    out = axiom_body(head);
    end_line = expect(Tok::RParen, "')'").line;
    return true;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }

  const Token& next() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }

  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) {
      std::string found = t.kind == Tok::End ? "end of input" : "'" + describe(t) + "'";
      throw SyntaxError(t.line, t.column, std::string("expected ") + what + ", found " + found);
    }
    return next();
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::LParen: return "(";
      case Tok::RParen: return ")";
      case Tok::Equals: return "=";
      default: return t.text;
    }
  }

  static Error unsupported(const Token& t) {
    return Error(ErrorCode::UnsupportedConstruct,
                 "unsupported construct " + t.text + " at " + std::to_string(t.line) + ":" +
                     std::to_string(t.column));
  }

  void prefix_declaration() {
    expect(Tok::LParen, "'('");
    const Token& name = expect(Tok::Word, "prefix name");
    if (name.text.empty() || name.text.back() != ':' ||
        name.text.find(':') != name.text.size() - 1)
      throw SyntaxError(name.line, name.column, "prefix name must end with ':'");
    expect(Tok::Equals, "'='");
    const Token& iri = expect(Tok::Iri, "namespace IRI");
    expect(Tok::RParen, "')'");
    prefixes_[name.text.substr(0, name.text.size() - 1)] = iri.text;
  }

  void skip_balanced() {
    expect(Tok::LParen, "'('");
    int depth = 1;
    while (depth > 0) {
      const Token& t = peek();
      if (t.kind == Tok::End) throw SyntaxError(t.line, t.column, "unbalanced parentheses");
      if (t.kind == Tok::LParen) ++depth;
      if (t.kind == Tok::RParen) --depth;
      next();
    }
  }

  std::string resolve(const Token& t) {
    if (t.kind == Tok::Iri) return t.text;
    auto colon = t.text.find(':');
    if (colon == std::string::npos) return t.text;
    std::string prefix = t.text.substr(0, colon);
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end())
      throw SyntaxError(t.line, t.column, "undeclared prefix '" + prefix + ":'");
    std::string local = t.text.substr(colon + 1);
    if (local.empty()) throw SyntaxError(t.line, t.column, "empty local name");
    return it->second + local;
  }

  std::string name(const char* what) {
    const Token& t = peek();
    if (t.kind != Tok::Word && t.kind != Tok::Iri)
      throw SyntaxError(t.line, t.column,
                        std::string("expected ") + what + ", found '" + describe(t) + "'");
    if (t.kind == Tok::Word && peek(1).kind == Tok::LParen)
      throw SyntaxError(t.line, t.column,
                        std::string("expected ") + what + ", found expression " + t.text);
    return resolve(next());
  }

  std::uint32_t integer() {
    const Token& t = peek();
    std::uint32_t value = 0;
    if (t.kind == Tok::Word) {
      auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
      if (ec == std::errc() && ptr == t.text.data() + t.text.size()) {
        next();
        return value;
      }
    }
    throw SyntaxError(t.line, t.column, "expected a non-negative integer");
  }

  Literal literal() {
    const Token& t = expect(Tok::String, "literal");
    Literal l;
    l.lexical = t.text;
    l.language = t.language;
    if (!t.datatype_word.empty()) {
      Token dt = t;
      dt.kind = t.datatype_is_iri ? Tok::Iri : Tok::Word;
      dt.text = t.datatype_word;
      l.datatype = resolve(dt);
    }
    return l;
  }

  ConceptExpr parse_concept(bool datatype_position = false) {
    const Token& t = peek();
    if (t.kind == Tok::Iri) return ConceptExpr::named(resolve(next()));
    if (t.kind != Tok::Word)
      throw SyntaxError(t.line, t.column, "expected a class expression, found '" + describe(t) + "'");
    if (peek(1).kind != Tok::LParen) return ConceptExpr::named(resolve(next()));
    if (datatype_position) throw unsupported(t);

    const Token& head = next();
    const std::string& k = head.text;
    expect(Tok::LParen, "'('");
    ConceptExpr result;
    if (k == "ObjectIntersectionOf" || k == "ObjectUnionOf") {
      std::vector<ConceptExpr> ops;
      while (peek().kind != Tok::RParen) ops.push_back(parse_concept());
      if (ops.size() < 2)
        throw SyntaxError(head.line, head.column, k + " needs at least two operands");
      result = k == "ObjectIntersectionOf" ? ConceptExpr::intersection_of(std::move(ops))
                                           : ConceptExpr::union_of(std::move(ops));
    } else if (k == "ObjectSomeValuesFrom" || k == "ObjectAllValuesFrom" ||
               k == "DataSomeValuesFrom" || k == "DataAllValuesFrom") {
      bool data = k.rfind("Data", 0) == 0;
      std::string role = name("property");
      ConceptExpr filler = parse_concept(data);
      result = k.find("Some") != std::string::npos
                   ? ConceptExpr::some_values_from(std::move(role), std::move(filler))
                   : ConceptExpr::all_values_from(std::move(role), std::move(filler));
      result.data_role = data;
    } else if (k == "ObjectHasValue") {
      std::string role = name("property");
      std::string ind = name("individual");
      result = ConceptExpr::has_value(std::move(role), std::move(ind));
    } else if (k.size() > 11 && k.compare(k.size() - 11, 11, "Cardinality") == 0 &&
               (k.rfind("Object", 0) == 0 || k.rfind("Data", 0) == 0)) {
      bool data = k.rfind("Data", 0) == 0;
      std::string op = k.substr(data ? 4 : 6, k.size() - 11 - (data ? 4 : 6));
      ConceptKind kind;
      if (op == "Exact") kind = ConceptKind::ExactCardinality;
      else if (op == "Min") kind = ConceptKind::MinCardinality;
      else if (op == "Max") kind = ConceptKind::MaxCardinality;
      else throw unsupported(head);
      std::uint32_t n = integer();
      std::string role = name("property");
      ConceptExpr filler = peek().kind == Tok::RParen
                               ? ConceptExpr::named(std::string(data ? kRdfsLiteral : kOwlThing))
                               : parse_concept(data);
      result = ConceptExpr::cardinality_of(kind, n, std::move(role), std::move(filler), data);
    } else {
      throw unsupported(head);
    }
    expect(Tok::RParen, "')'");
    return result;
  }

  Axiom axiom_body(const Token& head) {
    const std::string& k = head.text;
    if (k == "SubClassOf" || k == "EquivalentClasses" || k == "DisjointClasses") {
      ConceptExpr lhs = parse_concept();
      ConceptExpr rhs = parse_concept();
      if (peek().kind != Tok::RParen) {
        if (k == "SubClassOf") throw SyntaxError(peek().line, peek().column, "expected ')'");
        throw Error(ErrorCode::UnsupportedConstruct,
                    k + " with more than two operands at " + std::to_string(head.line) + ":" +
                        std::to_string(head.column));
      }
      if (k == "SubClassOf") return Axiom::sub_class_of(std::move(lhs), std::move(rhs));
      if (k == "EquivalentClasses")
        return Axiom::equivalent_classes(std::move(lhs), std::move(rhs));
      return Axiom::disjoint_classes(std::move(lhs), std::move(rhs));
    }
    if (k == "ClassAssertion") {
      ConceptExpr c = parse_concept();
      return Axiom::class_assertion(std::move(c), name("individual"));
    }
    if (k == "ObjectPropertyAssertion") {
      std::string r = name("property");
      std::string s = name("individual");
      return Axiom::object_property_assertion(std::move(r), std::move(s), name("individual"));
    }
    if (k == "DataPropertyAssertion") {
      std::string r = name("property");
      std::string s = name("individual");
      return Axiom::data_property_assertion(std::move(r), std::move(s), literal());
    }
    if (k == "ObjectPropertyDomain" || k == "ObjectPropertyRange" || k == "DataPropertyDomain") {
      std::string r = name("property");
      ConceptExpr c = parse_concept();
      if (k == "ObjectPropertyDomain")
        return Axiom::object_property_domain(std::move(r), std::move(c));
      if (k == "ObjectPropertyRange")
        return Axiom::object_property_range(std::move(r), std::move(c));
      return Axiom::data_property_domain(std::move(r), std::move(c));
    }
    return Axiom::functional_object_property(name("property"));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  bool in_ontology_ = false;

 public:
  PrefixMap prefixes_;
};

}  // namespace

PrefixMap standard_prefixes() {
  return {
      {"owl", "http://www.w3.org/2002/07/owl#"},
      {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
      {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
      {"xsd", "http://www.w3.org/2001/XMLSchema#"},
  };
}

ParsedDocument parse_document(std::string_view text, const ParseOptions& options) {
  Lexer lexer(text);
  Parser parser(lexer.run(), standard_prefixes());
  std::vector<Axiom> axioms;
  while (!parser.at_end()) {
    Axiom a;
    std::size_t end_line = 0;
    if (!parser.statement(a, end_line, true)) continue;
    a.injected = lexer.injected_lines().count(end_line) > 0;
    bool duplicate = false;
    for (const auto& prior : axioms) duplicate = duplicate || structurally_equal(prior, a);
    if (duplicate) continue;
    a.id = "a" + std::to_string(axioms.size() + 1);
    if (options.reject_trivial && is_trivial(a))
      throw Error(ErrorCode::TrivialAxiom,
                  "axiom " + a.id + " is trivial: " + render_axiom(a));
    axioms.push_back(std::move(a));
  }
  if (parser.in_ontology()) throw SyntaxError(1, 1, "unclosed Ontology(");
  return ParsedDocument{Ontology(std::move(axioms)), std::move(parser.prefixes_)};
}

Ontology parse_ontology(std::string_view text, const ParseOptions& options) {
  return parse_document(text, options).ontology;
}

Axiom parse_axiom(std::string_view text, const PrefixMap& prefixes, std::string id) {
  Lexer lexer(text);
  Parser parser(lexer.run(), prefixes);
  if (parser.at_end()) throw SyntaxError(1, 1, "empty axiom");
  Axiom a;
  std::size_t end_line = 0;
  parser.statement(a, end_line, false);
  if (!parser.at_end()) throw SyntaxError(end_line, 1, "trailing input after axiom");
  a.id = std::move(id);
  return a;
}

Axiom parse_query(std::string_view text, const PrefixMap& prefixes, std::string id) {
  try {
    return parse_axiom(text, prefixes, std::move(id));
  } catch (const Error& e) {
    throw Error(ErrorCode::MalformedQuery, "malformed query: " + std::string(e.what()));
  }
}

}  // namespace mcsreason
