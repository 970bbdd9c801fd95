#include "nabla/sexpr.hpp"

#include <cctype>

namespace nabla {

const SExpr& SExpr::at(size_t i) const {
  if (is_atom || i >= items.size())
    throw SExprError("missing list element " + std::to_string(i));
  return items[i];
}

bool SExpr::headed(const std::string& tag) const {
  return !is_atom && !items.empty() && items[0].is_atom && !items[0].quoted &&
         items[0].text == tag;
}

const SExpr* SExpr::child(const std::string& tag) const {
  if (is_atom) return nullptr;
  for (const auto& it : items)
    if (it.headed(tag)) return &it;
  return nullptr;
}

std::vector<const SExpr*> SExpr::children(const std::string& tag) const {
  std::vector<const SExpr*> out;
  if (is_atom) return out;
  for (const auto& it : items)
    if (it.headed(tag)) out.push_back(&it);
  return out;
}

namespace {

struct Reader {
  const std::string& src;
  size_t i = 0;

  void skip() {
    while (i < src.size()) {
      if (std::isspace(static_cast<unsigned char>(src[i]))) {
        ++i;
      } else if (src[i] == ';') {  // comment to end of line
        while (i < src.size() && src[i] != '\n') ++i;
      } else {
        break;
      }
    }
  }

  SExpr read() {
    skip();
    if (i >= src.size()) throw SExprError("unexpected end of input");
    if (src[i] == '(') {
      ++i;
      SExpr e;
      while (true) {
        skip();
        if (i >= src.size()) throw SExprError("unterminated list");
        if (src[i] == ')') {
          ++i;
          return e;
        }
        e.items.push_back(read());
      }
    }
    if (src[i] == ')') throw SExprError("unexpected `)`");
    if (src[i] == '"') {
      ++i;
      SExpr e;
      e.is_atom = true;
      e.quoted = true;
      while (i < src.size() && src[i] != '"') e.text += src[i++];
      if (i >= src.size()) throw SExprError("unterminated string");
      ++i;
      return e;
    }
    SExpr e;
    e.is_atom = true;
    while (i < src.size() && !std::isspace(static_cast<unsigned char>(src[i])) &&
           src[i] != '(' && src[i] != ')' && src[i] != '"' && src[i] != ';')
      e.text += src[i++];
    if (e.text.empty()) throw SExprError("empty atom");
    return e;
  }
};

}  // namespace

SExpr parse_sexpr(const std::string& src) {
  Reader r{src};
  SExpr e = r.read();
  r.skip();
  if (r.i < src.size()) throw SExprError("trailing input after expression");
  return e;
}

std::string quote_string(const std::string& s) {
  if (s.find('"') != std::string::npos)
    throw SExprError("cannot quote a string containing `\"`");
  return "\"" + s + "\"";
}

}  // namespace nabla
