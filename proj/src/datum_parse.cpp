#include "covers/datum_parse.hpp"

#include <cctype>
#include <string>

namespace covers {

namespace {

// Cursor over the input that skips whitespace and remembers byte positions
// for error messages.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t pos() {
    skip_ws();
    return pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(pos_, "expected '" + std::string(1, c) + "' " + what);
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::int64_t integer(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() ||
        !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(start, "expected an integer " + what);
    std::int64_t value = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > (std::int64_t{1} << 40))
        throw ParseError(start, "integer too large " + what);
      ++pos_;
    }
    return neg ? -value : value;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::variant<CyclicCoverDatum, AbelianCoverDatum> parse_datum(
    std::string_view text) {
  Cursor cur(text);
  const char head = cur.peek();

  if (head == 'm' || head == 'M') {
    cur.expect(head, "at the start of a cyclic datum");
    cur.expect('=', "after 'm'");
    std::int64_t m = cur.integer("for m");
    cur.expect('N', "(branch count) after m");
    cur.expect('=', "after 'N'");
    std::int64_t n = cur.integer("for N");
    cur.expect('a', "(monodromy list) after N");
    cur.expect('=', "after 'a'");
    std::size_t list_pos = cur.pos();
    std::vector<std::int64_t> a;
    a.push_back(cur.integer("in the monodromy list"));
    while (cur.accept(',')) a.push_back(cur.integer("in the monodromy list"));
    if (!cur.done())
      throw ParseError(cur.pos(), "unexpected trailing input");
    if (static_cast<std::int64_t>(a.size()) != n)
      throw ParseError(list_pos, "N = " + std::to_string(n) + " but a has " +
                                     std::to_string(a.size()) + " entries");
    return validate_cyclic(m, n, a);
  }

  if (head == 'A') {
    cur.expect('A', "at the start of an abelian datum");
    cur.expect('=', "after 'A'");
    std::int64_t m1 = cur.integer("for m1");
    cur.expect('x', "between m1 and m2");
    std::int64_t m2 = cur.integer("for m2");
    cur.expect('N', "(branch count) after the group");
    cur.expect('=', "after 'N'");
    std::int64_t n = cur.integer("for N");
    cur.expect('a', "(monodromy list) after N");
    cur.expect('=', "after 'a'");
    std::size_t list_pos = cur.pos();
    std::vector<MonodromyPair> a;
    auto pair = [&]() {
      cur.expect('(', "opening a monodromy pair");
      std::int64_t x1 = cur.integer("for the first pair component");
      cur.expect(',', "between pair components");
      std::int64_t x2 = cur.integer("for the second pair component");
      cur.expect(')', "closing a monodromy pair");
      return MonodromyPair{x1, x2};
    };
    a.push_back(pair());
    while (cur.accept(',')) a.push_back(pair());
    if (!cur.done())
      throw ParseError(cur.pos(), "unexpected trailing input");
    if (static_cast<std::int64_t>(a.size()) != n)
      throw ParseError(list_pos, "N = " + std::to_string(n) + " but a has " +
                                     std::to_string(a.size()) + " entries");
    return validate_abelian(m1, m2, n, a);
  }

  throw ParseError(cur.pos(),
                   "expected 'm=' (cyclic datum) or 'A=' (abelian datum)");
}

std::string format_monodromy(const CyclicCoverDatum& d) {
  std::string s;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(d.a[i]);
  }
  return s;
}

std::string format_monodromy(const AbelianCoverDatum& d) {
  std::string s;
  for (std::size_t i = 0; i < d.a.size(); ++i) {
    if (i) s += ',';
    s += '(' + std::to_string(d.a[i].first) + ',' +
         std::to_string(d.a[i].second) + ')';
  }
  return s;
}

std::string group_label(const CyclicCoverDatum& d) {
  return std::to_string(d.m);
}

std::string group_label(const AbelianCoverDatum& d) {
  return std::to_string(d.m1) + "x" + std::to_string(d.m2);
}

std::string to_text(const CyclicCoverDatum& d) {
  return "m=" + std::to_string(d.m) +
         " N=" + std::to_string(d.branch_count()) +
         " a=" + format_monodromy(d);
}

std::string to_text(const AbelianCoverDatum& d) {
  return "A=" + group_label(d) + " N=" + std::to_string(d.branch_count()) +
         " a=" + format_monodromy(d);
}

}  // namespace covers
