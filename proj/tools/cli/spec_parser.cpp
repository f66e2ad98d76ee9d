#include "spec_parser.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace pblring::cli {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  RingSpec parse() {
    auto spec = parse_spec();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view identifier() {
    skip_ws();
    const auto start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected a constructor name");
    return s_.substr(start, pos_ - start);
  }

  std::size_t integer() {
    skip_ws();
    std::size_t v = 0;
    const auto* first = s_.data() + pos_;
    const auto* last = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec == std::errc::result_out_of_range) throw ParseError(pos_, "integer out of range");
    if (ec != std::errc() || ptr == first) throw ParseError(pos_, "expected a non-negative integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }

  RingSpec parse_spec() {
    const auto at = pos_;
    const auto name = identifier();
    expect('(');
    RingSpec out;
    if (name == "zmod") {
      const auto n = integer();
      if (n == 0) throw ParseError(at, "zmod modulus must be at least 1");
      out = RingSpec::zmod(n);
    } else if (name == "matrix") {
      auto base = parse_spec();
      expect(',');
      const auto k = integer();
      if (k == 0) throw ParseError(at, "matrix size must be at least 1");
      out = RingSpec::matrix(std::move(base), k);
    } else if (name == "quotient") {
      auto base = parse_spec();
      expect(',');
      expect('[');
      std::vector<Element> gens;
      if (!accept(']')) {
        do {
          const auto g_at = pos_;
          const auto g = integer();
          if (g > std::numeric_limits<Element>::max()) throw ParseError(g_at, "generator out of range");
          gens.push_back(static_cast<Element>(g));
        } while (accept(','));
        expect(']');
      }
      out = RingSpec::quotient(std::move(base), std::move(gens));
    } else if (name == "product") {
      std::vector<RingSpec> factors;
      do {
        factors.push_back(parse_spec());
      } while (accept(','));
      out = RingSpec::product(std::move(factors));
    } else if (name == "tables") {
      skip_ws();
      const auto start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ')' && s_[pos_] != '(') ++pos_;
      auto source = std::string(s_.substr(start, pos_ - start));
      while (!source.empty() && std::isspace(static_cast<unsigned char>(source.back()))) source.pop_back();
      if (source.empty()) throw ParseError(start, "expected a table file path or builtin:NAME");
      constexpr std::string_view builtin = "builtin:";
      if (source.rfind(builtin, 0) == 0) {
        const auto key = source.substr(builtin.size());
        bool known = false;
        for (const auto& n : builtin_table_names()) known = known || n == key;
        if (!known) throw ParseError(start, "unknown builtin table ring '" + key + "'");
        out = RingSpec::builtin(key);
      } else {
        out = RingSpec::from_tables(load_table_file(source), source);
      }
    } else {
      throw ParseError(at, "unknown constructor '" + std::string(name) + "'");
    }
    expect(')');
    return out;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace pblring::cli
