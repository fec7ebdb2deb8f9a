#include "ratarc/polynomial_text.hpp"

#include <cctype>
#include <numeric>

#include "ratarc/errors.hpp"

namespace ratarc {

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = std::accumulate(a.begin(), a.end(), 0);
  const int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : s_(text), vars_(vars) {}

  RationalTerms run() {
    RationalTerms out;
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [exponent, coeff] = term();
      out[exponent] += sign * coeff;
      skip();
    }
    for (auto it = out.begin(); it != out.end();) {
      if (sgn(it->second) == 0)
        it = out.erase(it);
      else
        ++it;
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("polynomial '" + std::string(s_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  BigInt integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(std::string(s_.substr(start, pos_ - start)), 10);
  }

  std::pair<Exponent, BigRational> term() {
    Exponent e(vars_.size(), 0);
    BigRational coeff = 1;
    bool have_factor = false;
    while (true) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        BigInt num = integer();
        BigInt den = 1;
        skip();
        if (peek() == '/') {
          ++pos_;
          skip();
          den = integer();
          if (sgn(den) == 0) fail("zero denominator");
        }
        BigRational q(num, den);
        q.canonicalize();
        coeff *= q;
      } else {
        std::size_t best = vars_.size();
        std::size_t best_len = 0;
        for (std::size_t v = 0; v < vars_.size(); ++v) {
          const auto& name = vars_[v];
          if (s_.substr(pos_, name.size()) == name && name.size() > best_len) {
            best = v;
            best_len = name.size();
          }
        }
        if (best == vars_.size()) fail("unknown symbol");
        pos_ += best_len;
        skip();
        int power = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          power = static_cast<int>(integer().get_si());
        }
        e[best] += power;
      }
      have_factor = true;
      skip();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!have_factor) fail("empty term");
    return {e, coeff};
  }

  std::string_view s_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalTerms parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  return Parser(text, variables).run();
}

std::string format_polynomial(const RationalTerms& terms, std::span<const std::string> variables) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variables[v];
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

std::vector<std::string> homogeneous_variables(int n) {
  std::vector<std::string> v;
  for (int i = 0; i <= n; ++i) v.push_back("X" + std::to_string(i));
  return v;
}

std::vector<std::string> affine_variables(int N) {
  std::vector<std::string> v;
  for (int i = 1; i <= N; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace ratarc
