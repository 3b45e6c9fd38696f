#include <algorithm>
#include <cctype>
#include <optional>

#include "wittmod/cli.hpp"

namespace wittmod {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

// Splits on `sep` outside parentheses.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth < 0) throw UsageError("unbalanced parentheses in '" + s + "'");
    if (ch == sep && depth == 0) {
      out.push_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (depth != 0) throw UsageError("unbalanced parentheses in '" + s + "'");
  out.push_back(strip(cur));
  return out;
}

// "Name(args)" -> {"Name", "args"}; "Name" -> {"Name", ""}.
std::pair<std::string, std::optional<std::string>> call_form(const std::string& s) {
  const auto open = s.find('(');
  if (open == std::string::npos) return {strip(s), std::nullopt};
  if (s.back() != ')') throw UsageError("malformed expression '" + s + "'");
  return {strip(s.substr(0, open)), s.substr(open + 1, s.size() - open - 2)};
}

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  std::vector<std::string> names() {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s_.size();) {
      if (std::isalpha(static_cast<unsigned char>(s_[i]))) {
        std::size_t j = i;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        out.push_back(s_.substr(i, j - i));
        i = j;
      } else if (std::isdigit(static_cast<unsigned char>(s_[i]))) {
        while (i < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i]))) ++i;
      } else {
        ++i;
      }
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw UsageError("bad scalar '" + s_ + "': " + msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = term();
    while (true) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        const Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    Scalar base = primary();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be an integer");
      const int e = std::stoi(s_.substr(start, pos_ - start));
      if (neg && base.is_zero()) fail("division by zero");
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  Scalar primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(mpq_class(mpz_class(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      return Scalar::parameter(s_.substr(start, pos_ - start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::vector<Scalar> scalar_list(const std::string& token, const std::string& args, int expected) {
  const auto parts = split_top(args, ',');
  if (static_cast<int>(parts.size()) != expected) {
    throw UsageError(token + " has " + std::to_string(parts.size()) + " parameters, expected " + std::to_string(expected));
  }
  std::vector<Scalar> out;
  for (const auto& p : parts) out.push_back(parse_scalar(p));
  return out;
}

Factor parse_factor(const std::string& token) {
  const auto [name, args] = call_form(token);
  if (name == "Apoly" && !args) return {FactorKind::poly, {}};
  if (name == "Alaurent" && !args) return {FactorKind::laurent, {}};
  if (name == "Quot" && !args) return {FactorKind::quot, {}};
  if (name == "TL" && args) return {FactorKind::twisted, scalar_list(token, *args, 1).front()};
  if (name == "Whittaker" && args) return {FactorKind::whittaker, scalar_list(token, *args, 1).front()};
  throw UsageError("unknown module kind '" + token + "'");
}

int small_int(const std::string& token, const std::string& args) {
  const Scalar s = parse_scalar(args);
  if (!s.is_rational() || s.rational().get_den() != 1 || !s.rational().get_num().fits_sint_p()) {
    throw UsageError(token + " needs an integer argument");
  }
  return static_cast<int>(s.rational().get_num().get_si());
}

}  // namespace

Scalar parse_scalar(const std::string& text) { return ScalarParser(text).parse(); }

std::vector<std::string> expression_parameters(const std::string& text) {
  static const std::vector<std::string> keywords{"Apoly", "Alaurent", "Quot", "TL", "Whittaker", "Tensor",
                                                 "Nat", "Ext", "Sym", "Triv"};
  std::vector<std::string> out;
  for (auto& name : ScalarParser(text).names()) {
    if (std::find(keywords.begin(), keywords.end(), name) != keywords.end()) continue;
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

WeylModule parse_P(const std::string& text, int n) {
  const std::string s = strip(text);
  const auto [name, args] = call_form(s);
  try {
    if (name == "Apoly" && !args) return WeylModule::apoly(n);
    if (name == "Alaurent" && !args) return WeylModule::alaurent(n);
    if (name == "Quot" && !args) return WeylModule::quot(n);
    if (name == "TL" && args) return WeylModule::twisted(scalar_list(s, *args, n));
    if (name == "Whittaker" && args) return WeylModule::whittaker(scalar_list(s, *args, n));
    if (name == "Tensor" && args) {
      const auto parts = split_top(*args, ',');
      if (static_cast<int>(parts.size()) != n) {
        throw UsageError(s + " has " + std::to_string(parts.size()) + " factors, expected " + std::to_string(n));
      }
      std::vector<Factor> factors;
      for (const auto& p : parts) factors.push_back(parse_factor(p));
      return WeylModule(std::move(factors));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(s + ": " + e.what());
  }
  throw UsageError("unknown module kind '" + s + "'");
}

GlModule parse_M(const std::string& text, int n) {
  const auto parts = split_top(strip(text), '*');
  std::optional<GlModule> acc;
  for (const auto& token : parts) {
    const auto [name, args] = call_form(token);
    std::optional<GlModule> m;
    if (name == "Nat" && !args) {
      m = natural_module(n);
    } else if (name == "Ext" && args) {
      const int k = small_int(token, *args);
      if (k < 0 || k > n) throw UsageError(token + " invalid for n=" + std::to_string(n));
      m = exterior_power(k, n);
    } else if (name == "Sym" && args) {
      const int k = small_int(token, *args);
      if (k < 0) throw UsageError(token + " invalid for n=" + std::to_string(n));
      m = sym_power(k, n);
    } else if (name == "Triv" && args) {
      m = scalar_module(parse_scalar(*args), n);
    } else {
      throw UsageError("unknown module kind '" + token + "'");
    }
    acc = acc ? tensor_module(*acc, *m) : *m;
  }
  return *acc;
}

}  // namespace wittmod
