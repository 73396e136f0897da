#include "csf/symfunc.hpp"

#include <cctype>
#include <mutex>
#include <sstream>
#include <vector>

#include "csf/errors.hpp"

namespace csf {

ESymFunc ESymFunc::one() {
  ESymFunc f;
  f.terms_.emplace(Partition{}, BigRational(1));
  return f;
}

BigRational ESymFunc::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? BigRational(0) : it->second;
}

void ESymFunc::add_term(const Partition& lambda, const BigRational& c) {
  if (c.is_zero()) return;
  const int d = lambda.size();
  if (terms_.empty()) {
    degree_ = d;
  } else if (d != degree_) {
    throw ContractError("ESymFunc: adding degree " + std::to_string(d) + " term to degree " +
                        std::to_string(degree_) + " function");
  }
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  if (terms_.empty()) degree_ = 0;
}

ESymFunc& ESymFunc::operator+=(const ESymFunc& rhs) {
  if (!is_zero() && !rhs.is_zero() && degree_ != rhs.degree_) {
    throw ContractError("ESymFunc: adding functions of different degrees");
  }
  for (const auto& [lambda, c] : rhs.terms_) add_term(lambda, c);
  return *this;
}

ESymFunc& ESymFunc::operator-=(const ESymFunc& rhs) { return *this += scale(rhs, -1); }

ESymFunc e_term(const Composition& I, const BigRational& c) { return e_term(rho(I), c); }

ESymFunc e_term(const Partition& lambda, const BigRational& c) {
  ESymFunc f;
  f.add_term(lambda, c);
  return f;
}

ESymFunc add(const ESymFunc& f, const ESymFunc& g) {
  ESymFunc r = f;
  r += g;
  return r;
}

ESymFunc scale(const ESymFunc& f, const BigRational& c) {
  ESymFunc r;
  if (c.is_zero()) return r;
  for (const auto& [lambda, coeff] : f.terms()) r.add_term(lambda, coeff * c);
  return r;
}

ESymFunc mul(const ESymFunc& f, const ESymFunc& g) {
  ESymFunc r;
  for (const auto& [lf, cf] : f.terms()) {
    for (const auto& [lg, cg] : g.terms()) r.add_term(lf.merged(lg), cf * cg);
  }
  return r;
}

ESymFunc operator+(ESymFunc f, const ESymFunc& g) { return f += g; }
ESymFunc operator-(ESymFunc f, const ESymFunc& g) { return f -= g; }
ESymFunc operator*(const ESymFunc& f, const ESymFunc& g) { return mul(f, g); }
ESymFunc operator*(const BigRational& c, const ESymFunc& f) { return scale(f, c); }

bool is_e_positive(const ESymFunc& f) {
  for (const auto& [lambda, c] : f.terms()) {
    if (c.sign() < 0) return false;
  }
  return true;
}

bool has_integer_coefficients(const ESymFunc& f) {
  for (const auto& [lambda, c] : f.terms()) {
    if (!c.is_integer()) return false;
  }
  return true;
}

std::optional<std::pair<Partition, BigRational>> min_term(const ESymFunc& f) {
  std::optional<std::pair<Partition, BigRational>> best;
  for (const auto& [lambda, c] : f.terms()) {
    if (!best || c < best->second) best.emplace(lambda, c);
  }
  return best;
}

ESymFunc p_to_e(int k) {
  require(k >= 1, "p_to_e: k must be positive");
  static std::mutex mutex;
  static std::vector<ESymFunc> cache{ESymFunc{}};  // index 0 unused
  std::lock_guard lock(mutex);
  while (static_cast<int>(cache.size()) <= k) {
    const int m = static_cast<int>(cache.size());
    // p_m = (-1)^{m-1} m e_m + sum_{i=1}^{m-1} (-1)^{m-1-i} e_{m-i} p_i
    ESymFunc pm = e_term(Partition{m}, BigRational((m - 1) % 2 == 0 ? m : -m));
    for (int i = 1; i < m; ++i) {
      const int sign = (m - 1 - i) % 2 == 0 ? 1 : -1;
      pm += scale(mul(e_term(Partition{m - i}), cache[i]), sign);
    }
    cache.push_back(std::move(pm));
  }
  return cache[k];
}

BigRational evaluate_at(const ESymFunc& f, std::span<const BigRational> xs) {
  // e_j(xs) for j = 0..m by the usual one-variable-at-a-time recurrence.
  std::vector<BigRational> e(xs.size() + 1, BigRational(0));
  e[0] = 1;
  for (std::size_t v = 0; v < xs.size(); ++v) {
    for (std::size_t j = v + 1; j >= 1; --j) e[j] += e[j - 1] * xs[v];
  }
  BigRational total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    BigRational term = c;
    for (int part : lambda.parts()) {
      if (static_cast<std::size_t>(part) >= e.size()) {
        term = 0;
        break;
      }
      term *= e[part];
    }
    total += term;
  }
  return total;
}

std::string to_text(const ESymFunc& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [lambda, c] : f.terms()) {
    if (first) {
      os << c;
    } else if (c.sign() < 0) {
      os << " - " << -c;
    } else {
      os << " + " << c;
    }
    os << "*e" << to_string(lambda);
    first = false;
  }
  return os.str();
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  ESymFunc parse() {
    skip_ws();
    if (s_.substr(pos_) == "0") return {};
    ESymFunc f;
    int sign = 1;
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    }
    while (true) {
      skip_ws();
      BigRational c = BigRational::parse(take_while([](char ch) { return std::isdigit(ch) || ch == '/'; }));
      expect('*');
      expect('e');
      expect('[');
      std::vector<int> parts;
      if (peek() != ']') {
        while (true) {
          const std::string digits = take_while([](char ch) { return std::isdigit(ch); });
          if (digits.empty()) fail("expected part");
          parts.push_back(std::stoi(digits));
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          break;
        }
      }
      expect(']');
      f.add_term(Partition(parts), sign > 0 ? c : -c);
      skip_ws();
      if (pos_ == s_.size()) break;
      const char op = s_[pos_++];
      if (op != '+' && op != '-') fail("expected + or -");
      sign = op == '+' ? 1 : -1;
    }
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ContractError("parse_text: " + what + " at offset " + std::to_string(pos_));
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }
  template <class Pred>
  std::string take_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && pred(s_[pos_])) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

ESymFunc parse_text(std::string_view text) {
  try {
    return TextParser(text).parse();
  } catch (const std::invalid_argument& e) {
    throw ContractError(std::string("parse_text: ") + e.what());
  }
}

nlohmann::json to_records(const ESymFunc& f) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms()) {
    out.push_back({{"partition", lambda.vec()}, {"num", c.numerator().get_str()}, {"den", c.denominator().get_str()}});
  }
  return out;
}

ESymFunc from_records(const nlohmann::json& records) {
  require(records.is_array(), "from_records: expected an array");
  ESymFunc f;
  for (const auto& r : records) {
    try {
      const auto parts = r.at("partition").get<std::vector<int>>();
      const auto num = r.at("num").get<std::string>();
      const auto den = r.at("den").get<std::string>();
      f.add_term(Partition(parts), BigRational::parse(num + "/" + den));
    } catch (const nlohmann::json::exception& e) {
      throw ContractError(std::string("from_records: ") + e.what());
    }
  }
  return f;
}

}  // namespace csf
