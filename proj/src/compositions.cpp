#include "csf/compositions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

#include "csf/errors.hpp"

namespace csf {

namespace {

void check_positive(const std::vector<int>& parts, const char* what) {
  for (int p : parts) require(p >= 1, std::string(what) + ": parts must be positive");
}

// Prefix sums 0 = s_0 < s_1 < ... < s_l = |I|.
std::vector<int> prefix_sums(const Composition& I) {
  std::vector<int> s(I.length() + 1, 0);
  for (int k = 0; k < I.length(); ++k) s[k + 1] = s[k] + I.vec()[k];
  return s;
}

void check_position(const Composition& I, int a, const char* what) {
  require(!I.empty(), std::string(what) + ": empty composition");
  require(0 <= a && a <= I.size(), std::string(what) + ": position out of range");
}

template <class Emit>
void enumerate(int remaining, int min_part, std::vector<int>& prefix, const Emit& emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  for (int p = min_part; p <= remaining; ++p) {
    prefix.push_back(p);
    enumerate(remaining - p, min_part, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_positive(parts_, "Composition");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Composition::part(int k) const {
  const int l = length();
  require(k != 0 && k >= -l && k <= l, "Composition::part: index out of range");
  return k > 0 ? parts_[k - 1] : parts_[l + k];
}

WeakComposition::WeakComposition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) require(p >= 0, "WeakComposition: parts must be nonnegative");
}

int WeakComposition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Composition WeakComposition::drop_zeros() const {
  std::vector<int> nz;
  std::copy_if(parts_.begin(), parts_.end(), std::back_inserter(nz), [](int p) { return p > 0; });
  return Composition(std::move(nz));
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  check_positive(parts_, "Partition");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::merged(const Partition& other) const {
  std::vector<int> out;
  out.reserve(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(), std::back_inserter(out),
             std::greater<>());
  Partition p;
  p.parts_ = std::move(out);
  return p;
}

namespace {
std::string join_parts(std::span<const int> parts) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  os << ']';
  return os.str();
}
}  // namespace

std::string to_string(const Composition& c) { return join_parts(c.parts()); }
std::string to_string(const Partition& p) { return join_parts(p.parts()); }
std::ostream& operator<<(std::ostream& os, const Composition& c) { return os << to_string(c); }
std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << to_string(p); }

std::vector<Composition> compositions_of(int n) {
  require(n >= 0, "compositions_of: n must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> prefix;
  enumerate(n, 1, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<Composition> compositions_min2(int n) {
  require(n >= 0, "compositions_min2: n must be nonnegative");
  std::vector<Composition> out;
  std::vector<int> prefix;
  enumerate(n, 2, prefix, [&](const std::vector<int>& p) { out.emplace_back(p); });
  return out;
}

std::vector<WeakComposition> weak_compositions(int total, int length) {
  require(total >= 0 && length >= 1, "weak_compositions: need total >= 0 and length >= 1");
  std::vector<WeakComposition> out;
  std::vector<int> cur(length, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == length - 1) {
      cur[pos] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, total);
  return out;
}

long long w(const Composition& I) {
  require(!I.empty(), "w: empty composition");
  long long r = I.first();
  for (int k = 1; k < I.length(); ++k) r *= I.vec()[k] - 1;
  return r;
}

long long w_without_last(const Composition& I) {
  require(!I.empty(), "w_without_last: empty composition");
  if (I.length() == 1) return 1;
  return w(remove_part(I, -1));
}

int sigma(const Composition& I, int a) {
  check_position(I, a, "sigma");
  for (int s : prefix_sums(I)) {
    if (s >= a) return s;
  }
  return I.size();
}

int theta(const Composition& I, int a) { return sigma(I, a) - a; }

int sigma_minus(const Composition& I, int a) {
  check_position(I, a, "sigma_minus");
  int best = 0;
  for (int s : prefix_sums(I)) {
    if (s <= a) best = s;
  }
  return best;
}

int theta_minus(const Composition& I, int a) { return a - sigma_minus(I, a); }

int gap(const Composition& I, int a) {
  require(1 <= a && a <= I.size() - 1, "gap: position out of range");
  return theta(I, a) + theta_minus(I, a);
}

Partition rho(const Composition& I) { return Partition(I.vec()); }

Composition reverse(const Composition& I) {
  std::vector<int> r(I.vec().rbegin(), I.vec().rend());
  return Composition(std::move(r));
}

Composition remove_part(const Composition& I, int k) {
  const int l = I.length();
  require(k != 0 && k >= -l && k <= l, "remove_part: index out of range");
  const int idx = k > 0 ? k - 1 : l + k;
  std::vector<int> r = I.vec();
  r.erase(r.begin() + idx);
  return Composition(std::move(r));
}

Composition concat(const Composition& I, const Composition& J) {
  std::vector<int> r = I.vec();
  r.insert(r.end(), J.vec().begin(), J.vec().end());
  return Composition(std::move(r));
}

Composition append(const Composition& I, int x) { return concat(I, Composition{x}); }
Composition prepend(int x, const Composition& I) { return concat(Composition{x}, I); }

}  // namespace csf
