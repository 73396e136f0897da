#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace csf {

/// A finite sequence of positive integers. The empty composition is a valid
/// value (size 0, length 0) and is the identity for concat().
///
/// Parts are addressed 1-based with part(k); negative k counts from the end,
/// so part(-1) is the last part.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  int part(int k) const;
  int first() const { return part(1); }
  int last() const { return part(-1); }

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// A sequence of nonnegative integers of fixed length.
class WeakComposition {
 public:
  explicit WeakComposition(std::vector<int> parts);
  std::span<const int> parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](std::size_t i) const { return parts_[i]; }
  /// The composition obtained by dropping zero parts.
  Composition drop_zeros() const;
  friend bool operator==(const WeakComposition&, const WeakComposition&) = default;

 private:
  std::vector<int> parts_;
};

/// A weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  /// Sorts the given positive parts into weakly decreasing order.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Multiset union of parts.
  Partition merged(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

std::string to_string(const Composition& c);
std::string to_string(const Partition& p);
std::ostream& operator<<(std::ostream& os, const Composition& c);
std::ostream& operator<<(std::ostream& os, const Partition& p);

// Enumeration. All outputs are in lexicographic order of part sequences.
std::vector<Composition> compositions_of(int n);
/// Compositions of n with every part >= 2.
std::vector<Composition> compositions_min2(int n);
/// All weak compositions of `total` with exactly `length` parts.
std::vector<WeakComposition> weak_compositions(int total, int length);

// Statistics.
/// i_1 (i_2 - 1) ... (i_l - 1); I must be nonempty.
long long w(const Composition& I);
/// w(I \ i_{-1}), with the value 1 when removing the last part leaves nothing.
long long w_without_last(const Composition& I);

/// Smallest prefix sum (empty prefix included) that is >= a; 0 <= a <= |I|.
int sigma(const Composition& I, int a);
int theta(const Composition& I, int a);
/// Largest prefix sum that is <= a; 0 <= a <= |I|.
int sigma_minus(const Composition& I, int a);
int theta_minus(const Composition& I, int a);
/// The part straddling position a (0 if a is a prefix sum); 1 <= a <= |I|-1.
int gap(const Composition& I, int a);

Partition rho(const Composition& I);
Composition reverse(const Composition& I);
Composition remove_part(const Composition& I, int k);
Composition concat(const Composition& I, const Composition& J);
/// I with the single part `x` appended / prepended.
Composition append(const Composition& I, int x);
Composition prepend(int x, const Composition& I);

}  // namespace csf
