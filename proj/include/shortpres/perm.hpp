#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace shortpres {

using BigInt = boost::multiprecision::cpp_int;
using Point = std::int64_t;

/// Closed integer interval [lo, hi]; permutation domains may start below 1.
struct Interval {
  Point lo = 1;
  Point hi = 0;

  std::size_t size() const { return hi < lo ? 0 : static_cast<std::size_t>(hi - lo + 1); }
  bool contains(Point x) const { return lo <= x && x <= hi; }
  bool operator==(const Interval &) const = default;
};

using Cycle = std::vector<Point>;

/**
 * A bijection of an integer interval onto itself.
 *
 * Group actions are right actions: x^(st) = (x^s)^t, so `s * t` applies `s`
 * first. With this convention (1,2)(2,3) = (1,3,2).
 */
class Permutation {
public:
  Permutation() = default;

  static Permutation identity(Interval domain);

  /// `images[i]` is the image of `domain.lo + i`. Throws unless bijective.
  static Permutation from_images(Interval domain, std::vector<Point> const &images);

  static Permutation from_cycles(Interval domain, std::span<const Cycle> cycles);
  static Permutation from_cycles(Interval domain, std::initializer_list<Cycle> cycles)
  { return from_cycles(domain, std::span<const Cycle>(cycles.begin(), cycles.size())); }

  /// Parses disjoint-cycle notation such as "(-3,13)(-2,12)" or "()".
  static Permutation parse(Interval domain, std::string_view text);

  Interval domain() const { return domain_; }
  std::size_t degree() const { return images_.size(); }

  Point image(Point x) const
  { return domain_.lo + static_cast<Point>(images_[static_cast<std::size_t>(x - domain_.lo)]); }

  Permutation operator*(Permutation const &rhs) const;
  Permutation inverse() const;
  Permutation pow(std::int64_t e) const;
  /// g^-1 * this * g
  Permutation conjugate(Permutation const &g) const;
  Permutation identity_like() const { return identity(domain_); }

  bool is_identity() const;
  int sign() const;
  int epsilon() const { return sign() == 1 ? 0 : 1; }
  BigInt order() const;
  std::vector<Point> support() const;

  /// Cycles of length >= 2, each starting at its minimum, sorted by minimum.
  std::vector<Cycle> cycles() const;
  /// Multiset of cycle lengths >= 2, ascending.
  std::vector<std::size_t> cycle_type() const;

  std::string to_string() const;

  bool operator==(Permutation const &) const = default;

  // raw 0-offset access for the verification algorithms
  std::uint32_t offset_image(std::size_t i) const { return images_[i]; }

private:
  Permutation(Interval domain, std::vector<std::uint32_t> images)
  : domain_(domain), images_(std::move(images))
  {}

  void require_same_domain(Permutation const &other) const;

  Interval domain_{};
  std::vector<std::uint32_t> images_;
};

Permutation compose(Permutation const &first, Permutation const &second);
Permutation conjugate(Permutation const &sigma, Permutation const &g);

std::set<Point> orbit(std::span<const Permutation> gens, Point x);

} // namespace shortpres
