#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "shortpres/perm.hpp"

namespace shortpres {

/// 2x2 matrix over F_p, acting on row vectors from the right.
struct Mat2p {
  std::int64_t p = 2;
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  /// Entries are reduced into [0, p).
  static Mat2p make(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static Mat2p identity(std::int64_t p) { return make(p, 1, 0, 0, 1); }

  Mat2p operator*(Mat2p const &o) const;
  Mat2p inverse() const;
  Mat2p pow(std::int64_t e) const;
  Mat2p identity_like() const { return identity(p); }
  Mat2p negate() const { return make(p, -a, -b, -c, -d); }
  Mat2p scaled(std::int64_t lambda) const { return make(p, lambda * a, lambda * b, lambda * c, lambda * d); }
  std::int64_t det() const;
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  std::string to_string() const;

  bool operator==(Mat2p const &) const = default;
};

/// t = (-1)^k [[0,-1],[1,0]], u = (-1)^k [[1,1],[0,1]] with k = p mod 3.
std::pair<Mat2p, Mat2p> gens_tu(std::int64_t p);
/// The unsigned pair t' = [[0,1],[-1,0]], u' = [[1,1],[0,1]].
std::pair<Mat2p, Mat2p> gens_tu_original(std::int64_t p);

/// x^2 = (xy)^3 and (x y^4 x y^((p+1)/2))^2 y^p x^(2 floor(p/3)) = 1.
bool check_cr_relators(std::int64_t p, Mat2p const &x, Mat2p const &y);

/**
 * v = u^jbar (u^j)^t u^jbar t^((-1)^k) when corrected, else the same word
 * ending in t^-1. The corrected form requires j * (p mod 3) to be even.
 */
Mat2p element_v(std::int64_t p, std::int64_t j, std::int64_t jbar, bool corrected);

/// Order of <gens> by closure; p <= 100.
std::uint64_t subgroup_order(std::int64_t p, std::vector<Mat2p> const &gens);

/// Action on P^1(F_p): alpha in 0..p-1 is the span of (1,alpha), p encodes infinity.
Permutation projective_perm(Mat2p const &m);

struct OriginalHSearch {
  std::uint64_t pairs_satisfying = 0;
  std::uint64_t pairs_with_full_stabilizer = 0;
};

/**
 * Every pair (x,y) in SL(2,p)^2 satisfying the Campbell-Robertson relators,
 * counting those where <y, y^jbar (y^j)^x y^jbar x^-1> has order p(p-1).
 */
OriginalHSearch search_original_h(std::int64_t p, std::int64_t j);

} // namespace shortpres
