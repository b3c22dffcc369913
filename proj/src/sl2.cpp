#include "shortpres/sl2.hpp"

#include <unordered_set>

#include "shortpres/error.hpp"
#include "shortpres/numth.hpp"

namespace shortpres {

Mat2p Mat2p::make(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
{
  if (p < 2)
    throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  return Mat2p{p, mod(a, p), mod(b, p), mod(c, p), mod(d, p)};
}

Mat2p Mat2p::operator*(Mat2p const &o) const
{
  if (p != o.p)
    throw Error(ErrorKind::DomainMismatch, "matrices over different fields");
  return make(p, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

std::int64_t Mat2p::det() const { return mod(a * d - b * c, p); }

Mat2p Mat2p::inverse() const
{
  std::int64_t dt = det();
  if (dt == 0)
    throw Error(ErrorKind::InvalidArgument, "singular matrix");
  std::int64_t inv = inverse_mod(dt, p);
  return make(p, d * inv, -b * inv, -c * inv, a * inv);
}

Mat2p Mat2p::pow(std::int64_t e) const
{
  Mat2p base = e < 0 ? inverse() : *this;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  Mat2p result = identity(p);
  while (n) {
    if (n & 1)
      result = result * base;
    base = base * base;
    n >>= 1;
  }
  return result;
}

std::string Mat2p::to_string() const
{
  return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," + std::to_string(d) + "]]";
}

namespace {

void require_large_prime(std::int64_t p)
{
  if (p <= 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::InvalidArgument, "need a prime p > 3, got " + std::to_string(p));
}

std::uint64_t encode(Mat2p const &m)
{
  auto q = static_cast<std::uint64_t>(m.p);
  return ((static_cast<std::uint64_t>(m.a) * q + static_cast<std::uint64_t>(m.b)) * q + static_cast<std::uint64_t>(m.c)) * q +
         static_cast<std::uint64_t>(m.d);
}

std::uint64_t closure_size(std::vector<Mat2p> const &gens, std::int64_t p)
{
  Mat2p id = Mat2p::identity(p);
  std::unordered_set<std::uint64_t> seen{encode(id)};
  std::vector<Mat2p> frontier{id};
  while (!frontier.empty()) {
    Mat2p cur = frontier.back();
    frontier.pop_back();
    for (auto const &g : gens) {
      Mat2p next = cur * g;
      if (seen.insert(encode(next)).second)
        frontier.push_back(next);
    }
  }
  return seen.size();
}

} // namespace

std::pair<Mat2p, Mat2p> gens_tu(std::int64_t p)
{
  require_large_prime(p);
  std::int64_t sign = (p % 3) % 2 == 0 ? 1 : -1;
  return {Mat2p::make(p, 0, -sign, sign, 0), Mat2p::make(p, sign, sign, 0, sign)};
}

std::pair<Mat2p, Mat2p> gens_tu_original(std::int64_t p)
{
  require_large_prime(p);
  return {Mat2p::make(p, 0, 1, -1, 0), Mat2p::make(p, 1, 1, 0, 1)};
}

bool check_cr_relators(std::int64_t p, Mat2p const &x, Mat2p const &y)
{
  if (!(x * x == (x * y).pow(3)))
    return false;
  Mat2p inner = x * y.pow(4) * x * y.pow((p + 1) / 2);
  return (inner.pow(2) * y.pow(p) * x.pow(2 * (p / 3))).is_identity();
}

Mat2p element_v(std::int64_t p, std::int64_t j, std::int64_t jbar, bool corrected)
{
  auto [t, u] = gens_tu(p);
  if (mod(j * jbar, p) != 1)
    throw Error(ErrorKind::InvalidArgument, "j * jbar is not 1 mod p");
  std::int64_t k = p % 3;
  if (corrected && (j * k) % 2 != 0)
    throw Error(ErrorKind::ParityViolation, "j * k = " + std::to_string(j * k) + " is odd");
  Mat2p uj = u.pow(j);
  Mat2p core = u.pow(jbar) * (t.inverse() * uj * t) * u.pow(jbar);
  return core * t.pow(corrected ? (k % 2 == 0 ? 1 : -1) : -1);
}

std::uint64_t subgroup_order(std::int64_t p, std::vector<Mat2p> const &gens)
{
  if (p > 100)
    throw Error(ErrorKind::EnumerationTooLarge, "closure enumeration needs p <= 100");
  for (auto const &g : gens) {
    if (g.p != p)
      throw Error(ErrorKind::DomainMismatch, "generator over a different field");
  }
  return closure_size(gens, p);
}

Permutation projective_perm(Mat2p const &m)
{
  std::int64_t p = m.p;
  auto point = [p](std::int64_t x, std::int64_t y) {
    if (x == 0)
      return p;
    return mod(y * inverse_mod(x, p), p);
  };
  std::vector<Point> images(static_cast<std::size_t>(p + 1));
  for (std::int64_t alpha = 0; alpha < p; ++alpha)
    images[static_cast<std::size_t>(alpha)] = point(m.a + alpha * m.c, m.b + alpha * m.d);
  images[static_cast<std::size_t>(p)] = point(m.c, m.d);
  return Permutation::from_images(Interval{0, p}, images);
}

OriginalHSearch search_original_h(std::int64_t p, std::int64_t j)
{
  require_large_prime(p);
  if (p > 31)
    throw Error(ErrorKind::EnumerationTooLarge, "pair search needs p <= 31");
  std::int64_t jbar = inverse_mod(mod(j, p), p);

  std::vector<Mat2p> group;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 0; b < p; ++b)
      for (std::int64_t c = 0; c < p; ++c)
        for (std::int64_t d = 0; d < p; ++d)
          if (mod(a * d - b * c, p) == 1)
            group.push_back(Mat2p{p, a, b, c, d});

  OriginalHSearch out;
  auto const stabilizer_order = static_cast<std::uint64_t>(p * (p - 1));
  for (auto const &x : group) {
    Mat2p x2 = x * x;
    for (auto const &y : group) {
      if (!(x2 == (x * y).pow(3)) || !check_cr_relators(p, x, y))
        continue;
      ++out.pairs_satisfying;
      Mat2p h = y.pow(jbar) * (x.inverse() * y.pow(j) * x) * y.pow(jbar) * x.inverse();
      if (closure_size({y, h}, p) == stabilizer_order)
        ++out.pairs_with_full_stabilizer;
    }
  }
  return out;
}

} // namespace shortpres
