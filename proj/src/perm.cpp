#include "shortpres/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "shortpres/error.hpp"

namespace shortpres {

namespace {

constexpr std::size_t kMaxDegree = 1u << 30;

std::size_t checked_degree(Interval domain)
{
  if (domain.hi < domain.lo)
    throw Error(ErrorKind::InvalidArgument, "empty permutation domain");
  std::size_t n = domain.size();
  if (n > kMaxDegree)
    throw Error(ErrorKind::DegreeTooLarge, "domain of size " + std::to_string(n));
  return n;
}

} // namespace

Permutation Permutation::identity(Interval domain)
{
  std::vector<std::uint32_t> images(checked_degree(domain));
  std::iota(images.begin(), images.end(), 0u);
  return Permutation(domain, std::move(images));
}

Permutation Permutation::from_images(Interval domain, std::vector<Point> const &images)
{
  std::size_t n = checked_degree(domain);
  if (images.size() != n)
    throw Error(ErrorKind::DomainMismatch, "image list has wrong length");

  std::vector<std::uint32_t> offsets(n);
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (!domain.contains(images[i]))
      throw Error(ErrorKind::PointOutOfDomain, std::to_string(images[i]));
    auto off = static_cast<std::size_t>(images[i] - domain.lo);
    if (hit[off])
      throw Error(ErrorKind::InvalidArgument, "images do not form a bijection");
    hit[off] = true;
    offsets[i] = static_cast<std::uint32_t>(off);
  }
  return Permutation(domain, std::move(offsets));
}

Permutation Permutation::from_cycles(Interval domain, std::span<const Cycle> cycles)
{
  Permutation result = identity(domain);
  std::vector<bool> used(result.degree(), false);

  for (auto const &cycle : cycles) {
    if (cycle.empty())
      throw Error(ErrorKind::InvalidArgument, "empty cycle");
    for (Point x : cycle) {
      if (!domain.contains(x))
        throw Error(ErrorKind::PointOutOfDomain, std::to_string(x));
      auto off = static_cast<std::size_t>(x - domain.lo);
      if (used[off])
        throw Error(ErrorKind::OverlappingCycles, "point " + std::to_string(x) + " repeated");
      used[off] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      auto from = static_cast<std::size_t>(cycle[i] - domain.lo);
      auto to = static_cast<std::size_t>(cycle[(i + 1) % cycle.size()] - domain.lo);
      result.images_[from] = static_cast<std::uint32_t>(to);
    }
  }
  return result;
}

Permutation Permutation::parse(Interval domain, std::string_view text)
{
  std::vector<Cycle> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  auto fail = [&](std::string const &msg) {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(i));
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      fail("expected '('");
    ++i;
    Cycle cycle;
    skip_ws();
    if (i < text.size() && text[i] == ')') {
      ++i;
      skip_ws();
      continue;
    }
    for (;;) {
      skip_ws();
      std::size_t start = i;
      if (i < text.size() && (text[i] == '-' || text[i] == '+'))
        ++i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i || (i - start == 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
        fail("expected integer");
      cycle.push_back(std::stoll(std::string(text.substr(start, i - start))));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      fail("expected ',' or ')'");
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }
  return from_cycles(domain, cycles);
}

void Permutation::require_same_domain(Permutation const &other) const
{
  if (domain_ != other.domain_)
    throw Error(ErrorKind::DomainMismatch,
                "[" + std::to_string(domain_.lo) + "," + std::to_string(domain_.hi) + "] vs [" +
                  std::to_string(other.domain_.lo) + "," + std::to_string(other.domain_.hi) + "]");
}

Permutation Permutation::operator*(Permutation const &rhs) const
{
  require_same_domain(rhs);
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[i] = rhs.images_[images_[i]];
  return Permutation(domain_, std::move(out));
}

Permutation Permutation::inverse() const
{
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[images_[i]] = static_cast<std::uint32_t>(i);
  return Permutation(domain_, std::move(out));
}

Permutation Permutation::pow(std::int64_t e) const
{
  // Works cycle by cycle, so the cost does not depend on |e|.
  std::size_t n = images_.size();
  std::vector<std::uint32_t> out(n);
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> cycle;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start])
      continue;
    cycle.clear();
    for (std::uint32_t x = static_cast<std::uint32_t>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(x);
    }
    auto len = static_cast<std::int64_t>(cycle.size());
    std::int64_t shift = ((e % len) + len) % len;
    for (std::int64_t i = 0; i < len; ++i)
      out[cycle[static_cast<std::size_t>(i)]] = cycle[static_cast<std::size_t>((i + shift) % len)];
  }
  return Permutation(domain_, std::move(out));
}

Permutation Permutation::conjugate(Permutation const &g) const
{
  require_same_domain(g);
  // (x^g)^(g^-1 s g) = (x^s)^g
  std::vector<std::uint32_t> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    out[g.images_[i]] = g.images_[images_[i]];
  return Permutation(domain_, std::move(out));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      return false;
  }
  return true;
}

int Permutation::sign() const
{
  std::size_t even_cycles = 0;
  for (std::size_t len : cycle_type()) {
    if (len % 2 == 0)
      ++even_cycles;
  }
  return even_cycles % 2 == 0 ? 1 : -1;
}

BigInt Permutation::order() const
{
  BigInt result = 1;
  for (std::size_t len : cycle_type())
    result = boost::multiprecision::lcm(result, BigInt(len));
  return result;
}

std::vector<Point> Permutation::support() const
{
  std::vector<Point> moved;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i)
      moved.push_back(domain_.lo + static_cast<Point>(i));
  }
  return moved;
}

std::vector<Cycle> Permutation::cycles() const
{
  std::vector<Cycle> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    Cycle cycle;
    for (std::uint32_t x = static_cast<std::uint32_t>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(domain_.lo + static_cast<Point>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const
{
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::size_t len = 0;
    for (std::uint32_t x = static_cast<std::uint32_t>(start); !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    if (len > 1)
      lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::string Permutation::to_string() const
{
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (auto const &c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation compose(Permutation const &first, Permutation const &second)
{
  return first * second;
}

Permutation conjugate(Permutation const &sigma, Permutation const &g)
{
  return sigma.conjugate(g);
}

std::set<Point> orbit(std::span<const Permutation> gens, Point x)
{
  std::set<Point> result{x};
  std::vector<Point> queue{x};
  while (!queue.empty()) {
    Point cur = queue.back();
    queue.pop_back();
    for (auto const &g : gens) {
      Point next = g.image(cur);
      if (result.insert(next).second)
        queue.push_back(next);
    }
  }
  return result;
}

} // namespace shortpres
