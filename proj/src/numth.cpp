#include "shortpres/numth.hpp"

#include <array>
#include <cmath>
#include <limits>

#include "shortpres/error.hpp"

namespace shortpres {

std::string to_string(GroupKind kind)
{
  return kind == GroupKind::Alt ? "alt" : "sym";
}

GroupKind parse_group_kind(std::string const &text)
{
  if (text == "alt" || text == "Alt")
    return GroupKind::Alt;
  if (text == "sym" || text == "Sym")
    return GroupKind::Sym;
  throw Error(ErrorKind::InvalidArgument, "unknown group kind '" + text + "'");
}

nlohmann::json to_json(ParamSet const &ps)
{
  nlohmann::json j;
  j["kind"] = to_string(ps.kind);
  j["n"] = ps.n;
  j["p"] = ps.p;
  auto put = [&](char const *key, std::optional<std::int64_t> const &v) {
    if (v)
      j[key] = *v;
  };
  put("k", ps.k);
  put("r", ps.r);
  put("s", ps.s);
  put("alpha", ps.alpha);
  put("kappa", ps.kappa);
  put("j", ps.j);
  put("jbar", ps.jbar);
  put("k_sl", ps.k_sl);
  return j;
}

ParamSet params_from_json(nlohmann::json const &j)
{
  ParamSet ps;
  ps.kind = parse_group_kind(j.at("kind").get<std::string>());
  ps.n = j.at("n").get<std::int64_t>();
  ps.p = j.at("p").get<std::int64_t>();
  auto get = [&](char const *key, std::optional<std::int64_t> &v) {
    if (j.contains(key))
      v = j.at(key).get<std::int64_t>();
  };
  get("k", ps.k);
  get("r", ps.r);
  get("s", ps.s);
  get("alpha", ps.alpha);
  get("kappa", ps.kappa);
  get("j", ps.j);
  get("jbar", ps.jbar);
  get("k_sl", ps.k_sl);
  return ps;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m)
{
  std::uint64_t result = 1 % m;
  base %= m;
  while (e) {
    if (e & 1)
      result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1)
    throw Error(ErrorKind::InvalidArgument,
                std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  return mod(old_s, m);
}

bool is_prime(std::uint64_t m)
{
  if (m < 2)
    return false;
  static constexpr std::array<std::uint64_t, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : witnesses) {
    if (m % q == 0)
      return m == q;
  }
  std::uint64_t d = m - 1;
  unsigned twos = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  for (std::uint64_t a : witnesses) {
    std::uint64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1)
      continue;
    bool composite = true;
    for (unsigned i = 1; i < twos; ++i) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m)
{
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
    if (m % q)
      continue;
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (m > 1)
    out.emplace_back(m, 1);
  return out;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p)
{
  a %= p;
  if (a == 0)
    throw Error(ErrorKind::InvalidArgument, "zero has no multiplicative order");
  std::uint64_t order = p - 1;
  for (auto [q, e] : factorize(p - 1)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow_mod(a, order / q, p) != 1)
        break;
      order /= q;
    }
  }
  return order;
}

std::int64_t find_glue_prime(std::int64_t n, GroupKind kind)
{
  std::int64_t lo = (n + 3) / 2; // ceil((n+2)/2)
  std::int64_t hi = kind == GroupKind::Sym ? n - 3 : n - 4;
  std::int64_t p = lo + mod(11 - lo, 12);
  for (; p <= hi; p += 12) {
    if (is_prime(static_cast<std::uint64_t>(p)))
      return p;
  }
  throw Error(ErrorKind::UnsupportedDegree,
              "no prime p = 11 mod 12 with (n+2)/2 <= p <= " +
                std::string(kind == GroupKind::Sym ? "n-3" : "n-4") + " for n = " + std::to_string(n));
}

std::int64_t group_unit_generator(std::int64_t p, bool squares_only)
{
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not an odd prime");
  auto up = static_cast<std::uint64_t>(p);
  std::uint64_t target = squares_only ? (up - 1) / 2 : up - 1;
  for (std::uint64_t r = 1; r < up; ++r) {
    if (multiplicative_order(r, up) == target)
      return static_cast<std::int64_t>(r);
  }
  throw Error(ErrorKind::InternalInvariantViolation, "no generator found");
}

namespace {

bool in_base_class(std::int64_t p, GroupKind kind)
{
  if (p <= 3 || !is_prime(static_cast<std::uint64_t>(p)))
    return false;
  return kind == GroupKind::Alt ? p % 12 == 11 : p % 3 == 2;
}

void fill_agl_fields(ParamSet &ps)
{
  std::int64_t p = ps.p;
  bool alt = ps.kind == GroupKind::Alt;
  std::int64_t r = group_unit_generator(p, alt);
  ps.r = r;
  // s(r-1) = -1 (mod p)
  ps.s = mod(-inverse_mod(r - 1, p), p);
  ps.kappa = alt ? (p - 1) / 2 : p - 1;
  auto ord = static_cast<std::int64_t>(multiplicative_order(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(p)));
  // 3e = 1 (mod ord(r)); exists because gcd(3, p-1) = 1
  std::int64_t e = inverse_mod(3, ord);
  ps.alpha = static_cast<std::int64_t>(pow_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(p)));
}

void check_or_throw(ParamSet const &ps)
{
  if (!validate_params(ps))
    throw Error(ErrorKind::InternalInvariantViolation, "derived parameters violate an invariant: " + to_json(ps).dump());
}

} // namespace

ParamSet derive_base_params(std::int64_t p, GroupKind kind)
{
  if (!in_base_class(p, kind))
    throw Error(ErrorKind::BadPrimeClass,
                std::to_string(p) + (kind == GroupKind::Alt ? " is not a prime = 11 mod 12"
                                                            : " is not a prime > 3 with p = 2 mod 3"));
  ParamSet ps;
  ps.kind = kind;
  ps.p = p;
  ps.n = p + 2;
  fill_agl_fields(ps);
  check_or_throw(ps);
  return ps;
}

ParamSet derive_p3_params(std::int64_t p)
{
  if (p <= 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::BadPrimeClass, std::to_string(p) + " is not a prime > 3");
  ParamSet ps;
  ps.kind = GroupKind::Alt;
  ps.p = p;
  ps.n = p + 3;
  std::int64_t k_sl = p % 3;
  std::int64_t j = group_unit_generator(p, false);
  if ((j * k_sl) % 2 != 0)
    j -= p;
  ps.k_sl = k_sl;
  ps.j = j;
  ps.jbar = inverse_mod(j, p);
  check_or_throw(ps);
  return ps;
}

ParamSet derive_glued_params(std::int64_t n, GroupKind kind)
{
  std::int64_t p = find_glue_prime(n, kind);
  ParamSet ps;
  ps.kind = kind;
  ps.p = p;
  ps.n = n;
  ps.k = 2 * p + 4 - n;
  fill_agl_fields(ps);
  check_or_throw(ps);
  return ps;
}

ParamSet derive_params(ParamCase which, std::int64_t n_or_p, GroupKind kind)
{
  switch (which) {
  case ParamCase::BaseP2: return derive_base_params(n_or_p, kind);
  case ParamCase::P3:
    if (kind != GroupKind::Alt)
      throw Error(ErrorKind::UnsupportedDegree, "the p+3 construction presents alternating groups only");
    return derive_p3_params(n_or_p);
  case ParamCase::Glued: return derive_glued_params(n_or_p, kind);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown parameter case");
}

bool validate_params(ParamSet const &ps)
{
  std::int64_t p = ps.p;
  if (p < 5 || !is_prime(static_cast<std::uint64_t>(p)))
    return false;
  auto up = static_cast<std::uint64_t>(p);
  bool alt = ps.kind == GroupKind::Alt;

  if (ps.j || ps.jbar || ps.k_sl) {
    // p+3 construction
    if (!(ps.j && ps.jbar && ps.k_sl) || !alt)
      return false;
    if (*ps.k_sl != p % 3 || (*ps.j * *ps.k_sl) % 2 != 0)
      return false;
    if (*ps.jbar < 1 || *ps.jbar >= p || mod(*ps.j, p) == 0)
      return false;
    if (mod(mod(*ps.j, p) * *ps.jbar, p) != 1)
      return false;
    if (multiplicative_order(static_cast<std::uint64_t>(mod(*ps.j, p)), up) != up - 1)
      return false;
    return ps.n == 0 || ps.n == p + 3;
  }

  if (!(ps.r && ps.s && ps.alpha && ps.kappa))
    return false;
  if (!in_base_class(p, ps.kind))
    return false;
  std::int64_t r = mod(*ps.r, p);
  if (r == 0 || mod(*ps.s * (r - 1), p) != p - 1)
    return false;
  if (*ps.s < 1 || *ps.s >= p)
    return false;
  std::int64_t alpha = mod(*ps.alpha, p);
  if (alpha == 0 || pow_mod(static_cast<std::uint64_t>(alpha), 3, up) != static_cast<std::uint64_t>(r))
    return false;
  std::uint64_t want = alt ? (up - 1) / 2 : up - 1;
  if (multiplicative_order(static_cast<std::uint64_t>(r), up) != want)
    return false;
  if (*ps.kappa != static_cast<std::int64_t>(want))
    return false;
  if (alt && pow_mod(static_cast<std::uint64_t>(alpha), (up - 1) / 2, up) != 1)
    return false;

  if (ps.k) {
    std::int64_t k = *ps.k;
    if (p % 12 != 11)
      return false;
    if (k < 6 || k > (alt ? p : p + 1))
      return false;
    if (ps.n != 2 * p + 4 - k || mod(ps.n - k, 2) != 0)
      return false;
    return true;
  }
  return ps.n == 0 || ps.n == p + 2;
}

std::int64_t cheapest_residue(std::int64_t e, std::int64_t m)
{
  std::int64_t pos = mod(e, m);
  if (pos == 0)
    return 0;
  std::int64_t neg = pos - m;
  auto bits = [](std::int64_t x) {
    std::uint64_t ax = static_cast<std::uint64_t>(x < 0 ? -x : x);
    int b = 0;
    while (ax) {
      ++b;
      ax >>= 1;
    }
    return b + (x < 0 ? 1 : 0);
  };
  return bits(neg) < bits(pos) ? neg : pos;
}

} // namespace shortpres
