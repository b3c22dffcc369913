#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace shortpres {

enum class GroupKind { Alt, Sym };

std::string to_string(GroupKind kind);
GroupKind parse_group_kind(std::string const &text);

/// Which construction a parameter set feeds.
enum class ParamCase { BaseP2, P3, Glued };

/**
 * Number-theoretic parameters of one presentation.
 *
 * Only the fields relevant to the construction are populated: base cases use
 * r, s, alpha, kappa; the p+3 case uses j, jbar, k_sl; glued cases add k.
 */
struct ParamSet {
  GroupKind kind = GroupKind::Alt;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> s;
  std::optional<std::int64_t> alpha;
  std::optional<std::int64_t> kappa;
  std::optional<std::int64_t> j;
  std::optional<std::int64_t> jbar;
  std::optional<std::int64_t> k_sl;

  bool operator==(ParamSet const &) const = default;
};

nlohmann::json to_json(ParamSet const &ps);
ParamSet params_from_json(nlohmann::json const &j);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m);
/// Least non-negative residue.
std::int64_t mod(std::int64_t a, std::int64_t m);
/// Inverse of a modulo m (gcd must be 1).
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t m);

/// Prime factorization by trial division, as (prime, multiplicity) pairs.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t m);

/// Multiplicative order of a modulo prime p.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t p);

/**
 * Smallest prime p = 11 (mod 12) with (n+2)/2 <= p <= n-3 (Sym) or
 * p <= n-4 (Alt). Throws UnsupportedDegree when there is none.
 */
std::int64_t find_glue_prime(std::int64_t n, GroupKind kind);

/// Smallest positive residue generating F_p^* or, with squares_only, F_p^{*2}.
std::int64_t group_unit_generator(std::int64_t p, bool squares_only);

ParamSet derive_params(ParamCase which, std::int64_t n_or_p, GroupKind kind);
ParamSet derive_base_params(std::int64_t p, GroupKind kind);
ParamSet derive_p3_params(std::int64_t p);
ParamSet derive_glued_params(std::int64_t n, GroupKind kind);

/// True iff every congruence and generator-order condition holds.
bool validate_params(ParamSet const &ps);

/// Representative of e mod m with the fewest bits (sign bit included).
std::int64_t cheapest_residue(std::int64_t e, std::int64_t m);

} // namespace shortpres
