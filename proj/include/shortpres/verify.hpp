#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortpres/builders.hpp"

namespace shortpres {

/// Order certification and pair-orbit checks refuse larger degrees.
inline constexpr std::int64_t kMaxCertifyDegree = 64;
/// Relator evaluation refuses larger degrees.
inline constexpr std::int64_t kMaxEvalDegree = kMaxImageDegree;

struct RelatorResult {
  std::size_t index = 0;
  bool identity = false;
  /// Empty when identity. For product images, the cycle type of the first coordinate.
  std::vector<std::size_t> cycle_type;
};

struct VerificationReport {
  std::string id;
  std::int64_t degree = 0;
  GroupKind kind = GroupKind::Alt;
  PresentationCase which = PresentationCase::Glued;
  std::vector<RelatorResult> relators;
  std::optional<BigInt> order;
  bool order_certified = false;
  double millis = 0;

  bool all_identity() const;
};

nlohmann::json to_json(VerificationReport const &r);

VerificationReport check_relators(Presentation const &pres);
/// Relators plus, for Alt/Sym presentations up to degree 64, the Schreier-Sims order.
VerificationReport verify_presentation(Presentation const &pres, bool certify);

/// Order of <gens> by deterministic Schreier-Sims.
BigInt group_order(std::vector<Permutation> const &gens);
/// Order of <gens>, checked against n!/2 or n! for the domain size n.
BigInt certify_order(std::vector<Permutation> const &gens, GroupKind expected);
BigInt factorial(std::int64_t n);

enum class Homogeneity { Not2Homog, TwoHomogOnly, TwoTransitive };
std::string to_string(Homogeneity h);
Homogeneity check_2homog(std::vector<Permutation> const &gens);

/// One "word means permutation" claim and whether evaluation confirms it.
struct Claim {
  std::string name;
  bool holds = false;
};

/**
 * Claims about the degree-dependent glued words: the named definitions, the
 * support conditions for gluing, and the transitivity conditions.
 */
std::vector<Claim> check_word_meanings(std::int64_t n, GroupKind kind, bool simplified = true);

/**
 * Claims about the word families z(i), d(i,j), c(i,j) and the transposition
 * chain on the base domain [1, p+2]. With exhaustive unset, (i,j) pairs are
 * sampled on a fixed stride.
 */
std::vector<Claim> check_cycle_words(ParamSet const &ps, bool exhaustive, bool simplified = true);

enum class Falsification { P3Relator, P3RelatorHOnly, SL2Generators, TranspositionWord };
std::string to_string(Falsification f);

struct FalsificationResult {
  Falsification which = Falsification::P3Relator;
  std::int64_t p = 0;
  /// True when the original construction is shown to be wrong.
  bool original_fails = false;
  /// Cycle type of the element whose power is the relator, or of the evaluated word.
  std::vector<std::size_t> element_cycle_type;
  /// Cycle type of the full relator value (relator cases).
  std::vector<std::size_t> relator_cycle_type;
  /// Human-readable witness, e.g. the offending permutation or matrix identity.
  std::string witness;
};

nlohmann::json to_json(FalsificationResult const &r);
FalsificationResult falsify_original(Falsification which, std::int64_t p);

} // namespace shortpres
