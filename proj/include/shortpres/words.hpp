#pragma once

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "shortpres/error.hpp"
#include "shortpres/perm.hpp"

namespace shortpres {

/**
 * An immutable group word over named symbols.
 *
 * Symbols name either generators or earlier Slp definitions. Conjugates
 * x^w and commutators [x,y] stay structural so that printed words mirror
 * the usual notation instead of expanded strings.
 */
class Word {
public:
  enum class Op { Identity, Symbol, Product, Power, Conjugate, Commutator };

  Word();
  static Word symbol(std::string name);
  static Word product(std::vector<Word> factors);
  static Word commutator(Word const &x, Word const &y);

  /// Product; nested products are flattened and identities dropped.
  Word operator*(Word const &rhs) const;
  Word pow(std::int64_t e) const;
  Word inverse() const { return pow(-1); }
  /// this^by = by^-1 * this * by
  Word conj(Word const &by) const;

  Op op() const;
  bool is_identity() const { return op() == Op::Identity; }
  std::string const &name() const;
  std::vector<Word> const &factors() const;
  std::int64_t exponent() const;
  Word const &base() const;
  Word const &by() const;
  Word const &left() const;
  Word const &right() const;

  /// Structural equality.
  bool operator==(Word const &other) const;

  struct Node;
  explicit Word(std::shared_ptr<const Node> node);

private:
  std::shared_ptr<const Node> node_;
};

inline Word sym(std::string name) { return Word::symbol(std::move(name)); }

/**
 * A straight-line program: generators, ordered definitions that may refer
 * to generators and earlier definitions, and relators asserted trivial.
 * An equation u = v is stored as the relator u v^-1.
 */
class Slp {
public:
  Slp() = default;
  explicit Slp(std::vector<std::string> generators);

  void define(std::string name, Word word);
  void add_relator(Word word);
  void add_equation(Word const &lhs, Word const &rhs) { add_relator(lhs * rhs.inverse()); }

  std::vector<std::string> const &generators() const { return generators_; }
  std::vector<std::pair<std::string, Word>> const &definitions() const { return definitions_; }
  std::vector<Word> const &relators() const { return relators_; }

  bool is_generator(std::string_view name) const;
  /// Index into definitions(), if `name` is defined.
  std::optional<std::size_t> definition_index(std::string_view name) const;
  Word const &definition(std::string_view name) const;

  /// Remove the relator at `index` (used to derive hat presentations).
  Slp without_relator(std::size_t index) const;

  bool operator==(Slp const &) const = default;

private:
  void check_resolvable(Word const &w) const;

  std::vector<std::string> generators_;
  std::vector<std::pair<std::string, Word>> definitions_;
  std::vector<Word> relators_;
};

// ---------------------------------------------------------------- metrics

/// Binary digits of |e| (0 for e = 0).
int exponent_bits(std::int64_t e);

/**
 * Bit-length with a fixed convention: each factor costs its base (1 per
 * symbol) plus the binary digits of |e| plus one sign bit when e < 0; a bare
 * factor carries the exponent 1 and so costs one bit. Conjugates cost base +
 * conjugator + 2, commutators 2 * (both arguments) + 4.
 */
std::int64_t bit_length(Word const &w);
/// Generator count plus the bit-lengths of all definitions and relators.
std::int64_t bit_length(Slp const &slp);

/// Length of the fully expanded word over generators and their inverses.
BigInt word_length(Word const &w, Slp const *context = nullptr);
/// Sum of expanded relator lengths with every definition inlined.
BigInt word_length(Slp const &slp);

/**
 * Reduce exponents of symbols with a known order to the residue of least
 * absolute value, merge adjacent powers of the same symbol and drop trivial
 * factors. Evaluation is unchanged under any environment respecting `orders`.
 */
Word simplify(Word const &w, std::map<std::string, std::int64_t> const &orders);

/// Substitute definitions until only generators remain.
Word inline_definitions(Word const &w, Slp const &slp);

/// Freely reduced letter sequence of a word over generators: (index, +-1).
using Letter = std::pair<std::size_t, int>;
std::vector<Letter> free_reduce(Word const &w, Slp const &slp, std::size_t max_letters = 1u << 22);

// ----------------------------------------------------------------- formats

std::string to_text(Word const &w);
/// Flat form: '*' products, '^' powers/conjugates, commutators expanded.
std::string to_flat(Word const &w);
Word parse_word(std::string_view text);

/// "generators: a, g" then "name := expr" and "relator: expr" lines.
std::string to_text(Slp const &slp);
Slp parse_slp(std::string_view text);

nlohmann::json to_json(Word const &w);
Word word_from_json(nlohmann::json const &j);
nlohmann::json to_json(Slp const &slp);
Slp slp_from_json(nlohmann::json const &j);

// -------------------------------------------------------------- evaluation

template<typename G>
concept GroupElement = requires(G const &x, std::int64_t e) {
  { x * x } -> std::convertible_to<G>;
  { x.inverse() } -> std::convertible_to<G>;
  { x.pow(e) } -> std::convertible_to<G>;
  { x.identity_like() } -> std::convertible_to<G>;
  { x == x } -> std::convertible_to<bool>;
};

/// Direct product element; both coordinates multiply independently.
template<GroupElement L, GroupElement R>
struct ProductPair {
  L first;
  R second;

  ProductPair operator*(ProductPair const &o) const { return {first * o.first, second * o.second}; }
  ProductPair inverse() const { return {first.inverse(), second.inverse()}; }
  ProductPair pow(std::int64_t e) const { return {first.pow(e), second.pow(e)}; }
  ProductPair identity_like() const { return {first.identity_like(), second.identity_like()}; }
  bool is_identity() const { return first.is_identity() && second.is_identity(); }
  bool operator==(ProductPair const &) const = default;
};

using PermPair = ProductPair<Permutation, Permutation>;

template<GroupElement G>
using ImageMap = std::map<std::string, G>;

namespace detail {

template<GroupElement G>
G conjugate_element(G const &x, G const &by)
{
  if constexpr (std::same_as<G, Permutation>)
    return x.conjugate(by);
  else
    return by.inverse() * x * by;
}

} // namespace detail

/**
 * Evaluates words of an Slp under an assignment of its generators. Every
 * definition is evaluated exactly once, in order, when the evaluator is
 * constructed.
 */
template<GroupElement G>
class Evaluator {
public:
  Evaluator(Slp const &slp, ImageMap<G> const &generator_images)
  : slp_(&slp)
  {
    for (auto const &gen : slp.generators()) {
      auto it = generator_images.find(gen);
      if (it == generator_images.end())
        throw Error(ErrorKind::UnboundSymbol, "no image for generator '" + gen + "'");
      env_.emplace(gen, it->second);
    }
    if (env_.empty())
      throw Error(ErrorKind::UnboundSymbol, "presentation has no generators");
    identity_ = env_.begin()->second.identity_like();
    for (auto const &[name, word] : slp.definitions())
      env_.insert_or_assign(name, evaluate(word));
  }

  G evaluate(Word const &w) const
  {
    switch (w.op()) {
    case Word::Op::Identity: return identity_;
    case Word::Op::Symbol: return lookup(w.name());
    case Word::Op::Product: {
      auto const &fs = w.factors();
      G acc = evaluate(fs.front());
      for (std::size_t i = 1; i < fs.size(); ++i)
        acc = acc * evaluate(fs[i]);
      return acc;
    }
    case Word::Op::Power: return evaluate(w.base()).pow(w.exponent());
    case Word::Op::Conjugate: return detail::conjugate_element(evaluate(w.base()), evaluate(w.by()));
    case Word::Op::Commutator: {
      G x = evaluate(w.left());
      G y = evaluate(w.right());
      return x.inverse() * y.inverse() * x * y;
    }
    }
    throw Error(ErrorKind::InternalInvariantViolation, "bad word node");
  }

  G const &lookup(std::string const &name) const
  {
    auto it = env_.find(name);
    if (it == env_.end())
      throw Error(ErrorKind::UnboundSymbol, "'" + name + "'");
    return it->second;
  }

  std::vector<G> relator_values() const
  {
    std::vector<G> out;
    for (auto const &r : slp_->relators())
      out.push_back(evaluate(r));
    return out;
  }

  G const &identity() const { return identity_; }

private:
  Slp const *slp_;
  std::map<std::string, G> env_;
  G identity_;
};

/// Evaluate a word that uses generators only.
template<GroupElement G>
G evaluate(Word const &w, ImageMap<G> const &images)
{
  std::vector<std::string> gens;
  for (auto const &[name, _] : images)
    gens.push_back(name);
  Slp slp(gens);
  return Evaluator<G>(slp, images).evaluate(w);
}

} // namespace shortpres
