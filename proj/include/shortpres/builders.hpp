#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "shortpres/numth.hpp"
#include "shortpres/perm.hpp"
#include "shortpres/sl2.hpp"
#include "shortpres/words.hpp"

namespace shortpres {

/// Images are only materialized up to this degree.
inline constexpr std::int64_t kMaxImageDegree = 10'000'000;

enum class PresentationCase { Moore, Carmichael, Agl, AglHat, BaseP2, BaseP2Hat, P3, P3Hat, Glued };
std::string to_string(PresentationCase c);

using PermMat = ProductPair<Permutation, Mat2p>;
using GeneratorImages = std::variant<ImageMap<Permutation>, ImageMap<PermPair>, ImageMap<PermMat>>;

struct Presentation {
  std::string id;
  PresentationCase which = PresentationCase::Glued;
  GroupKind kind = GroupKind::Alt;
  std::int64_t degree = 0;
  ParamSet params;
  Slp slp;
  /// Domain of the permutation action (first coordinate for product images).
  Interval domain{1, 1};
  std::optional<GeneratorImages> images;
};

struct BuildOptions {
  /// Emit exponent-reduced words instead of the literal unreduced forms.
  bool simplified = true;
  bool images = true;
  /// Replaces the canonical parameters; must pass validate_params.
  std::optional<ParamSet> params;
};

Presentation moore(std::int64_t n);
/// Carmichael's presentation of A_degree on generators (i, degree-1, degree).
Presentation carmichael(std::int64_t degree);

enum class AglVariant { AltAGL, AltAGL2, SymAGL };
std::string to_string(AglVariant v);
/// Without the extra relator the images are the product pairs of the hat group.
Presentation agl_example(std::int64_t p, AglVariant variant, bool with_extra_relator);

Presentation base_p2(std::int64_t p, GroupKind kind, BuildOptions const &opts = {});
Presentation base_p2_hat(std::int64_t p, GroupKind kind, BuildOptions const &opts = {});

Presentation alt_p3(std::int64_t p, BuildOptions const &opts = {});
Presentation alt_p3_hat(std::int64_t p, BuildOptions const &opts = {});

Presentation glued(std::int64_t n, GroupKind kind, BuildOptions const &opts = {});

/// Dispatch by degree; throws UnsupportedDegree outside the covered ranges.
Presentation presentation_for(std::int64_t n, GroupKind kind, BuildOptions const &opts = {});

// ------------------------------------------------------------------ images

/// (lo, lo+1, ..., hi) on `domain`.
Permutation interval_cycle(Interval domain, Point lo, Point hi);
/// x -> alpha x on F_p^* with representatives 1..p-1; everything else fixed.
Permutation scalar_perm(Interval domain, std::int64_t p, std::int64_t alpha);
/// Image of g: scalar alpha times (p, p+1, p+2)^kappa.
Permutation base_g_image(Interval domain, ParamSet const &ps);
/// Glued domain [-p+k-1, p+2].
Interval glued_domain(ParamSet const &ps);
Permutation y_image(ParamSet const &ps);
/// Projective action relabelled: alpha in F_p^* fixed, 0 -> p, infinity -> p+1, on [1, p+3].
Permutation p3_point_image(Mat2p const &m);

// -------------------------------------------------------------- glue words

/**
 * Word families shared by the glued presentations. Words refer to the
 * symbols a, y and the definitions z, x, b (and t, cdot for symmetric
 * groups) of the enclosing Slp.
 */
class GlueWords {
public:
  GlueWords(ParamSet ps, bool simplified);

  ParamSet const &params() const { return ps_; }

  Word a_pow(std::int64_t e) const;
  Word ax_pow(std::int64_t e) const;
  /// z^(a^i) = (i, p+1, p+2)
  Word z(std::int64_t i) const;
  Word z_inv(std::int64_t i) const;
  /// (i, j)(p+1, p+2)
  Word d(std::int64_t i, std::int64_t j) const;
  /// (i, ..., j)(p+1, p+2)^(j-i); throws InvalidArgument outside the piecewise domain.
  Word c(std::int64_t i, std::int64_t j) const;
  Word c_inv(std::int64_t i, std::int64_t j) const;

  Word b2() const;
  Word cbullet() const;
  /// (cdot d(1,-1))^((p-1)/2)
  Word v() const;
  /// (d(1,-1) cdot)^((p-1)/2)
  Word v_alt() const;
  /// The earlier chain (cdot d(1,-1))^((p-3)/2) cdot.
  Word v_original() const;

  /// Inverse with factors reversed and merged (simplified mode) or a plain ^-1.
  Word invert(Word const &w) const;
  /// Merge adjacent powers of a and reduce them mod p (simplified mode only).
  Word tidy(Word const &w) const;

private:
  ParamSet ps_;
  bool simplified_;
};

/// Generators a, g with b, z, x (and cdot, v, t when kind is Sym) on [1, p+2].
Presentation cycle_toolkit(ParamSet const &ps, bool simplified);

} // namespace shortpres
