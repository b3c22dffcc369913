#include "doctest.h"

#include "shortpres/builders.hpp"
#include "shortpres/verify.hpp"

#include "../golden17.hpp"

using namespace shortpres;

using namespace golden17;

namespace {

void check_matches(Slp const &ours, Slp const &listing, std::vector<std::size_t> const &skip_relators = {})
{
  REQUIRE(ours.generators() == listing.generators());
  REQUIRE(ours.definitions().size() == listing.definitions().size());
  for (std::size_t i = 0; i < listing.definitions().size(); ++i) {
    auto const &[name, word] = listing.definitions()[i];
    CAPTURE(name);
    CHECK(ours.definitions()[i].first == name);
    CHECK(free_reduce(ours.definition(name), ours) == free_reduce(word, listing));
  }
  REQUIRE(ours.relators().size() == listing.relators().size());
  for (std::size_t i = 0; i < listing.relators().size(); ++i) {
    CAPTURE(i);
    if (std::find(skip_relators.begin(), skip_relators.end(), i) != skip_relators.end())
      continue;
    CHECK(free_reduce(ours.relators()[i], ours) == free_reduce(listing.relators()[i], listing));
  }
}

} // namespace

TEST_CASE("n = 17 alternating example under the worked-example parameters")
{
  auto ps = worked_params(GroupKind::Alt);
  CHECK(validate_params(ps));
  auto pres = glued(17, GroupKind::Alt, {.params = ps});
  check_matches(pres.slp, parse_slp(kAlt17));
  auto const &img = std::get<ImageMap<Permutation>>(*pres.images);
  CHECK(img.at("a").to_string() == "(1,2,3,4,5,6,7,8,9,10,11)");
  CHECK(img.at("g") == Permutation::parse(pres.domain, "(1,3,9,5,4)(2,6,7,10,8)(13,12,11)"));
  CHECK(img.at("y").to_string() == "(-3,13)(-2,12)(-1,11)(0,10)");
  CHECK(check_relators(pres).all_identity());
}

TEST_CASE("n = 17 symmetric example under the worked-example parameters")
{
  auto ps = worked_params(GroupKind::Sym);
  CHECK(validate_params(ps));
  auto pres = glued(17, GroupKind::Sym, {.params = ps});
  check_matches(pres.slp, parse_slp(kSym17));
  auto const &img = std::get<ImageMap<Permutation>>(*pres.images);
  CHECK(img.at("g") == Permutation::parse(pres.domain, "(1,7,5,2,3,10,4,6,9,8)(11,12,13)"));
  CHECK(check_relators(pres).all_identity());
}

TEST_CASE("n = 17 under the canonical parameters")
{
  // Canonical r = 3, s = 5 for the alternating group: only the affine relator changes.
  auto alt = glued(17, GroupKind::Alt);
  CHECK(to_text(alt.slp.relators()[1]) == "(a^5)^b a^-4");
  check_matches(alt.slp, parse_slp(kAlt17), {1});
  CHECK(check_relators(alt).all_identity());
  auto sym = glued(17, GroupKind::Sym);
  check_matches(sym.slp, parse_slp(kSym17));
  CHECK(check_relators(sym).all_identity());
}

TEST_CASE("n = 17 unsimplified literal words agree by evaluation")
{
  for (auto kind : {GroupKind::Alt, GroupKind::Sym}) {
    auto plain = glued(17, kind, {.simplified = false, .images = true, .params = worked_params(kind)});
    auto reduced = glued(17, kind, {.simplified = true, .images = true, .params = worked_params(kind)});
    auto const &img = std::get<ImageMap<Permutation>>(*plain.images);
    Evaluator<Permutation> ep(plain.slp, img), er(reduced.slp, img);
    for (auto const &[name, _] : reduced.slp.definitions()) {
      CAPTURE(name);
      CHECK(ep.lookup(name) == er.lookup(name));
    }
    CHECK(check_relators(plain).all_identity());
  }
}
