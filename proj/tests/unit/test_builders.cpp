#include "doctest.h"

#include "shortpres/builders.hpp"
#include "shortpres/error.hpp"
#include "shortpres/verify.hpp"

using namespace shortpres;

namespace {

std::vector<std::string> relator_texts(Presentation const &pres)
{
  std::vector<std::string> out;
  for (auto const &r : pres.slp.relators())
    out.push_back(to_text(r));
  return out;
}

bool relators_hold(Presentation const &pres) { return check_relators(pres).all_identity(); }

} // namespace

TEST_CASE("Moore presentations")
{
  auto m3 = moore(3);
  CHECK(m3.slp.generators().size() == 2);
  CHECK(m3.slp.relators().size() == 3);
  auto const &img = std::get<ImageMap<Permutation>>(*m3.images);
  CHECK(img.at(m3.slp.generators()[0]).to_string() == "(1,2)");
  CHECK(img.at(m3.slp.generators()[1]).to_string() == "(2,3)");
  CHECK(moore(2).slp.relators().size() == 1);
  CHECK(moore(6).slp.relators().size() == 15);
  for (std::int64_t n = 2; n <= 12; ++n)
    CHECK(relators_hold(moore(n)));
}

TEST_CASE("Carmichael presentations")
{
  auto c5 = carmichael(5);
  CHECK(c5.slp.generators().size() == 3);
  CHECK(c5.slp.relators().size() == 6);
  auto const &img = std::get<ImageMap<Permutation>>(*c5.images);
  std::vector<std::string> got;
  for (auto const &g : c5.slp.generators())
    got.push_back(img.at(g).to_string());
  CHECK(got == std::vector<std::string>{"(1,4,5)", "(2,4,5)", "(3,4,5)"});
  for (std::int64_t d = 5; d <= 12; ++d)
    CHECK(relators_hold(carmichael(d)));
}

TEST_CASE("AGL examples")
{
  auto alt5 = agl_example(5, AglVariant::AltAGL, true);
  CHECK(alt5.slp.generators() == std::vector<std::string>{"a", "b", "z"});
  CHECK(alt5.slp.relators().size() == 6);
  CHECK(relator_texts(alt5).front() == "a^5 b^-4");
  CHECK(relators_hold(alt5));
  CHECK(agl_example(5, AglVariant::AltAGL, false).slp.relators().size() == 5);

  auto alt11 = agl_example(11, AglVariant::AltAGL2, true);
  CHECK(relator_texts(alt11).back() == "(b z^a z^(a^-1))^6");
  for (std::int64_t p : {7, 11, 19, 23})
    CHECK(relators_hold(agl_example(p, AglVariant::AltAGL2, true)));
  for (std::int64_t p : {5, 7, 11, 13})
    for (auto v : {AglVariant::AltAGL, AglVariant::SymAGL})
      for (bool extra : {false, true})
        CHECK(relators_hold(agl_example(p, v, extra)));
  CHECK_THROWS_AS(agl_example(13, AglVariant::AltAGL2, true), Error);
}

TEST_CASE("base p+2 presentations")
{
  auto alt = base_p2(11, GroupKind::Alt);
  CHECK(alt.slp.generators().size() == 2);
  CHECK(alt.slp.relators().size() == 4);
  CHECK(alt.degree == 13);
  CHECK(to_text(alt.slp.definition("h")) == "(b z^a z^(a^-1))^6");
  CHECK(base_p2_hat(11, GroupKind::Alt).slp.relators().size() == 3);

  auto sym = base_p2(11, GroupKind::Sym);
  CHECK(to_text(sym.slp.definition("h")) == "(b^2 z^a z^(a^2))^6");

  for (std::int64_t p : {11, 23, 47, 59})
    CHECK(relators_hold(base_p2(p, GroupKind::Alt)));
  for (std::int64_t p : {5, 11, 17, 23, 29, 41})
    CHECK(relators_hold(base_p2(p, GroupKind::Sym)));
  CHECK_THROWS_AS(base_p2(13, GroupKind::Alt), Error);
  CHECK_THROWS_AS(base_p2(3, GroupKind::Sym), Error);
}

TEST_CASE("hat images of h")
{
  for (std::int64_t p : {11, 23, 47}) {
    for (auto kind : {GroupKind::Alt, GroupKind::Sym}) {
      auto hat = base_p2_hat(p, kind);
      CHECK(check_relators(hat).all_identity());
      auto const &img = std::get<ImageMap<PermPair>>(*hat.images);
      Evaluator<PermPair> ev(hat.slp, img);
      auto h = ev.lookup("h");
      Permutation bbar = ev.lookup("b").second;
      CHECK(h.first.is_identity());
      CHECK(h.second == (kind == GroupKind::Alt ? bbar : bbar.pow(2)));
      CHECK(h.second.order() % 3 != 0);
    }
  }
}

TEST_CASE("p+3 presentation")
{
  auto pres = alt_p3(11);
  CHECK(pres.degree == 14);
  CHECK(pres.slp.generators() == std::vector<std::string>{"x", "y", "z"});
  CHECK(pres.slp.relators().size() == 7);
  CHECK(to_text(pres.slp.definition("h")) == "y^6 (y^2)^x y^6 x");
  auto rels = relator_texts(pres);
  CHECK(std::find(rels.begin(), rels.end(), "z^3") != rels.end());
  CHECK(std::find(rels.begin(), rels.end(), "(z z^x)^2") != rels.end());
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 47})
    CHECK(relators_hold(alt_p3(p)));
  auto hat = alt_p3_hat(11);
  CHECK(hat.slp.relators().size() == 6);
  CHECK(relators_hold(hat));
}

TEST_CASE("dispatch")
{
  CHECK(presentation_for(13, GroupKind::Sym).which == PresentationCase::BaseP2);
  CHECK(presentation_for(14, GroupKind::Alt).which == PresentationCase::P3);
  auto s14 = presentation_for(14, GroupKind::Sym);
  CHECK(s14.which == PresentationCase::Glued);
  CHECK(*s14.params.k == s14.params.p + 1);
  for (std::int64_t n : {5, 12, 21, 22, 23, 24, 45, 48}) {
    try {
      presentation_for(n, GroupKind::Alt);
      FAIL("expected UnsupportedDegree");
    } catch (Error const &e) {
      CHECK(e.kind() == ErrorKind::UnsupportedDegree);
    }
  }
}

TEST_CASE("shape at every covered degree up to 300")
{
  for (std::int64_t n = 13; n <= 300; ++n) {
    for (auto kind : {GroupKind::Alt, GroupKind::Sym}) {
      Presentation pres;
      try {
        pres = presentation_for(n, kind, {.simplified = true, .images = false});
      } catch (Error const &) {
        continue;
      }
      bool base = pres.which == PresentationCase::BaseP2;
      CHECK(pres.slp.generators().size() == (base ? 2u : 3u));
      CHECK(pres.slp.relators().size() == (base ? 4u : 7u));
      CHECK(pres.degree == n);
    }
  }
}

TEST_CASE("glued domain and y")
{
  auto alt = glued(17, GroupKind::Alt);
  CHECK(alt.domain == Interval{-3, 13});
  auto const &img = std::get<ImageMap<Permutation>>(*alt.images);
  CHECK(img.at("y").to_string() == "(-3,13)(-2,12)(-1,11)(0,10)");
  auto even = glued(18, GroupKind::Alt);
  CHECK(y_image(even.params).cycle_type() == std::vector<std::size_t>{2, 2, 2, 4});
}

TEST_CASE("piecewise c enforces its domain")
{
  GlueWords w(derive_base_params(11, GroupKind::Sym), true);
  CHECK_NOTHROW(w.c(1, 10));
  CHECK_NOTHROW(w.c(9, 11));
  CHECK_NOTHROW(w.c(10, 12));
  CHECK_THROWS_AS(w.c(10, 11), Error);
  CHECK_THROWS_AS(w.c(10, 13), Error);
  CHECK_THROWS_AS(w.c(0, 3), Error);
}

TEST_CASE("unsimplified words evaluate identically")
{
  for (std::int64_t n : {15, 16, 17, 18, 27, 30, 51, 52, 60}) {
    for (auto kind : {GroupKind::Alt, GroupKind::Sym}) {
      auto plain = glued(n, kind, {.simplified = false});
      CHECK(relators_hold(plain));
      auto reduced = glued(n, kind, {.simplified = true});
      CHECK(bit_length(reduced.slp) <= bit_length(plain.slp));
    }
  }
}

TEST_CASE("parameter overrides are validated")
{
  ParamSet bad = derive_glued_params(17, GroupKind::Alt);
  bad.s = 7;
  BuildOptions opts;
  opts.params = bad;
  CHECK_THROWS_AS(glued(17, GroupKind::Alt, opts), Error);
}

TEST_CASE("emitted text re-parses and re-verifies")
{
  for (std::int64_t n = 13; n <= 160; ++n) {
    for (auto kind : {GroupKind::Alt, GroupKind::Sym}) {
      Presentation pres;
      try {
        pres = presentation_for(n, kind);
      } catch (Error const &) {
        continue;
      }
      Presentation copy = pres;
      copy.slp = parse_slp(to_text(pres.slp));
      CHECK(copy.slp == pres.slp);
      CHECK(check_relators(copy).all_identity());
      CHECK(to_text(presentation_for(n, kind).slp) == to_text(pres.slp));
    }
  }
}
