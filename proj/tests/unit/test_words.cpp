#include "doctest.h"

#include <random>

#include "shortpres/builders.hpp"
#include "shortpres/error.hpp"
#include "shortpres/words.hpp"

using namespace shortpres;

namespace {

Permutation random_perm(Interval dom, std::mt19937_64 &rng)
{
  std::vector<Point> pts;
  for (Point x = dom.lo; x <= dom.hi; ++x)
    pts.push_back(x);
  std::shuffle(pts.begin(), pts.end(), rng);
  return Permutation::from_images(dom, pts);
}

Word random_word(std::mt19937_64 &rng, int depth)
{
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 0);
  std::uniform_int_distribution<int> letter(0, 2);
  std::uniform_int_distribution<std::int64_t> expo(-30, 30);
  static char const *names[] = {"a", "b", "c"};
  switch (pick(rng)) {
  case 0: return sym(names[letter(rng)]);
  case 1: return random_word(rng, depth - 1) * random_word(rng, depth - 1);
  case 2: return random_word(rng, depth - 1).pow(expo(rng));
  case 3: return random_word(rng, depth - 1).conj(random_word(rng, depth - 1));
  default: return Word::commutator(random_word(rng, depth - 1), random_word(rng, depth - 1));
  }
}

} // namespace

TEST_CASE("bit-length convention")
{
  CHECK(bit_length(sym("a")) == 2);
  CHECK(bit_length(sym("a").pow(13)) == 5);
  CHECK(bit_length(sym("a").pow(-13)) == 6);
  CHECK(bit_length(Word()) == 0);
  CHECK(exponent_bits(0) == 0);
  CHECK(exponent_bits(1) == 1);
  CHECK(exponent_bits(-8) == 4);
}

TEST_CASE("expanded word length")
{
  Word a = sym("a"), b = sym("b");
  CHECK(word_length(a.pow(13)) == 13);
  CHECK(word_length(Word::commutator(sym("x"), sym("y"))) == 4);
  CHECK(word_length((a * b.pow(-2)).pow(3)) == 9);
  CHECK(word_length(a.conj(b.pow(5))) == 11);

  Slp slp({"a"});
  slp.define("q", a.pow(1000));
  slp.define("r", sym("q").pow(1000));
  slp.add_relator(sym("r").pow(1000));
  CHECK(word_length(slp) == BigInt(1'000'000'000));
}

TEST_CASE("evaluation under the p = 11 images")
{
  auto pres = base_p2(11, GroupKind::Alt);
  auto const &images = std::get<ImageMap<Permutation>>(*pres.images);
  Evaluator<Permutation> ev(pres.slp, images);
  Interval d{1, 13};
  CHECK(ev.lookup("z") == Permutation::from_cycles(d, {{11, 12, 13}}));

  // Worked-example triple r = 5, alpha = 3 gives g = (1,3,9,5,4)(2,6,7,10,8)(13,12,11)
  ParamSet ps = derive_base_params(11, GroupKind::Alt);
  ps.r = 5;
  ps.s = 8;
  ps.alpha = 3;
  BuildOptions opts;
  opts.params = ps;
  auto worked = base_p2(11, GroupKind::Alt, opts);
  auto const &pim = std::get<ImageMap<Permutation>>(*worked.images);
  CHECK(pim.at("g") == Permutation::parse(d, "(1,3,9,5,4)(2,6,7,10,8)(13,12,11)"));
  Evaluator<Permutation> pev(worked.slp, pim);
  CHECK(pev.lookup("b") == Permutation::parse(d, "(1,5,3,4,9)(2,10,6,8,7)"));

  ImageMap<Permutation> trivial{{"a", Permutation::identity(d)}, {"g", Permutation::identity(d)}};
  Evaluator<Permutation> tev(worked.slp, trivial);
  for (auto const &r : tev.relator_values())
    CHECK(r.is_identity());
}

TEST_CASE("evaluator reports missing generators")
{
  Slp slp({"a", "g"});
  ImageMap<Permutation> partial{{"a", Permutation::identity(Interval{1, 3})}};
  try {
    Evaluator<Permutation> ev(slp, partial);
    FAIL("expected UnboundSymbol");
  } catch (Error const &e) {
    CHECK(e.kind() == ErrorKind::UnboundSymbol);
  }
  CHECK_THROWS_AS(slp.define("x", sym("nope")), Error);
}

TEST_CASE("exponent reduction")
{
  std::map<std::string, std::int64_t> orders{{"a", 11}, {"g", 15}};
  CHECK(simplify(sym("a").pow(14), orders) == sym("a").pow(3));
  CHECK(simplify(sym("a").pow(6), orders) == sym("a").pow(-5));
  CHECK(simplify(sym("g").pow(10), orders) == sym("g").pow(-5));
  CHECK(simplify(sym("a").pow(11), orders).is_identity());
  CHECK(simplify(sym("a").pow(4) * sym("a").pow(3), orders) == sym("a").pow(7 - 11));
}

TEST_CASE("simplify preserves evaluation")
{
  std::mt19937_64 rng(3);
  Interval d{1, 11};
  auto a = Permutation::from_cycles(d, {{1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}});
  for (int i = 0; i < 200; ++i) {
    ImageMap<Permutation> images{{"a", a}, {"b", random_perm(d, rng)}, {"c", random_perm(d, rng)}};
    Word w = random_word(rng, 4);
    CHECK(evaluate(simplify(w, {{"a", 11}}), images) == evaluate(w, images));
  }
}

TEST_CASE("Horner identity")
{
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> len(0, 64);
  Word v = sym("v"), f = sym("f");
  for (int i = 0; i < 100; ++i) {
    int n = len(rng);
    Interval d{1, 1 + static_cast<Point>(rng() % 12)};
    ImageMap<Permutation> images{{"v", random_perm(d, rng)}, {"f", random_perm(d, rng)}};
    std::vector<Word> lhs_factors;
    for (int k = 0; k <= n; ++k)
      lhs_factors.push_back(v.conj(f.pow(k)));
    Word lhs = Word::product(lhs_factors);
    Word rhs = (v * f.inverse()).pow(n) * v * f.pow(n);
    CHECK(evaluate(lhs, images) == evaluate(rhs, images));
    Slp slp({"f", "v"});
    CHECK(free_reduce(lhs, slp) == free_reduce(rhs, slp));
  }
}

TEST_CASE("free reduction")
{
  Slp slp({"a", "b"});
  slp.define("c", sym("a") * sym("b"));
  CHECK(free_reduce(sym("c") * sym("c").inverse(), slp).empty());
  CHECK(free_reduce(sym("a").conj(sym("b")), slp) == std::vector<Letter>{{1, -1}, {0, 1}, {1, 1}});
  CHECK(free_reduce(Word::commutator(sym("a"), sym("a")), slp).empty());
  CHECK_THROWS_AS(free_reduce(sym("a").pow(100), slp, 10), Error);
}

TEST_CASE("text format round-trip")
{
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Word w = random_word(rng, 4);
    CHECK(parse_word(to_text(w)) == w);
    CHECK(free_reduce(parse_word(to_flat(w)), Slp({"a", "b", "c"})) == free_reduce(w, Slp({"a", "b", "c"})));
  }
  CHECK(to_text(sym("z").conj(sym("a").pow(-1))) == "z^(a^-1)");
  CHECK(to_text(Word::commutator(sym("d"), sym("e").conj(sym("y")))) == "[d,e^y]");
  CHECK(parse_word("1").is_identity());
  CHECK_THROWS_AS(parse_word("a^"), Error);
  CHECK_THROWS_AS(parse_word("(a b"), Error);
}

TEST_CASE("slp round-trips")
{
  for (auto const &pres : {glued(17, GroupKind::Alt), glued(17, GroupKind::Sym), alt_p3(11), base_p2(23, GroupKind::Sym)}) {
    CHECK(parse_slp(to_text(pres.slp)) == pres.slp);
    CHECK(slp_from_json(to_json(pres.slp)) == pres.slp);
    CHECK(slp_from_json(nlohmann::json::parse(to_json(pres.slp).dump())) == pres.slp);
  }
  CHECK_THROWS_AS(parse_slp("generators: a\nrelator: b\n"), Error);
  CHECK_THROWS_AS(word_from_json(nlohmann::json{{"op", "bogus"}}), Error);
}

TEST_CASE("product evaluation in both coordinates")
{
  Interval d{1, 4};
  PermPair x{Permutation::from_cycles(d, {{1, 2}}), Permutation::from_cycles(d, {{3, 4}})};
  PermPair y{Permutation::from_cycles(d, {{2, 3}}), Permutation::identity(d)};
  ImageMap<PermPair> images{{"x", x}, {"y", y}};
  auto r = evaluate((sym("x") * sym("y")).pow(3), images);
  CHECK(r.first.is_identity());
  CHECK(r.second == Permutation::from_cycles(d, {{3, 4}}));
}
