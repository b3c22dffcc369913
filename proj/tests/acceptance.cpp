// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "shortpres/builders.hpp"
#include "shortpres/error.hpp"
#include "shortpres/verify.hpp"

#include "golden17.hpp"

using namespace shortpres;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

constexpr GroupKind kKinds[] = {GroupKind::Alt, GroupKind::Sym};

std::optional<Presentation> covered(std::int64_t n, GroupKind kind, BuildOptions const &opts = {})
{
  try {
    return presentation_for(n, kind, opts);
  } catch (Error const &e) {
    if (e.kind() == ErrorKind::UnsupportedDegree)
      return std::nullopt;
    throw;
  }
}

std::vector<Permutation> image_list(Presentation const &pres)
{
  std::vector<Permutation> gens;
  for (auto const &[_, g] : std::get<ImageMap<Permutation>>(*pres.images))
    gens.push_back(g);
  return gens;
}

std::string types(std::vector<std::size_t> const &t)
{
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < t.size(); ++i)
    os << (i ? "," : "") << t[i];
  os << '}';
  return os.str();
}

Outcome relators_up_to_4096()
{
  Outcome out;
  std::size_t checked = 0;
  std::vector<std::string> bad;
  for (std::int64_t n = 2; n <= 4096; ++n) {
    for (auto kind : kKinds) {
      auto pres = covered(n, kind);
      if (!pres)
        continue;
      ++checked;
      bool ok = check_relators(*pres).all_identity();
      if (ok && n > 40) {
        // necessary conditions for A_n / S_n: transitive, with z a 3-cycle
        auto gens = image_list(*pres);
        auto orb = orbit(gens, pres->domain.lo);
        Evaluator<Permutation> ev(pres->slp, std::get<ImageMap<Permutation>>(*pres->images));
        Permutation z = pres->slp.is_generator("z") ? ev.evaluate(sym("z")) : ev.lookup("z");
        ok = orb.size() == static_cast<std::size_t>(n) && z.cycle_type() == std::vector<std::size_t>{3};
      }
      if (!ok)
        bad.push_back(pres->id);
    }
  }
  out.pass = bad.empty();
  out.detail = std::to_string(checked) + " presentations, " + std::to_string(bad.size()) + " failing" +
               (bad.empty() ? "" : " (first " + bad.front() + ")");
  return out;
}

Outcome orders_up_to_40()
{
  Outcome out;
  std::size_t certified = 0, total = 0;
  for (std::int64_t n = 2; n <= 40; ++n) {
    for (auto kind : kKinds) {
      auto pres = covered(n, kind);
      if (!pres)
        continue;
      ++total;
      auto rep = verify_presentation(*pres, true);
      if (rep.order_certified)
        ++certified;
      else
        out.pass = false;
    }
  }
  out.detail = std::to_string(certified) + "/" + std::to_string(total) + " orders equal n!/2 or n!";
  return out;
}

Outcome hat_images()
{
  Outcome out;
  std::ostringstream os;
  for (std::int64_t p : {11, 23, 47, 59, 83, 107}) {
    for (auto kind : kKinds) {
      auto hat = base_p2_hat(p, kind);
      Evaluator<PermPair> ev(hat.slp, std::get<ImageMap<PermPair>>(*hat.images));
      auto const &h = ev.lookup("h");
      Permutation bbar = ev.lookup("b").second;
      Permutation want = kind == GroupKind::Alt ? bbar : bbar.pow(2);
      bool ok = check_relators(hat).all_identity() && h.first.is_identity() && h.second == want &&
                h.second.order() % 3 != 0;
      if (!ok) {
        out.pass = false;
        os << " " << hat.id;
      }
    }
  }
  out.detail = out.pass ? "h = (1, b) / (1, b^2) with order prime to 3 at 6 primes, both kinds" : "failing:" + os.str();
  return out;
}

Outcome word_meanings_up_to_512()
{
  Outcome out;
  std::size_t claims = 0;
  std::vector<std::string> bad;
  std::set<std::pair<std::int64_t, GroupKind>> primes;
  for (std::int64_t n = 13; n <= 512; ++n) {
    for (auto kind : kKinds) {
      auto pres = covered(n, kind, {.images = false});
      if (!pres)
        continue;
      if (pres->which == PresentationCase::BaseP2) {
        primes.emplace(pres->params.p, kind);
        continue;
      }
      if (pres->which != PresentationCase::Glued)
        continue;
      primes.emplace(pres->params.p, kind);
      for (bool simplified : {true, false}) {
        for (auto const &c : check_word_meanings(n, kind, simplified)) {
          ++claims;
          if (!c.holds)
            bad.push_back(pres->id + ": " + c.name);
        }
      }
    }
  }
  for (auto const &[p, kind] : primes) {
    for (auto const &c : check_cycle_words(derive_base_params(p, kind), true)) {
      ++claims;
      if (!c.holds)
        bad.push_back("p=" + std::to_string(p) + " " + to_string(kind) + ": " + c.name);
    }
  }
  out.pass = bad.empty();
  out.detail = std::to_string(claims) + " claims over " + std::to_string(primes.size()) + " base primes, " +
               std::to_string(bad.size()) + " failing" + (bad.empty() ? "" : " (first " + bad.front() + ")");
  return out;
}

Outcome golden_17()
{
  Outcome out;
  std::vector<std::string> bad;
  auto same = [](Slp const &ours, Slp const &listing, std::set<std::size_t> const &skip) {
    if (ours.generators() != listing.generators() || ours.definitions().size() != listing.definitions().size() ||
        ours.relators().size() != listing.relators().size())
      return false;
    for (auto const &[name, word] : listing.definitions())
      if (!ours.definition_index(name) || free_reduce(ours.definition(name), ours) != free_reduce(word, listing))
        return false;
    for (std::size_t i = 0; i < listing.relators().size(); ++i)
      if (!skip.count(i) && free_reduce(ours.relators()[i], ours) != free_reduce(listing.relators()[i], listing))
        return false;
    return true;
  };
  for (auto kind : kKinds) {
    Slp listing = parse_slp(kind == GroupKind::Alt ? golden17::kAlt17 : golden17::kSym17);
    auto ps = golden17::worked_params(kind);
    std::string tag = to_string(kind);
    if (!validate_params(ps))
      bad.push_back(tag + " worked-example parameters invalid");
    auto with_worked = glued(17, kind, {.params = ps});
    auto canonical = glued(17, kind);
    auto const &img = std::get<ImageMap<Permutation>>(*with_worked.images);
    std::string g_text = kind == GroupKind::Alt ? "(1,3,9,5,4)(2,6,7,10,8)(13,12,11)" : "(1,7,5,2,3,10,4,6,9,8)(11,12,13)";
    if (img.at("g") != Permutation::parse(with_worked.domain, g_text) ||
        img.at("a").to_string() != "(1,2,3,4,5,6,7,8,9,10,11)" ||
        img.at("y").to_string() != "(-3,13)(-2,12)(-1,11)(0,10)")
      bad.push_back(tag + " images");
    if (!same(with_worked.slp, listing, {}))
      bad.push_back(tag + " listing (worked-example parameters)");
    // canonical parameters differ from the listing only through s
    std::set<std::size_t> skip;
    if (*canonical.params.s != *ps.s)
      skip.insert(1);
    if (!same(canonical.slp, listing, skip))
      bad.push_back(tag + " listing (canonical parameters)");
    for (auto const *pres : {&with_worked, &canonical})
      if (!check_relators(*pres).all_identity())
        bad.push_back(pres->id + " evaluation");
    auto plain = glued(17, kind, {.simplified = false, .params = ps});
    if (!check_relators(plain).all_identity())
      bad.push_back(tag + " unsimplified evaluation");
  }
  out.pass = bad.empty();
  out.detail = bad.empty() ? "both kinds match the worked example and evaluate trivially" : "mismatch: " + bad.front();
  return out;
}

Outcome falsification()
{
  Outcome out;
  std::ostringstream os;
  auto rel = falsify_original(Falsification::P3Relator, 11);
  bool a = rel.original_fails && rel.relator_cycle_type == std::vector<std::size_t>{5, 7};
  os << "(a) original relator " << (rel.original_fails ? "nonidentity" : "identity") << " with cycle type "
     << types(rel.relator_cycle_type) << ", base element " << types(rel.element_cycle_type) << ", expected {5,7}: "
     << (a ? "ok" : "MISMATCH");
  bool a2 = falsify_original(Falsification::P3RelatorHOnly, 11).original_fails;
  os << "; (a') corrected h, original order " << (a2 ? "nonidentity" : "identity");

  auto sl2 = falsify_original(Falsification::SL2Generators, 11);
  bool b = sl2.original_fails && sl2.witness.find("(t')^2 = -(t'u')^3") != std::string::npos;
  os << "; (b) (t',u') " << (b ? "fail CR with (t')^2 = -(t'u')^3" : "MISMATCH");

  auto [t, u] = gens_tu(11);
  auto order_v = subgroup_order(11, {u, element_v(11, 2, 6, true)});
  auto order_v1 = subgroup_order(11, {u, element_v(11, 2, 6, false)});
  bool c = order_v == 110 && order_v1 == 55;
  os << "; (c) |<u,v>| = " << order_v << ", |<u,v'>| = " << order_v1;

  auto tw = falsify_original(Falsification::TranspositionWord, 11);
  bool d = tw.original_fails && tw.witness == "(1,10)";
  os << "; (d) transposition word gives " << tw.witness;

  out.pass = a && a2 && b && c && d;
  out.detail = os.str();
  return out;
}

Outcome bit_length_scaling()
{
  Outcome out;
  std::ostringstream os;
  for (auto kind : kKinds) {
    auto ratio = [&](std::int64_t n) {
      auto pres = presentation_for(n, kind, {.images = false});
      return static_cast<double>(bit_length(pres.slp)) / std::log2(static_cast<double>(n));
    };
    double base = ratio(51);
    os << to_string(kind) << " n=51: " << std::round(base * 10) / 10;
    for (std::int64_t n : {1'000LL, 1'000'000LL, 1'000'000'000LL}) {
      double r = ratio(n);
      os << ", " << n << ": " << std::round(r * 10) / 10;
      if (r > 2 * base)
        out.pass = false;
    }
    os << "; ";
  }

  // shape at every covered degree up to 4096, and at random degrees up to 10^9
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> big(4097, 1'000'000'000);
  std::vector<std::int64_t> degrees;
  for (std::int64_t n = 2; n <= 4096; ++n)
    degrees.push_back(n);
  for (int i = 0; i < 300; ++i)
    degrees.push_back(big(rng));
  std::size_t shapes = 0;
  for (auto n : degrees) {
    for (auto kind : kKinds) {
      auto pres = covered(n, kind, {.images = false});
      if (!pres)
        continue;
      ++shapes;
      if (pres->slp.generators().size() > 3 || pres->slp.relators().size() > 7)
        out.pass = false;
    }
  }
  os << shapes << " presentations with <= 3 generators and <= 7 relators";
  out.detail = os.str();
  return out;
}

Outcome horner()
{
  Outcome out;
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<int> len(0, 64);
  std::uniform_int_distribution<Point> deg(1, 40);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    Interval dom{1, deg(rng)};
    auto random_perm = [&] {
      std::vector<Point> pts;
      for (Point x = dom.lo; x <= dom.hi; ++x)
        pts.push_back(x);
      std::shuffle(pts.begin(), pts.end(), rng);
      return Permutation::from_images(dom, pts);
    };
    Permutation v = random_perm(), f = random_perm();
    int n = len(rng);
    Permutation lhs = Permutation::identity(dom);
    for (int k = 0; k <= n; ++k)
      lhs = lhs * v.conjugate(f.pow(k));
    Permutation rhs = (v * f.inverse()).pow(n) * v * f.pow(n);
    if (lhs != rhs)
      ++failures;
  }
  out.pass = failures == 0;
  out.detail = "1000 random instances, " + std::to_string(failures) + " failing";
  return out;
}

Outcome glue_prime_bounds()
{
  Outcome out;
  std::size_t checked = 0, mismatches = 0;
  std::vector<bool> composite(10001, false);
  for (std::size_t i = 2; i * i <= 10000; ++i)
    if (!composite[i])
      for (std::size_t j = i * i; j <= 10000; j += i)
        composite[j] = true;
  auto in_range = [](std::int64_t n, GroupKind kind) {
    if (kind == GroupKind::Sym)
      return (n >= 14 && n <= 20) || (n >= 26 && n <= 44) || n >= 50;
    return (n >= 15 && n <= 20) || (n >= 27 && n <= 44) || n >= 51;
  };
  for (std::int64_t n = 13; n <= 10000; ++n) {
    for (auto kind : kKinds) {
      if (!in_range(n, kind))
        continue;
      ++checked;
      std::int64_t hi = kind == GroupKind::Alt ? n - 4 : n - 3;
      std::int64_t want = 0;
      for (std::int64_t q = (n + 3) / 2; q <= hi && !want; ++q)
        if (q % 12 == 11 && !composite[static_cast<std::size_t>(q)])
          want = q;
      std::int64_t got = 0;
      try {
        got = find_glue_prime(n, kind);
      } catch (Error const &) {
      }
      bool bounds = got != 0 && 2 * got >= n + 2 && got <= hi && got % 12 == 11;
      if (!bounds || got != want)
        ++mismatches;
    }
  }
  out.pass = mismatches == 0;
  out.detail = std::to_string(checked) + " covered degrees, " + std::to_string(mismatches) + " mismatches";
  return out;
}

Outcome baselines()
{
  Outcome out;
  std::size_t ok = 0, total = 0;
  auto run = [&](Presentation const &pres) {
    ++total;
    if (verify_presentation(pres, true).order_certified)
      ++ok;
    else
      out.pass = false;
  };
  for (std::int64_t n = 2; n <= 12; ++n)
    run(moore(n));
  for (std::int64_t d = 5; d <= 12; ++d)
    run(carmichael(d));
  out.detail = std::to_string(ok) + "/" + std::to_string(total) + " Moore and Carmichael presentations certified";
  return out;
}

} // namespace

int main()
{
  std::vector<std::pair<int, std::function<Outcome()>>> criteria{
    {1, relators_up_to_4096}, {2, orders_up_to_40},   {3, hat_images}, {4, word_meanings_up_to_512},
    {5, golden_17},           {6, falsification},     {7, bit_length_scaling}, {8, horner},
    {9, glue_prime_bounds},           {10, baselines},
  };
  int failed = 0;
  for (auto const &[id, run] : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (std::exception const &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << " ["
              << std::round(secs * 100) / 100 << "s]" << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (10 - failed) << "/10 criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
