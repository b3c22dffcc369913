#include "shortpres/verify.hpp"

#include <chrono>
#include <set>
#include <type_traits>

#include "shortpres/error.hpp"

namespace shortpres {

bool VerificationReport::all_identity() const
{
  return std::all_of(relators.begin(), relators.end(), [](RelatorResult const &r) { return r.identity; });
}

nlohmann::json to_json(VerificationReport const &r)
{
  nlohmann::json rels = nlohmann::json::array();
  for (auto const &rel : r.relators)
    rels.push_back({{"index", rel.index}, {"identity", rel.identity}, {"cycle_type", rel.cycle_type}});
  return {
    {"id", r.id},
    {"degree", r.degree},
    {"kind", to_string(r.kind)},
    {"case", to_string(r.which)},
    {"relators", rels},
    {"order_certified", r.order_certified},
    {"order", r.order ? nlohmann::json(r.order->str()) : nlohmann::json()},
    {"millis", r.millis},
  };
}

namespace {

using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool element_is_identity(Permutation const &g) { return g.is_identity(); }
bool element_is_identity(PermPair const &g) { return g.is_identity(); }
bool element_is_identity(PermMat const &g) { return g.first.is_identity() && g.second.is_identity(); }

Permutation const &first_coordinate(Permutation const &g) { return g; }
Permutation const &first_coordinate(PermPair const &g) { return g.first; }
Permutation const &first_coordinate(PermMat const &g) { return g.first; }

} // namespace

VerificationReport check_relators(Presentation const &pres)
{
  if (pres.degree > kMaxEvalDegree)
    throw Error(ErrorKind::DegreeTooLarge, "degree " + std::to_string(pres.degree) + " exceeds the evaluation limit");
  if (!pres.images)
    throw Error(ErrorKind::InvalidArgument, pres.id + " was built without images");

  auto start = Clock::now();
  VerificationReport report;
  report.id = pres.id;
  report.degree = pres.degree;
  report.kind = pres.kind;
  report.which = pres.which;
  std::visit(
    [&](auto const &images) {
      using G = typename std::decay_t<decltype(images)>::mapped_type;
      Evaluator<G> ev(pres.slp, images);
      auto values = ev.relator_values();
      for (std::size_t i = 0; i < values.size(); ++i) {
        RelatorResult r;
        r.index = i;
        r.identity = element_is_identity(values[i]);
        if (!r.identity)
          r.cycle_type = first_coordinate(values[i]).cycle_type();
        report.relators.push_back(std::move(r));
      }
    },
    *pres.images);
  report.millis = millis_since(start);
  return report;
}

VerificationReport verify_presentation(Presentation const &pres, bool certify)
{
  auto start = Clock::now();
  VerificationReport report = check_relators(pres);
  bool simple_images = pres.images && std::holds_alternative<ImageMap<Permutation>>(*pres.images);
  if (certify && simple_images && pres.degree <= kMaxCertifyDegree && pres.which != PresentationCase::AglHat) {
    std::vector<Permutation> gens;
    for (auto const &[_, g] : std::get<ImageMap<Permutation>>(*pres.images))
      gens.push_back(g);
    BigInt order = group_order(gens);
    BigInt expected = factorial(pres.degree);
    if (pres.kind == GroupKind::Alt)
      expected /= 2;
    report.order = order;
    report.order_certified = report.all_identity() && order == expected;
  }
  report.millis = millis_since(start);
  return report;
}

BigInt factorial(std::int64_t n)
{
  BigInt f = 1;
  for (std::int64_t i = 2; i <= n; ++i)
    f *= i;
  return f;
}

// ----------------------------------------------------------- Schreier-Sims

namespace {

using Raw = std::vector<std::uint32_t>;

Raw raw_mul(Raw const &a, Raw const &b)
{
  Raw out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = b[a[i]];
  return out;
}

Raw raw_inv(Raw const &a)
{
  Raw out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[a[i]] = static_cast<std::uint32_t>(i);
  return out;
}

bool raw_is_identity(Raw const &a)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i)
      return false;
  return true;
}

std::uint32_t first_moved(Raw const &a)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i)
      return static_cast<std::uint32_t>(i);
  throw Error(ErrorKind::InternalInvariantViolation, "identity has no moved point");
}

struct Level {
  std::uint32_t beta = 0;
  std::vector<Raw> gens;
  std::vector<std::uint32_t> orbit;
  // transversal[x] maps beta to x; inverse kept alongside
  std::vector<std::optional<Raw>> transversal;
  std::vector<std::optional<Raw>> transversal_inv;
};

class SchreierSims {
public:
  SchreierSims(std::vector<Raw> const &gens, std::size_t n) : n_(n)
  {
    for (auto const &g : gens) {
      if (raw_is_identity(g))
        continue;
      bool fixes_base = std::all_of(levels_.begin(), levels_.end(), [&](Level const &l) { return g[l.beta] == l.beta; });
      if (fixes_base)
        push_level(first_moved(g));
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (auto const &g : gens) {
        if (raw_is_identity(g))
          continue;
        bool fixes_prefix = true;
        for (std::size_t l = 0; l < i; ++l)
          fixes_prefix = fixes_prefix && g[levels_[l].beta] == levels_[l].beta;
        if (fixes_prefix)
          levels_[i].gens.push_back(g);
      }
      rebuild(levels_[i]);
    }
    run();
  }

  BigInt order() const
  {
    BigInt result = 1;
    for (auto const &l : levels_)
      result *= l.orbit.size();
    return result;
  }

private:
  void push_level(std::uint32_t beta)
  {
    Level l;
    l.beta = beta;
    levels_.push_back(std::move(l));
    rebuild(levels_.back());
  }

  void rebuild(Level &l) const
  {
    l.transversal.assign(n_, std::nullopt);
    l.transversal_inv.assign(n_, std::nullopt);
    Raw id(n_);
    std::iota(id.begin(), id.end(), 0u);
    l.transversal[l.beta] = id;
    l.transversal_inv[l.beta] = id;
    l.orbit = {l.beta};
    for (std::size_t q = 0; q < l.orbit.size(); ++q) {
      std::uint32_t x = l.orbit[q];
      for (auto const &s : l.gens) {
        std::uint32_t y = s[x];
        if (!l.transversal[y]) {
          l.transversal[y] = raw_mul(*l.transversal[x], s);
          l.transversal_inv[y] = raw_inv(*l.transversal[y]);
          l.orbit.push_back(y);
        }
      }
    }
  }

  /// Sift g through levels from `from`; returns the residue and the level where it stopped.
  std::pair<Raw, std::size_t> strip(Raw g, std::size_t from) const
  {
    for (std::size_t i = from; i < levels_.size(); ++i) {
      std::uint32_t b = g[levels_[i].beta];
      if (!levels_[i].transversal[b])
        return {g, i};
      g = raw_mul(g, *levels_[i].transversal_inv[b]);
    }
    return {g, levels_.size()};
  }

  void run()
  {
    if (levels_.empty())
      return;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool restarted = false;
      auto &level = levels_[static_cast<std::size_t>(i)];
      std::vector<std::uint32_t> orbit = level.orbit;
      std::vector<Raw> gens = level.gens;
      for (std::size_t oi = 0; oi < orbit.size() && !restarted; ++oi) {
        std::uint32_t gamma = orbit[oi];
        for (auto const &s : gens) {
          auto const &lv = levels_[static_cast<std::size_t>(i)];
          std::uint32_t delta = s[gamma];
          Raw schreier = raw_mul(raw_mul(*lv.transversal[gamma], s), *lv.transversal_inv[delta]);
          if (raw_is_identity(schreier))
            continue;
          auto [h, j] = strip(schreier, static_cast<std::size_t>(i) + 1);
          bool passes = true;
          if (j < levels_.size()) {
            passes = false;
          } else if (!raw_is_identity(h)) {
            passes = false;
            push_level(first_moved(h));
          }
          if (!passes) {
            for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
              levels_[l].gens.push_back(h);
              rebuild(levels_[l]);
            }
            i = static_cast<std::ptrdiff_t>(j);
            restarted = true;
            break;
          }
        }
      }
      if (!restarted)
        --i;
    }
  }

  std::size_t n_;
  std::vector<Level> levels_;
};

std::vector<Raw> to_raw(std::vector<Permutation> const &gens)
{
  std::vector<Raw> out;
  for (auto const &g : gens) {
    if (g.domain() != gens.front().domain())
      throw Error(ErrorKind::DomainMismatch, "generators on different domains");
    Raw r(g.degree());
    for (std::size_t i = 0; i < r.size(); ++i)
      r[i] = static_cast<std::uint32_t>(g.offset_image(i));
    out.push_back(std::move(r));
  }
  return out;
}

void require_small(std::vector<Permutation> const &gens)
{
  if (!gens.empty() && static_cast<std::int64_t>(gens.front().degree()) > kMaxCertifyDegree)
    throw Error(ErrorKind::DegreeTooLarge,
                "degree " + std::to_string(gens.front().degree()) + " exceeds " + std::to_string(kMaxCertifyDegree));
}

} // namespace

BigInt group_order(std::vector<Permutation> const &gens)
{
  if (gens.empty())
    return 1;
  require_small(gens);
  return SchreierSims(to_raw(gens), gens.front().degree()).order();
}

BigInt certify_order(std::vector<Permutation> const &gens, GroupKind expected)
{
  BigInt order = group_order(gens);
  if (gens.empty())
    return order;
  BigInt want = factorial(static_cast<std::int64_t>(gens.front().degree()));
  if (expected == GroupKind::Alt)
    want /= 2;
  if (order != want)
    throw Error(ErrorKind::InternalInvariantViolation,
                "group order " + order.str() + " differs from the expected " + want.str());
  return order;
}

std::string to_string(Homogeneity h)
{
  switch (h) {
  case Homogeneity::Not2Homog: return "not-2-homogeneous";
  case Homogeneity::TwoHomogOnly: return "2-homogeneous-only";
  case Homogeneity::TwoTransitive: return "2-transitive";
  }
  return "?";
}

Homogeneity check_2homog(std::vector<Permutation> const &gens)
{
  if (gens.empty())
    return Homogeneity::Not2Homog;
  require_small(gens);
  auto raw = to_raw(gens);
  std::size_t n = raw.front().size();
  if (n < 2)
    return Homogeneity::Not2Homog;

  auto orbit_size = [&](bool ordered) {
    auto key = [&](std::uint32_t x, std::uint32_t y) {
      if (!ordered && x > y)
        std::swap(x, y);
      return static_cast<std::size_t>(x) * n + y;
    };
    std::vector<bool> seen(n * n, false);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> queue{{0, 1}};
    seen[key(0, 1)] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      auto [x, y] = queue[q];
      for (auto const &g : raw) {
        auto k = key(g[x], g[y]);
        if (!seen[k]) {
          seen[k] = true;
          queue.emplace_back(g[x], g[y]);
        }
      }
    }
    return queue.size();
  };

  if (orbit_size(false) != n * (n - 1) / 2)
    return Homogeneity::Not2Homog;
  return orbit_size(true) == n * (n - 1) ? Homogeneity::TwoTransitive : Homogeneity::TwoHomogOnly;
}

// ------------------------------------------------------------ word claims

namespace {

Permutation cycles_on(Interval dom, std::vector<Cycle> const &cs) { return Permutation::from_cycles(dom, cs); }

Cycle run(Point lo, Point hi)
{
  Cycle c;
  for (Point x = lo; x <= hi; ++x)
    c.push_back(x);
  return c;
}

Cycle concat(std::initializer_list<Cycle> parts)
{
  Cycle out;
  for (auto const &p : parts)
    out.insert(out.end(), p.begin(), p.end());
  return out;
}

bool support_within(Permutation const &g, Point lo, Point hi)
{
  auto s = g.support();
  return std::all_of(s.begin(), s.end(), [&](Point x) { return lo <= x && x <= hi; });
}

bool orbit_is(std::vector<Permutation> const &gens, Point start, Point lo, Point hi)
{
  auto o = orbit(gens, start);
  if (static_cast<std::int64_t>(o.size()) != hi - lo + 1)
    return false;
  return *o.begin() == lo && *o.rbegin() == hi;
}

} // namespace

std::vector<Claim> check_word_meanings(std::int64_t n, GroupKind kind, bool simplified)
{
  BuildOptions opts;
  opts.simplified = simplified;
  Presentation pres = glued(n, kind, opts);
  auto const &images = std::get<ImageMap<Permutation>>(*pres.images);
  Evaluator<Permutation> ev(pres.slp, images);
  ParamSet const &ps = pres.params;
  std::int64_t p = ps.p, k = *ps.k;
  Interval dom = pres.domain;
  bool sym_case = kind == GroupKind::Sym;
  bool odd = n % 2 != 0;

  std::vector<Claim> claims;
  auto claim = [&](std::string name, bool ok) { claims.push_back({std::move(name), ok}); };
  auto means = [&](std::string const &def, Permutation const &expected) {
    claim(def + " == " + expected.to_string(), ev.lookup(def) == expected);
  };

  Permutation T = cycles_on(dom, {{p + 1, p + 2}});
  means("b", scalar_perm(dom, p, *ps.r));
  means("z", cycles_on(dom, {{p, p + 1, p + 2}}));
  means("h", Permutation::identity(dom));
  means("x", cycles_on(dom, {{1, p}, {p + 1, p + 2}}));
  means("atil", cycles_on(dom, {{1, 2, 3}}));
  if (sym_case) {
    std::vector<Cycle> pairs;
    for (std::int64_t i = 1; i <= (p - 1) / 2; ++i)
      pairs.push_back({i, p - i});
    Cycle descending;
    for (std::int64_t i = p - 1; i >= (p + 1) / 2; --i)
      descending.push_back(i);
    means("cdot", cycles_on(dom, {run(1, (p - 1) / 2), descending}));
    pairs.push_back({p + 1, p + 2});
    means("v", cycles_on(dom, pairs));
    means("t", T);
  }

  bool c_from_two = sym_case == odd;
  means("c", cycles_on(dom, {run(c_from_two ? 2 : 1, k)}));
  means("d", cycles_on(dom, {run(5, p + 2)}));
  bool e_two = sym_case == odd;
  means("e", cycles_on(dom, {concat({e_two ? Cycle{1, 2} : Cycle{1}, run(k + 1, p + 2)})}));
  if (pres.slp.definition_index("xtil")) {
    means("xtil", cycles_on(dom, {{-1, k + 2}, {0, k + 1}}));
    Cycle back;
    for (Point x = 0; x >= dom.lo; --x)
      back.push_back(x);
    // With the 4-cycle y of even alternating degree the last two points trade places.
    if (!sym_case && !odd)
      std::swap(back[back.size() - 1], back[back.size() - 2]);
    Permutation u = cycles_on(dom, {run(1, p + 2)}) * cycles_on(dom, {concat({run(1, k), back})});
    means("u", u);
  }
  claim("w == y", ev.lookup("w") == images.at("y"));

  Permutation const &c = ev.lookup("c");
  Permutation const &d = ev.lookup("d");
  Permutation const &atil = ev.lookup("atil");
  Permutation ey = ev.lookup("e").conjugate(images.at("y"));
  claim("support(c) within [1,k]", support_within(c, 1, k));
  claim("support(d) within [5,p+2]", support_within(d, 5, p + 2));
  claim("support(e^y) within [lo,3]", support_within(ey, dom.lo, 3));
  claim("<atil,c> transitive on [1,k]", orbit_is({atil, c}, 1, 1, k));
  claim("<atil,e^y> transitive on [lo,3]", orbit_is({atil, ey}, 1, dom.lo, 3));
  return claims;
}

std::vector<Claim> check_cycle_words(ParamSet const &ps, bool exhaustive, bool simplified)
{
  Presentation kit = cycle_toolkit(ps, simplified);
  auto const &images = std::get<ImageMap<Permutation>>(*kit.images);
  Evaluator<Permutation> ev(kit.slp, images);
  GlueWords w(ps, simplified);
  std::int64_t p = ps.p;
  Interval dom = kit.domain;
  Permutation T = cycles_on(dom, {{p + 1, p + 2}});

  std::vector<std::int64_t> sample;
  if (exhaustive || p <= 60) {
    for (std::int64_t i = 1; i <= p + 2; ++i)
      sample.push_back(i);
  } else {
    std::set<std::int64_t> s{1, 2, 3, 4, 5, (p - 1) / 2, (p + 1) / 2, p - 3, p - 2, p - 1, p, p + 1, p + 2};
    for (std::int64_t i = 1; i <= p; i += std::max<std::int64_t>(1, p / 16))
      s.insert(i);
    sample.assign(s.begin(), s.end());
  }

  std::vector<Claim> claims;
  bool z_ok = true;
  for (std::int64_t i = 1; i <= p; ++i)
    z_ok = z_ok && ev.evaluate(w.z(i)) == cycles_on(dom, {{i, p + 1, p + 2}});
  claims.push_back({"z(i) == (i,p+1,p+2) for 1<=i<=p", z_ok});

  bool d_ok = true;
  for (std::int64_t i : sample)
    for (std::int64_t j : sample)
      if (i <= p && j <= p && i != j)
        d_ok = d_ok && ev.evaluate(w.d(i, j)) == cycles_on(dom, {{i, j}, {p + 1, p + 2}});
  claims.push_back({"d(i,j) == (i,j)(p+1,p+2)", d_ok});

  claims.push_back({"x == (1,p)(p+1,p+2)", ev.lookup("x") == cycles_on(dom, {{1, p}, {p + 1, p + 2}})});

  bool c_ok = true, c_inv_ok = true;
  for (std::int64_t i : sample) {
    for (std::int64_t j : sample) {
      bool defined = (1 <= i && i <= j && j <= p - 1) || (j == p && 1 <= i && i <= p - 2) ||
                     (j == p + 1 && 1 <= i && i <= p - 1) || (j == p + 2 && 1 <= i && i <= p - 2);
      if (!defined)
        continue;
      Permutation expected = interval_cycle(dom, i, j) * T.pow(j - i);
      Permutation got = ev.evaluate(w.c(i, j));
      c_ok = c_ok && got == expected;
      c_inv_ok = c_inv_ok && ev.evaluate(w.c_inv(i, j)) == expected.inverse();
    }
  }
  claims.push_back({"c(i,j) == (i,...,j)(p+1,p+2)^(j-i)", c_ok});
  claims.push_back({"c(i,j)^-1 inverts c(i,j)", c_inv_ok});

  if (kit.slp.definition_index("t")) {
    std::vector<Cycle> pairs;
    for (std::int64_t i = 1; i <= (p - 1) / 2; ++i)
      pairs.push_back({i, p - i});
    Permutation b2 = cycles_on(dom, pairs);
    claims.push_back({"b2 == (1,p-1)...((p-1)/2,(p+1)/2)", ev.evaluate(w.b2()) == b2});
    Cycle descending;
    for (std::int64_t i = p - 1; i >= (p + 1) / 2; --i)
      descending.push_back(i);
    claims.push_back({"cdot == (1..(p-1)/2)(p-1..(p+1)/2)",
                      ev.lookup("cdot") == cycles_on(dom, {run(1, (p - 1) / 2), descending})});
    claims.push_back({"(cdot d(1,-1))^((p-1)/2) == b2 (p+1,p+2)", ev.lookup("v") == b2 * T});
    claims.push_back({"(d(1,-1) cdot)^((p-1)/2) == b2 (p+1,p+2)", ev.evaluate(w.v_alt()) == b2 * T});
    claims.push_back({"t == (p+1,p+2)", ev.lookup("t") == T});
  }
  return claims;
}

// ---------------------------------------------------------- falsification

std::string to_string(Falsification f)
{
  switch (f) {
  case Falsification::P3Relator: return "p3-relator";
  case Falsification::P3RelatorHOnly: return "p3-relator-h-only";
  case Falsification::SL2Generators: return "sl2-generators";
  case Falsification::TranspositionWord: return "transposition-word";
  }
  return "?";
}

nlohmann::json to_json(FalsificationResult const &r)
{
  return {
    {"which", to_string(r.which)},
    {"p", r.p},
    {"original_fails", r.original_fails},
    {"element_cycle_type", r.element_cycle_type},
    {"relator_cycle_type", r.relator_cycle_type},
    {"witness", r.witness},
  };
}

FalsificationResult falsify_original(Falsification which, std::int64_t p)
{
  FalsificationResult out;
  out.which = which;
  out.p = p;
  switch (which) {
  case Falsification::P3Relator:
  case Falsification::P3RelatorHOnly: {
    Presentation pres = alt_p3(p);
    auto const &images = std::get<ImageMap<Permutation>>(*pres.images);
    Evaluator<Permutation> ev(pres.slp, images);
    Permutation const &x = images.at("x");
    Permutation const &y = images.at("y");
    Permutation const &z = images.at("z");
    std::int64_t j = *pres.params.j, jbar = *pres.params.jbar;
    Permutation h = which == Falsification::P3Relator
                      ? y.pow(jbar) * y.pow(j).conjugate(x) * y.pow(jbar) * x.inverse()
                      : ev.lookup("h");
    Permutation base = h * z.conjugate(y * x) * z.conjugate(y.pow(j) * x);
    Permutation rel = base.pow((p + 1) / 2);
    out.original_fails = !rel.is_identity();
    out.element_cycle_type = base.cycle_type();
    out.relator_cycle_type = rel.cycle_type();
    out.witness = base.to_string();
    break;
  }
  case Falsification::SL2Generators: {
    auto [t, u] = gens_tu_original(p);
    out.original_fails = !check_cr_relators(p, t, u);
    bool sign_flip = t * t == (t * u).pow(3).negate();
    Mat2p second = (t * u.pow(4) * t * u.pow((p + 1) / 2)).pow(2) * u.pow(p) * t.pow(2 * (p / 3));
    out.witness = std::string(sign_flip ? "(t')^2 = -(t'u')^3" : "(t')^2 != -(t'u')^3") +
                  "; second relator = " + second.to_string();
    break;
  }
  case Falsification::TranspositionWord: {
    ParamSet ps = derive_base_params(p, GroupKind::Sym);
    if (p % 4 != 3)
      throw Error(ErrorKind::BadPrimeClass, "the transposition chain needs p = 3 mod 4");
    Presentation kit = cycle_toolkit(ps, true);
    Evaluator<Permutation> ev(kit.slp, std::get<ImageMap<Permutation>>(*kit.images));
    GlueWords w(ps, true);
    Permutation got = ev.evaluate(w.v_original() * w.b2());
    Permutation claimed = Permutation::from_cycles(kit.domain, {Cycle{p + 1, p + 2}});
    out.original_fails = got != claimed;
    out.element_cycle_type = got.cycle_type();
    out.witness = got.to_string();
    break;
  }
  }
  return out;
}

} // namespace shortpres
