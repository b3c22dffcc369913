#include "shortpres/builders.hpp"

#include <algorithm>
#include <numeric>

#include "shortpres/error.hpp"

namespace shortpres {

std::string to_string(PresentationCase c)
{
  switch (c) {
  case PresentationCase::Moore: return "moore";
  case PresentationCase::Carmichael: return "carmichael";
  case PresentationCase::Agl: return "agl";
  case PresentationCase::AglHat: return "agl-hat";
  case PresentationCase::BaseP2: return "base-p2";
  case PresentationCase::BaseP2Hat: return "base-p2-hat";
  case PresentationCase::P3: return "p3";
  case PresentationCase::P3Hat: return "p3-hat";
  case PresentationCase::Glued: return "glued";
  }
  return "?";
}

std::string to_string(AglVariant v)
{
  switch (v) {
  case AglVariant::AltAGL: return "alt-agl";
  case AglVariant::AltAGL2: return "alt-agl2";
  case AglVariant::SymAGL: return "sym-agl";
  }
  return "?";
}

namespace {

Word const A = sym("a");
Word const G = sym("g");
Word const Y = sym("y");
Word const B = sym("b");
Word const Z = sym("z");

std::int64_t least_abs(std::int64_t e, std::int64_t m)
{
  std::int64_t r = mod(e, m);
  return 2 * r > m ? r - m : r;
}

/// (a^s)^b a^-(s-1) with s printed as its cheapest residue.
Word affine_relator(std::int64_t s, std::int64_t p)
{
  std::int64_t printed = cheapest_residue(s, p);
  return A.pow(printed).conj(B) * A.pow(-(printed - 1));
}

std::vector<Point> identity_images(Interval domain)
{
  std::vector<Point> images(domain.size());
  std::iota(images.begin(), images.end(), domain.lo);
  return images;
}

std::size_t at(Interval domain, Point x) { return static_cast<std::size_t>(x - domain.lo); }

Permutation three_cycle(Interval domain, Point x, Point y, Point z)
{
  return Permutation::from_cycles(domain, {Cycle{x, y, z}});
}

bool want_images(BuildOptions const &opts, std::int64_t degree)
{
  return opts.images && degree <= kMaxImageDegree;
}

ParamSet checked_override(ParamSet const &ps)
{
  if (!validate_params(ps))
    throw Error(ErrorKind::InvalidArgument, "parameter override fails validation: " + to_json(ps).dump());
  return ps;
}

Word table_h(ParamSet const &ps, bool glued, GlueWords const &w)
{
  std::int64_t half = (ps.p + 1) / 2;
  if (ps.kind == GroupKind::Alt) {
    Word lead = glued ? B.pow(2) : B;
    return (lead * w.z(1) * w.z(-1)).pow(half);
  }
  return (B.pow(2) * w.z(1) * w.z(*ps.r)).pow(half);
}

} // namespace

// ------------------------------------------------------------------ images

Permutation interval_cycle(Interval domain, Point lo, Point hi)
{
  if (!domain.contains(lo) || !domain.contains(hi) || hi < lo)
    throw Error(ErrorKind::PointOutOfDomain, "cycle (" + std::to_string(lo) + ".." + std::to_string(hi) + ")");
  auto images = identity_images(domain);
  for (Point x = lo; x < hi; ++x)
    images[at(domain, x)] = x + 1;
  images[at(domain, hi)] = lo;
  return Permutation::from_images(domain, images);
}

Permutation scalar_perm(Interval domain, std::int64_t p, std::int64_t alpha)
{
  auto images = identity_images(domain);
  for (std::int64_t x = 1; x < p; ++x)
    images[at(domain, x)] = static_cast<Point>(mul_mod(static_cast<std::uint64_t>(x),
                                                       static_cast<std::uint64_t>(mod(alpha, p)),
                                                       static_cast<std::uint64_t>(p)));
  return Permutation::from_images(domain, images);
}

Permutation base_g_image(Interval domain, ParamSet const &ps)
{
  std::int64_t p = ps.p;
  Permutation rot = three_cycle(domain, p, p + 1, p + 2);
  return scalar_perm(domain, p, *ps.alpha) * rot.pow(*ps.kappa);
}

Interval glued_domain(ParamSet const &ps)
{
  return Interval{-ps.p + *ps.k - 1, ps.p + 2};
}

Permutation y_image(ParamSet const &ps)
{
  Interval dom = glued_domain(ps);
  std::int64_t p = ps.p, k = *ps.k;
  std::vector<Cycle> cycles;
  std::int64_t t = 0;
  if (ps.kind == GroupKind::Alt && ps.n % 2 == 0) {
    cycles.push_back({dom.lo, p + 2, dom.lo + 1, p + 1});
    t = 2;
  }
  for (; t <= p - k + 1; ++t)
    cycles.push_back({dom.lo + t, p + 2 - t});
  return Permutation::from_cycles(dom, cycles);
}

Permutation p3_point_image(Mat2p const &m)
{
  std::int64_t p = m.p;
  Permutation proj = projective_perm(m);
  auto relabel = [p](Point x) -> Point {
    if (x == 0)
      return p;
    if (x == p)
      return p + 1;
    return x;
  };
  Interval dom{1, p + 3};
  auto images = identity_images(dom);
  for (Point x = 0; x <= p; ++x)
    images[at(dom, relabel(x))] = relabel(proj.image(x));
  return Permutation::from_images(dom, images);
}

// -------------------------------------------------------------- glue words

GlueWords::GlueWords(ParamSet ps, bool simplified) : ps_(std::move(ps)), simplified_(simplified) {}

Word GlueWords::tidy(Word const &w) const
{
  return simplified_ ? simplify(w, {{"a", ps_.p}}) : w;
}

Word GlueWords::a_pow(std::int64_t e) const
{
  return A.pow(simplified_ ? least_abs(e, ps_.p) : e);
}

Word GlueWords::ax_pow(std::int64_t e) const
{
  return (A * sym("x")).pow(simplified_ ? least_abs(e, ps_.p - 1) : e);
}

Word GlueWords::z(std::int64_t i) const
{
  return Z.conj(a_pow(i));
}

Word GlueWords::z_inv(std::int64_t i) const
{
  return simplified_ ? Z.inverse().conj(a_pow(i)) : z(i).inverse();
}

Word GlueWords::d(std::int64_t i, std::int64_t j) const
{
  return z(i) * z_inv(j) * z(i);
}

Word GlueWords::c(std::int64_t i, std::int64_t j) const
{
  std::int64_t p = ps_.p;
  if (1 <= i && i <= j && j <= p - 1)
    return tidy(a_pow(-j) * ax_pow(j - i) * a_pow(i));
  if (j == p && 1 <= i && i <= p - 2)
    return tidy(Z.conj((Z * A).pow(-2)) * c(i, p - 2));
  if (j == p + 1 && 1 <= i && i <= p - 1)
    return tidy(Z.conj((Z * A).pow(-1)) * c(i, p - 1));
  if (j == p + 2 && 1 <= i && i <= p - 2)
    return tidy(Z * c(i, p));
  throw Error(ErrorKind::InvalidArgument,
              "c(" + std::to_string(i) + "," + std::to_string(j) + ") is undefined for p = " + std::to_string(p));
}

Word GlueWords::invert(Word const &w) const
{
  if (!simplified_)
    return w.inverse();
  switch (w.op()) {
  case Word::Op::Identity: return w;
  case Word::Op::Power: return w.base().pow(-w.exponent());
  case Word::Op::Product: {
    std::vector<Word> fs;
    for (auto it = w.factors().rbegin(); it != w.factors().rend(); ++it)
      fs.push_back(invert(*it));
    return Word::product(std::move(fs));
  }
  case Word::Op::Conjugate: return invert(w.base()).conj(w.by());
  default: return w.inverse();
  }
}

Word GlueWords::c_inv(std::int64_t i, std::int64_t j) const
{
  return tidy(invert(c(i, j)));
}

Word GlueWords::b2() const { return B.pow((ps_.p - 1) / 2); }

Word GlueWords::cbullet() const
{
  std::int64_t p = ps_.p;
  return tidy(c(1, (p - 1) / 2) * c_inv((p + 1) / 2, p - 1));
}

Word GlueWords::v() const { return (sym("cdot") * d(1, -1)).pow((ps_.p - 1) / 2); }

Word GlueWords::v_alt() const { return (d(1, -1) * sym("cdot")).pow((ps_.p - 1) / 2); }

Word GlueWords::v_original() const
{
  return (sym("cdot") * d(1, -1)).pow((ps_.p - 3) / 2) * sym("cdot");
}

// ---------------------------------------------------------------- builders

Presentation moore(std::int64_t n)
{
  if (n < 2)
    throw Error(ErrorKind::InvalidArgument, "Moore presentation needs n >= 2");
  std::vector<std::string> names;
  for (std::int64_t i = 1; i < n; ++i)
    names.push_back("x" + std::to_string(i));
  Slp slp(names);
  auto X = [&](std::int64_t i) { return sym(names[static_cast<std::size_t>(i - 1)]); };
  for (std::int64_t i = 1; i < n; ++i)
    slp.add_relator(X(i).pow(2));
  for (std::int64_t i = 2; i < n; ++i)
    slp.add_relator((X(i - 1) * X(i)).pow(3));
  for (std::int64_t j = 3; j < n; ++j)
    for (std::int64_t i = 1; i < j - 1; ++i)
      slp.add_relator((X(i) * X(j)).pow(2));

  Presentation pres;
  pres.id = "moore-" + std::to_string(n);
  pres.which = PresentationCase::Moore;
  pres.kind = GroupKind::Sym;
  pres.degree = n;
  pres.params.kind = GroupKind::Sym;
  pres.params.n = n;
  pres.domain = Interval{1, n};
  ImageMap<Permutation> images;
  for (std::int64_t i = 1; i < n; ++i)
    images.emplace(names[static_cast<std::size_t>(i - 1)], Permutation::from_cycles(pres.domain, {Cycle{i, i + 1}}));
  pres.slp = std::move(slp);
  pres.images = std::move(images);
  return pres;
}

Presentation carmichael(std::int64_t degree)
{
  std::int64_t n = degree - 2;
  if (n < 3)
    throw Error(ErrorKind::InvalidArgument, "Carmichael presentation needs degree >= 5");
  std::vector<std::string> names;
  for (std::int64_t i = 1; i <= n; ++i)
    names.push_back("x" + std::to_string(i));
  Slp slp(names);
  for (auto const &x : names)
    slp.add_relator(sym(x).pow(3));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      slp.add_relator((sym(names[i]) * sym(names[j])).pow(2));

  Presentation pres;
  pres.id = "carmichael-" + std::to_string(degree);
  pres.which = PresentationCase::Carmichael;
  pres.kind = GroupKind::Alt;
  pres.degree = degree;
  pres.params.n = degree;
  pres.domain = Interval{1, degree};
  ImageMap<Permutation> images;
  for (std::int64_t i = 1; i <= n; ++i)
    images.emplace(names[static_cast<std::size_t>(i - 1)], three_cycle(pres.domain, i, n + 1, n + 2));
  pres.slp = std::move(slp);
  pres.images = std::move(images);
  return pres;
}

Presentation agl_example(std::int64_t p, AglVariant variant, bool with_extra_relator)
{
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::BadPrimeClass, std::to_string(p) + " is not an odd prime");
  if (variant == AglVariant::AltAGL2 && (p % 4 != 3 || p == 3))
    throw Error(ErrorKind::BadPrimeClass, std::to_string(p) + " is not a prime = 3 mod 4 above 3");

  bool squares = variant == AglVariant::AltAGL2;
  std::int64_t r = group_unit_generator(p, squares);
  std::int64_t order_b = squares ? (p - 1) / 2 : p - 1;
  std::int64_t s = mod(-inverse_mod(r - 1, p), p);

  Slp slp({"a", "b", "z"});
  slp.add_relator(A.pow(p) * B.pow(-order_b));
  slp.add_relator(affine_relator(s, p));
  slp.add_relator(Z.pow(3));
  slp.add_relator((Z * Z.conj(A)).pow(2));
  switch (variant) {
  case AglVariant::AltAGL: slp.add_relator(Z.conj(B) * Z); break;
  case AglVariant::AltAGL2: slp.add_relator(Z.conj(B) * Z.inverse()); break;
  case AglVariant::SymAGL: slp.add_relator(Word::commutator(Z, B)); break;
  }
  if (with_extra_relator) {
    std::int64_t half = (p + 1) / 2;
    switch (variant) {
    case AglVariant::AltAGL: slp.add_relator((B.conj(A) * Z).pow(p)); break;
    case AglVariant::AltAGL2: slp.add_relator((B * Z.conj(A) * Z.conj(A.inverse())).pow(half)); break;
    case AglVariant::SymAGL: slp.add_relator((B.pow(2) * Z.conj(A) * Z.conj(A.pow(r))).pow(half)); break;
    }
  }

  Presentation pres;
  pres.id = to_string(variant) + (with_extra_relator ? "-" : "-hat-") + std::to_string(p);
  pres.which = with_extra_relator ? PresentationCase::Agl : PresentationCase::AglHat;
  pres.kind = variant == AglVariant::SymAGL ? GroupKind::Sym : GroupKind::Alt;
  pres.degree = p + 2;
  pres.params.kind = pres.kind;
  pres.params.n = p + 2;
  pres.params.p = p;
  pres.params.r = r;
  pres.params.s = s;
  pres.params.kappa = order_b;
  pres.domain = Interval{1, p + 2};

  Interval small{1, p};
  Permutation a_big = interval_cycle(pres.domain, 1, p);
  Permutation b_big = scalar_perm(pres.domain, p, r);
  if (variant == AglVariant::AltAGL)
    b_big = b_big * Permutation::from_cycles(pres.domain, {Cycle{p + 1, p + 2}});
  Permutation z_big = three_cycle(pres.domain, p, p + 1, p + 2);
  if (with_extra_relator) {
    pres.images = ImageMap<Permutation>{{"a", a_big}, {"b", b_big}, {"z", z_big}};
  } else {
    pres.images = ImageMap<PermPair>{
      {"a", PermPair{a_big, interval_cycle(small, 1, p)}},
      {"b", PermPair{b_big, scalar_perm(small, p, r)}},
      {"z", PermPair{z_big, Permutation::identity(small)}},
    };
  }
  pres.slp = std::move(slp);
  return pres;
}

namespace {

Presentation base_p2_impl(std::int64_t p, GroupKind kind, BuildOptions const &opts, bool hat)
{
  ParamSet ps = opts.params ? checked_override(*opts.params) : derive_base_params(p, kind);
  if (ps.p != p || ps.kind != kind || ps.k)
    throw Error(ErrorKind::InvalidArgument, "parameter override does not describe this base case");
  ps.n = p + 2;
  GlueWords w(ps, opts.simplified);

  Slp slp({"a", "g"});
  slp.define("b", G.pow(3));
  slp.define("z", G.pow(*ps.kappa));
  slp.define("h", table_h(ps, false, w));
  slp.add_relator(A.pow(p) * B.pow(-*ps.kappa));
  slp.add_relator(affine_relator(*ps.s, p));
  slp.add_relator((Z * Z.conj(A)).pow(2));
  if (!hat)
    slp.add_relator(sym("h"));

  Presentation pres;
  pres.id = std::string(hat ? "base-p2-hat-" : "base-p2-") + to_string(kind) + "-" + std::to_string(p);
  pres.which = hat ? PresentationCase::BaseP2Hat : PresentationCase::BaseP2;
  pres.kind = kind;
  pres.degree = p + 2;
  pres.params = ps;
  pres.domain = Interval{1, p + 2};
  if (want_images(opts, pres.degree)) {
    Permutation a_img = interval_cycle(pres.domain, 1, p);
    Permutation g_img = base_g_image(pres.domain, ps);
    if (hat) {
      Interval small{1, p};
      pres.images = ImageMap<PermPair>{
        {"a", PermPair{a_img, interval_cycle(small, 1, p)}},
        {"g", PermPair{g_img, scalar_perm(small, p, *ps.alpha)}},
      };
    } else {
      pres.images = ImageMap<Permutation>{{"a", a_img}, {"g", g_img}};
    }
  }
  pres.slp = std::move(slp);
  return pres;
}

Presentation alt_p3_impl(std::int64_t p, BuildOptions const &opts, bool hat)
{
  ParamSet ps = opts.params ? checked_override(*opts.params) : derive_p3_params(p);
  if (ps.p != p || !ps.j)
    throw Error(ErrorKind::InvalidArgument, "parameter override does not describe the p+3 case");
  ps.n = p + 3;
  std::int64_t j = *ps.j, jbar = *ps.jbar, k_sl = *ps.k_sl;

  Word X = sym("x");
  Slp slp({"x", "y", "z"});
  slp.define("h", Y.pow(jbar) * Y.pow(j).conj(X) * Y.pow(jbar) * X.pow(k_sl % 2 == 0 ? 1 : -1));
  slp.add_relator(X.pow(2) * (X * Y).pow(-3));
  slp.add_relator((X * Y.pow(4) * X * Y.pow((p + 1) / 2)).pow(2) * Y.pow(p) * X.pow(2 * (p / 3)));
  slp.add_relator(Z.pow(3));
  slp.add_relator((Z * Z.conj(X)).pow(2));
  slp.add_relator(Word::commutator(Y, Z));
  slp.add_relator(Word::commutator(sym("h"), Z));
  if (!hat)
    slp.add_relator((sym("h") * Z.conj(X * Y) * Z.conj(X * Y.pow(j))).pow((p + 1) / 2));

  Presentation pres;
  pres.id = std::string(hat ? "p3-hat-alt-" : "p3-alt-") + std::to_string(p);
  pres.which = hat ? PresentationCase::P3Hat : PresentationCase::P3;
  pres.kind = GroupKind::Alt;
  pres.degree = p + 3;
  pres.params = ps;
  pres.domain = Interval{1, p + 3};
  if (want_images(opts, pres.degree)) {
    auto [t, u] = gens_tu(p);
    Permutation x_img = p3_point_image(t);
    Permutation y_img = p3_point_image(u);
    Permutation z_img = three_cycle(pres.domain, p + 1, p + 2, p + 3);
    if (hat) {
      pres.images = ImageMap<PermMat>{
        {"x", PermMat{x_img, t}},
        {"y", PermMat{y_img, u}},
        {"z", PermMat{z_img, Mat2p::identity(p)}},
      };
    } else {
      pres.images = ImageMap<Permutation>{{"x", x_img}, {"y", y_img}, {"z", z_img}};
    }
  }
  pres.slp = std::move(slp);
  return pres;
}

} // namespace

Presentation base_p2(std::int64_t p, GroupKind kind, BuildOptions const &opts)
{
  return base_p2_impl(p, kind, opts, false);
}

Presentation base_p2_hat(std::int64_t p, GroupKind kind, BuildOptions const &opts)
{
  return base_p2_impl(p, kind, opts, true);
}

Presentation alt_p3(std::int64_t p, BuildOptions const &opts) { return alt_p3_impl(p, opts, false); }

Presentation alt_p3_hat(std::int64_t p, BuildOptions const &opts) { return alt_p3_impl(p, opts, true); }

Presentation glued(std::int64_t n, GroupKind kind, BuildOptions const &opts)
{
  ParamSet ps = opts.params ? checked_override(*opts.params) : derive_glued_params(n, kind);
  if (ps.n != n || ps.kind != kind || !ps.k)
    throw Error(ErrorKind::InvalidArgument, "parameter override does not describe this glued case");

  std::int64_t p = ps.p, k = *ps.k;
  bool sym_case = kind == GroupKind::Sym;
  bool odd = n % 2 != 0;
  GlueWords w(ps, opts.simplified);

  Slp slp({"a", "g", "y"});
  slp.define("b", G.pow(3));
  slp.define("z", G.pow(*ps.kappa));
  slp.define("h", table_h(ps, true, w));
  slp.define("x", w.d(0, 1));
  slp.define("atil", w.z(3).conj(w.z(2) * w.z(1)));

  Word T = sym("t");
  if (sym_case) {
    slp.define("cdot", w.cbullet());
    slp.define("v", w.v());
    slp.define("t", sym("v") * w.b2());
  }

  if (sym_case)
    slp.define("c", (odd ? w.c(2, k) : w.c(1, k)) * T);
  else
    slp.define("c", odd ? w.c(1, k) : w.c(2, k));
  slp.define("d", w.c(5, p + 2));
  if (sym_case)
    slp.define("e", Z * A * T * (odd ? w.c_inv(3, k + 1) : w.c_inv(2, k + 1)));
  else
    slp.define("e", w.tidy(Z * A * (odd ? w.c_inv(2, k + 1) : w.c_inv(3, k + 1))));

  Word ZA = Z * A;
  Word word_w;
  if (sym_case && k == p + 1) {
    word_w = T.conj(Y * Z);
  } else if (k == p) {
    word_w = Z.conj(Y * Z.inverse()) * Z.conj(Y * Z);
  } else if (sym_case && k == p - 1) {
    Word aya = A * Y * A.inverse();
    word_w = Z.conj(aya * Z.inverse()) * Z.conj(aya * Z) * (w.d(1, p) * T).conj(Y * A.inverse());
  } else if (!sym_case && !odd && k == p - 1) {
    // The x~/u tail would be (x~ u^-2)^-1 x~ u^-2, which is freely trivial.
    word_w = w.d(1, -1).conj(ZA * Y * A.inverse() * Z.pow(-2) * A.inverse()) *
             w.z_inv(1).conj(Y * A.inverse() * Z.inverse());
  } else {
    slp.define("ytil", w.d(1, k + 2) * w.d(2, k + 1));
    slp.define("ztil", sym("ytil").conj(Y));
    slp.define("xtil", sym("ytil").conj(sym("ztil")));
    slp.define("u", ZA * ZA.conj(Y));
    Word X = sym("xtil"), U = sym("u");
    auto tail = [&](std::int64_t m) { return (X * U.pow(-2)).pow(m / 2) * X * U.pow(m); };
    if (odd)
      word_w = tail(p - k);
    else if (sym_case)
      word_w = T.conj(ZA * Y * w.invert(ZA)) * tail(p - k - 1);
    else
      word_w = w.d(1, -1).conj(ZA * Y * A.inverse() * Z.pow(-2) * A.inverse()) *
               w.z_inv(1).conj(Y * A.inverse() * Z.inverse()) * tail(p - k - 3);
  }
  slp.define("w", word_w);

  slp.add_relator(A.pow(p) * B.pow(-*ps.kappa));
  slp.add_relator(affine_relator(*ps.s, p));
  slp.add_relator((Z * Z.conj(A)).pow(2));
  slp.add_relator(sym("atil") * (sym("atil") * sym("h")).conj(Y).inverse());
  slp.add_relator(sym("c") * sym("c").conj(Y).inverse());
  slp.add_relator(Word::commutator(sym("d"), sym("e").conj(Y)));
  slp.add_relator(Y * sym("w").inverse());

  Presentation pres;
  pres.id = "glued-" + to_string(kind) + "-" + std::to_string(n);
  pres.which = PresentationCase::Glued;
  pres.kind = kind;
  pres.degree = n;
  pres.params = ps;
  pres.domain = glued_domain(ps);
  if (want_images(opts, n)) {
    pres.images = ImageMap<Permutation>{
      {"a", interval_cycle(pres.domain, 1, p)},
      {"g", base_g_image(pres.domain, ps)},
      {"y", y_image(ps)},
    };
  }
  pres.slp = std::move(slp);
  return pres;
}

Presentation presentation_for(std::int64_t n, GroupKind kind, BuildOptions const &opts)
{
  if (n == 13 || n == 25 || n == 49)
    return base_p2(n - 2, kind, opts);
  if (kind == GroupKind::Alt && (n == 14 || n == 26 || n == 50))
    return alt_p3(n - 3, opts);
  return glued(n, kind, opts);
}

Presentation cycle_toolkit(ParamSet const &ps, bool simplified)
{
  std::int64_t p = ps.p;
  GlueWords w(ps, simplified);
  Slp slp({"a", "g"});
  slp.define("b", G.pow(3));
  slp.define("z", G.pow(*ps.kappa));
  slp.define("x", w.d(0, 1));
  bool chain = ps.kind == GroupKind::Sym && p % 4 == 3;
  if (chain) {
    slp.define("cdot", w.cbullet());
    slp.define("v", w.v());
    slp.define("t", sym("v") * w.b2());
  }

  Presentation pres;
  pres.id = "toolkit-" + to_string(ps.kind) + "-" + std::to_string(p);
  pres.which = PresentationCase::BaseP2;
  pres.kind = ps.kind;
  pres.degree = p + 2;
  pres.params = ps;
  pres.domain = Interval{1, p + 2};
  pres.images = ImageMap<Permutation>{
    {"a", interval_cycle(pres.domain, 1, p)},
    {"g", base_g_image(pres.domain, ps)},
  };
  pres.slp = std::move(slp);
  return pres;
}

} // namespace shortpres
