// shortpres: emit and check short presentations of alternating and symmetric groups.

#include <cmath>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "shortpres/builders.hpp"
#include "shortpres/error.hpp"
#include "shortpres/verify.hpp"

using namespace shortpres;

namespace {

enum Exit { Ok = 0, VerificationFailed = 1, Unsupported = 2, BadArguments = 3 };

constexpr char const *kCoverage =
  "covered degrees: Alt 13-20, 25-44, >= 49; Sym 13-20, 25-44, >= 49 (21-24 and 45-48 are not covered)";

/// Emitted JSON carries explicit images only up to this degree.
constexpr std::int64_t kMaxJsonImageDegree = 100'000;

struct Config {
  std::string degrees;
  std::string kind = "alt";
  std::string format = "slp";
  std::string depth = "relators";
  std::string out;
  bool simplify = true;
  unsigned jobs = 1;
};

std::vector<std::int64_t> parse_degrees(std::string const &text)
{
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto dots = part.find("..");
    try {
      if (dots == std::string::npos) {
        out.push_back(std::stoll(part));
      } else {
        std::int64_t lo = std::stoll(part.substr(0, dots)), hi = std::stoll(part.substr(dots + 2));
        if (hi < lo)
          throw Error(ErrorKind::InvalidArgument, "empty degree range '" + part + "'");
        for (std::int64_t n = lo; n <= hi; ++n)
          out.push_back(n);
      }
    } catch (std::logic_error const &) {
      throw Error(ErrorKind::InvalidArgument, "bad degree '" + part + "'");
    }
  }
  if (out.empty())
    throw Error(ErrorKind::InvalidArgument, "no degrees given");
  return out;
}

std::vector<GroupKind> parse_kinds(std::string const &text)
{
  if (text == "both")
    return {GroupKind::Alt, GroupKind::Sym};
  return {parse_group_kind(text)};
}

class Output {
public:
  explicit Output(std::string const &path)
  {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw Error(ErrorKind::InvalidArgument, "cannot open '" + path + "' for writing");
    }
  }
  std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }

private:
  std::ofstream file_;
};

nlohmann::json images_json(Presentation const &pres)
{
  if (!pres.images)
    return nullptr;
  nlohmann::json j = nlohmann::json::object();
  for (auto const &[name, g] : std::get<ImageMap<Permutation>>(*pres.images))
    j[name] = g.to_string();
  return j;
}

void write_presentation(std::ostream &os, Presentation const &pres, std::string const &format)
{
  if (format == "slp") {
    os << "# " << pres.id << " (" << to_string(pres.which) << ", degree " << pres.degree << ")\n";
    os << to_text(pres.slp);
  } else if (format == "flat") {
    os << "# " << pres.id << "\n";
    os << "generators: ";
    for (std::size_t i = 0; i < pres.slp.generators().size(); ++i)
      os << (i ? ", " : "") << pres.slp.generators()[i];
    os << "\n";
    for (auto const &r : pres.slp.relators())
      os << to_flat(inline_definitions(r, pres.slp)) << "\n";
  } else {
    nlohmann::json j{
      {"id", pres.id},
      {"case", to_string(pres.which)},
      {"degree", pres.degree},
      {"params", to_json(pres.params)},
      {"slp", to_json(pres.slp)},
      {"domain", {pres.domain.lo, pres.domain.hi}},
      {"images", images_json(pres)},
    };
    os << j.dump(2) << "\n";
  }
}

int cmd_emit(Config const &cfg)
{
  if (cfg.format != "slp" && cfg.format != "flat" && cfg.format != "json")
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + cfg.format + "'");
  Output out(cfg.out);
  for (auto n : parse_degrees(cfg.degrees)) {
    for (auto kind : parse_kinds(cfg.kind)) {
      BuildOptions opts;
      opts.simplified = cfg.simplify;
      opts.images = cfg.format == "json" && n <= kMaxJsonImageDegree;
      write_presentation(out.stream(), presentation_for(n, kind, opts), cfg.format);
    }
  }
  return Ok;
}

struct Job {
  std::int64_t n;
  GroupKind kind;
};

int cmd_verify(Config const &cfg)
{
  bool order = cfg.depth == "order";
  if (!order && cfg.depth != "relators")
    throw Error(ErrorKind::InvalidArgument, "unknown depth '" + cfg.depth + "'");
  auto degrees = parse_degrees(cfg.degrees);
  if (order && *std::max_element(degrees.begin(), degrees.end()) > kMaxCertifyDegree)
    throw Error(ErrorKind::InvalidArgument,
                "order verification needs every degree <= " + std::to_string(kMaxCertifyDegree));

  std::vector<Job> jobs;
  for (auto n : degrees)
    for (auto kind : parse_kinds(cfg.kind))
      jobs.push_back({n, kind});

  std::vector<nlohmann::json> results(jobs.size());
  std::vector<int> status(jobs.size(), Ok);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      auto [n, kind] = jobs[i];
      try {
        auto pres = presentation_for(n, kind, {.simplified = cfg.simplify});
        auto rep = verify_presentation(pres, order);
        results[i] = to_json(rep);
        if (!rep.all_identity() || (order && !rep.order_certified))
          status[i] = VerificationFailed;
      } catch (Error const &e) {
        results[i] = {{"degree", n}, {"kind", to_string(kind)}, {"error", e.what()}};
        status[i] = e.kind() == ErrorKind::UnsupportedDegree ? Unsupported : VerificationFailed;
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto &t : pool)
    t.join();

  Output out(cfg.out);
  for (auto const &r : results)
    out.stream() << r.dump() << "\n";
  if (std::count(status.begin(), status.end(), VerificationFailed))
    return VerificationFailed;
  if (std::count(status.begin(), status.end(), Unsupported) == static_cast<std::ptrdiff_t>(status.size()))
    return Unsupported;
  return Ok;
}

int cmd_stats(Config const &cfg)
{
  Output out(cfg.out);
  auto &os = out.stream();
  os << "degree,kind,p,k,case,generators,relators,bit_length,word_length,bit_length/log2(degree)\n";
  bool any = false;
  for (auto n : parse_degrees(cfg.degrees)) {
    for (auto kind : parse_kinds(cfg.kind)) {
      Presentation pres;
      try {
        pres = presentation_for(n, kind, {.simplified = cfg.simplify, .images = false});
      } catch (Error const &e) {
        if (e.kind() != ErrorKind::UnsupportedDegree)
          throw;
        os << n << "," << to_string(kind) << ",,,unsupported,,,,,\n";
        continue;
      }
      any = true;
      auto bits = bit_length(pres.slp);
      std::ostringstream ratio;
      ratio.precision(6);
      ratio << static_cast<double>(bits) / std::log2(static_cast<double>(n));
      os << n << "," << to_string(kind) << "," << pres.params.p << ","
         << (pres.params.k ? std::to_string(*pres.params.k) : "") << "," << to_string(pres.which) << ","
         << pres.slp.generators().size() << "," << pres.slp.relators().size() << "," << bits << ","
         << word_length(pres.slp).str() << "," << ratio.str() << "\n";
    }
  }
  return any ? Ok : Unsupported;
}

std::string type_string(std::vector<std::size_t> const &t)
{
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i)
    s += (i ? "," : "") + std::to_string(t[i]);
  return s + "}";
}

int cmd_falsify(Config const &cfg)
{
  auto degrees = parse_degrees(cfg.degrees);
  if (degrees.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "falsify takes a single prime");
  std::int64_t p = degrees.front();
  if (p <= 3 || !is_prime(static_cast<std::uint64_t>(p)))
    throw Error(ErrorKind::BadPrimeClass, std::to_string(p) + " is not a prime > 3");
  Output out(cfg.out);
  auto &os = out.stream();

  auto rel = falsify_original(Falsification::P3Relator, p);
  os << "original p+3 relator at p = " << p << ": " << (rel.original_fails ? "NOT identity" : "identity")
     << "; relator cycle type " << type_string(rel.relator_cycle_type) << ", base element cycle type "
     << type_string(rel.element_cycle_type) << " (claimed {" << (p - 1) / 2 << "," << (p + 3) / 2 << "})\n";
  auto honly = falsify_original(Falsification::P3RelatorHOnly, p);
  os << "corrected h with the original conjugation order: " << (honly.original_fails ? "NOT identity" : "identity")
     << ", cycle type " << type_string(honly.relator_cycle_type) << "\n";
  auto sl2 = falsify_original(Falsification::SL2Generators, p);
  os << "unsigned generators (t', u'): " << (sl2.original_fails ? "fail" : "satisfy")
     << " the Campbell-Robertson relators; " << sl2.witness << "\n";

  if (p % 12 == 11 && p <= 100) {
    auto [t, u] = gens_tu(p);
    auto params = derive_p3_params(p);
    auto v = element_v(p, *params.j, *params.jbar, true);
    auto v1 = element_v(p, *params.j, *params.jbar, false);
    os << "subgroup orders: |<u, v>| = " << subgroup_order(p, {u, v}) << ", |<u, v'>| = " << subgroup_order(p, {u, v1})
       << "\n";
  } else {
    os << "subgroup demo skipped (needs p = 11 mod 12 and p <= 100)\n";
  }

  if (p % 12 == 11) {
    auto tw = falsify_original(Falsification::TranspositionWord, p);
    os << "original transposition chain times b2 evaluates to " << tw.witness << " (claimed (" << p + 1 << ","
       << p + 2 << "))\n";
  } else {
    os << "transposition demo skipped (needs p = 11 mod 12)\n";
  }
  return Ok;
}

int cmd_params(Config const &cfg)
{
  Output out(cfg.out);
  for (auto n : parse_degrees(cfg.degrees)) {
    for (auto kind : parse_kinds(cfg.kind)) {
      auto pres = presentation_for(n, kind, {.images = false});
      nlohmann::json j = to_json(pres.params);
      j["case"] = to_string(pres.which);
      out.stream() << j.dump() << "\n";
    }
  }
  return Ok;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Short presentations of alternating and symmetric groups"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App *sub, bool with_kind) {
    sub->add_option("degrees", cfg.degrees, "degree, range lo..hi, or comma list")->required();
    if (with_kind)
      sub->add_option("--kind", cfg.kind, "alt, sym or both")->check(CLI::IsMember({"alt", "sym", "both"}));
    sub->add_option("--out", cfg.out, "write to this file instead of stdout");
  };

  auto *emit = app.add_subcommand("emit", "print presentations");
  add_common(emit, true);
  emit->add_option("kind_pos", cfg.kind, "alt, sym or both")->check(CLI::IsMember({"alt", "sym", "both"}));
  emit->add_option("--format", cfg.format, "slp, flat or json")->check(CLI::IsMember({"slp", "flat", "json"}));
  emit->add_flag("--simplify,!--no-simplify", cfg.simplify, "reduce exponents (default on)");

  auto *verify = app.add_subcommand("verify", "evaluate relators and optionally certify orders");
  add_common(verify, true);
  verify->add_option("kind_pos", cfg.kind, "alt, sym or both")->check(CLI::IsMember({"alt", "sym", "both"}));
  verify->add_option("--depth", cfg.depth, "relators or order")->check(CLI::IsMember({"relators", "order"}));
  verify->add_flag("--simplify,!--no-simplify", cfg.simplify, "reduce exponents (default on)");
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));

  auto *stats = app.add_subcommand("stats", "CSV of sizes and bit-lengths");
  add_common(stats, true);
  stats->add_option("kind_pos", cfg.kind, "alt, sym or both")->check(CLI::IsMember({"alt", "sym", "both"}));
  stats->add_flag("--simplify,!--no-simplify", cfg.simplify, "reduce exponents (default on)");

  auto *falsify = app.add_subcommand("falsify", "show why the original constructions fail");
  add_common(falsify, false);

  auto *params = app.add_subcommand("params", "print the parameters used for a degree");
  add_common(params, true);
  params->add_option("kind_pos", cfg.kind, "alt, sym or both")->check(CLI::IsMember({"alt", "sym", "both"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return BadArguments;
  }

  try {
    if (*emit)
      return cmd_emit(cfg);
    if (*verify)
      return cmd_verify(cfg);
    if (*stats)
      return cmd_stats(cfg);
    if (*falsify)
      return cmd_falsify(cfg);
    return cmd_params(cfg);
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.kind() == ErrorKind::UnsupportedDegree) {
      std::cerr << kCoverage << "\n";
      return Unsupported;
    }
    if (e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::BadPrimeClass ||
        e.kind() == ErrorKind::ParseError)
      return BadArguments;
    return VerificationFailed;
  }
}
