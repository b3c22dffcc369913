#include "shortpres/words.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace shortpres {

struct Word::Node {
  Op op = Op::Identity;
  std::string name;
  std::int64_t exponent = 0;
  // Product: factors; Power: {base}; Conjugate: {base, by}; Commutator: {left, right}
  std::vector<Word> children;
};

namespace {

std::shared_ptr<const Word::Node> make_node(Word::Op op, std::string name, std::int64_t e, std::vector<Word> children)
{
  auto n = std::make_shared<Word::Node>();
  n->op = op;
  n->name = std::move(name);
  n->exponent = e;
  n->children = std::move(children);
  return n;
}

bool valid_identifier(std::string_view s)
{
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

} // namespace

Word::Word()
{
  static auto const identity_node = make_node(Op::Identity, {}, 0, {});
  node_ = identity_node;
}

Word::Word(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Word Word::symbol(std::string name)
{
  if (!valid_identifier(name))
    throw Error(ErrorKind::InvalidArgument, "invalid symbol name '" + name + "'");
  return Word(make_node(Op::Symbol, std::move(name), 0, {}));
}

Word Word::product(std::vector<Word> factors)
{
  std::vector<Word> flat;
  for (auto &f : factors) {
    if (f.op() == Op::Identity)
      continue;
    if (f.op() == Op::Product) {
      for (auto const &g : f.factors())
        flat.push_back(g);
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty())
    return Word();
  if (flat.size() == 1)
    return flat.front();
  return Word(make_node(Op::Product, {}, 0, std::move(flat)));
}

Word Word::commutator(Word const &x, Word const &y)
{
  return Word(make_node(Op::Commutator, {}, 0, {x, y}));
}

Word Word::operator*(Word const &rhs) const
{
  return product({*this, rhs});
}

Word Word::pow(std::int64_t e) const
{
  if (e == 0 || is_identity())
    return Word();
  if (e == 1)
    return *this;
  if (op() == Op::Power)
    return base().pow(exponent() * e);
  return Word(make_node(Op::Power, {}, e, {*this}));
}

Word Word::conj(Word const &by) const
{
  if (by.is_identity() || is_identity())
    return *this;
  return Word(make_node(Op::Conjugate, {}, 0, {*this, by}));
}

Word::Op Word::op() const { return node_->op; }
std::string const &Word::name() const { return node_->name; }
std::vector<Word> const &Word::factors() const { return node_->children; }
std::int64_t Word::exponent() const { return node_->exponent; }
Word const &Word::base() const { return node_->children.at(0); }
Word const &Word::by() const { return node_->children.at(1); }
Word const &Word::left() const { return node_->children.at(0); }
Word const &Word::right() const { return node_->children.at(1); }

bool Word::operator==(Word const &other) const
{
  if (node_ == other.node_)
    return true;
  return node_->op == other.node_->op && node_->name == other.node_->name &&
         node_->exponent == other.node_->exponent && node_->children == other.node_->children;
}

// -------------------------------------------------------------------- Slp

Slp::Slp(std::vector<std::string> generators) : generators_(std::move(generators))
{
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (!valid_identifier(generators_[i]))
      throw Error(ErrorKind::InvalidArgument, "invalid generator name '" + generators_[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (generators_[i] == generators_[j])
        throw Error(ErrorKind::InvalidArgument, "duplicate generator '" + generators_[i] + "'");
    }
  }
}

bool Slp::is_generator(std::string_view name) const
{
  return std::find(generators_.begin(), generators_.end(), name) != generators_.end();
}

std::optional<std::size_t> Slp::definition_index(std::string_view name) const
{
  for (std::size_t i = 0; i < definitions_.size(); ++i) {
    if (definitions_[i].first == name)
      return i;
  }
  return std::nullopt;
}

Word const &Slp::definition(std::string_view name) const
{
  auto idx = definition_index(name);
  if (!idx)
    throw Error(ErrorKind::UnboundSymbol, "'" + std::string(name) + "' is not defined");
  return definitions_[*idx].second;
}

void Slp::check_resolvable(Word const &w) const
{
  switch (w.op()) {
  case Word::Op::Identity: return;
  case Word::Op::Symbol:
    if (!is_generator(w.name()) && !definition_index(w.name()))
      throw Error(ErrorKind::UnboundSymbol, "'" + w.name() + "'");
    return;
  default:
    for (auto const &c : w.factors())
      check_resolvable(c);
  }
}

void Slp::define(std::string name, Word word)
{
  if (!valid_identifier(name))
    throw Error(ErrorKind::InvalidArgument, "invalid definition name '" + name + "'");
  if (is_generator(name) || definition_index(name))
    throw Error(ErrorKind::InvalidArgument, "'" + name + "' is already bound");
  check_resolvable(word);
  definitions_.emplace_back(std::move(name), std::move(word));
}

void Slp::add_relator(Word word)
{
  check_resolvable(word);
  relators_.push_back(std::move(word));
}

Slp Slp::without_relator(std::size_t index) const
{
  Slp out = *this;
  out.relators_.erase(out.relators_.begin() + static_cast<std::ptrdiff_t>(index));
  return out;
}

// ---------------------------------------------------------------- metrics

int exponent_bits(std::int64_t e)
{
  auto a = static_cast<std::uint64_t>(e < 0 ? -e : e);
  int bits = 0;
  while (a) {
    ++bits;
    a >>= 1;
  }
  return bits;
}

namespace {

std::int64_t factor_cost(Word const &w);

std::int64_t base_cost(Word const &w)
{
  switch (w.op()) {
  case Word::Op::Identity: return 0;
  case Word::Op::Symbol: return 1;
  case Word::Op::Product: {
    std::int64_t total = 0;
    for (auto const &f : w.factors())
      total += factor_cost(f);
    return total;
  }
  case Word::Op::Power: return factor_cost(w);
  case Word::Op::Conjugate: return factor_cost(w.base()) + factor_cost(w.by()) + 2;
  case Word::Op::Commutator: return 2 * (factor_cost(w.left()) + factor_cost(w.right())) + 4;
  }
  return 0;
}

std::int64_t factor_cost(Word const &w)
{
  if (w.op() == Word::Op::Identity)
    return 0;
  if (w.op() == Word::Op::Power)
    return base_cost(w.base()) + exponent_bits(w.exponent()) + (w.exponent() < 0 ? 1 : 0);
  return base_cost(w) + 1;
}

} // namespace

std::int64_t bit_length(Word const &w)
{
  return w.op() == Word::Op::Product ? base_cost(w) : factor_cost(w);
}

std::int64_t bit_length(Slp const &slp)
{
  auto total = static_cast<std::int64_t>(slp.generators().size());
  for (auto const &[_, word] : slp.definitions())
    total += bit_length(word);
  for (auto const &r : slp.relators())
    total += bit_length(r);
  return total;
}

namespace {

class LengthCounter {
public:
  explicit LengthCounter(Slp const *ctx) : ctx_(ctx) {}

  BigInt operator()(Word const &w)
  {
    switch (w.op()) {
    case Word::Op::Identity: return 0;
    case Word::Op::Symbol: {
      if (!ctx_ || ctx_->is_generator(w.name()))
        return 1;
      auto it = memo_.find(w.name());
      if (it != memo_.end())
        return it->second;
      BigInt len = (*this)(ctx_->definition(w.name()));
      memo_.emplace(w.name(), len);
      return len;
    }
    case Word::Op::Product: {
      BigInt total = 0;
      for (auto const &f : w.factors())
        total += (*this)(f);
      return total;
    }
    case Word::Op::Power: {
      std::int64_t e = w.exponent();
      return (*this)(w.base()) * BigInt(e < 0 ? -e : e);
    }
    case Word::Op::Conjugate: return (*this)(w.base()) + 2 * (*this)(w.by());
    case Word::Op::Commutator: return 2 * ((*this)(w.left()) + (*this)(w.right()));
    }
    return 0;
  }

private:
  Slp const *ctx_;
  std::map<std::string, BigInt> memo_;
};

} // namespace

BigInt word_length(Word const &w, Slp const *context)
{
  return LengthCounter(context)(w);
}

BigInt word_length(Slp const &slp)
{
  LengthCounter count(&slp);
  BigInt total = 0;
  for (auto const &r : slp.relators())
    total += count(r);
  return total;
}

namespace {

std::int64_t least_abs_residue(std::int64_t e, std::int64_t order)
{
  std::int64_t r = e % order;
  if (r < 0)
    r += order;
  if (2 * r > order)
    r -= order;
  return r;
}

// Symbol name and exponent when w is s or s^e.
std::optional<std::pair<std::string, std::int64_t>> symbol_power(Word const &w)
{
  if (w.op() == Word::Op::Symbol)
    return std::make_pair(w.name(), std::int64_t{1});
  if (w.op() == Word::Op::Power && w.base().op() == Word::Op::Symbol)
    return std::make_pair(w.base().name(), w.exponent());
  return std::nullopt;
}

Word reduced_power(std::string const &name, std::int64_t e, std::map<std::string, std::int64_t> const &orders)
{
  auto it = orders.find(name);
  if (it != orders.end() && it->second > 0)
    e = least_abs_residue(e, it->second);
  return sym(name).pow(e);
}

} // namespace

Word simplify(Word const &w, std::map<std::string, std::int64_t> const &orders)
{
  switch (w.op()) {
  case Word::Op::Identity:
  case Word::Op::Symbol: return w;
  case Word::Op::Power: {
    Word base = simplify(w.base(), orders);
    if (base.op() == Word::Op::Symbol)
      return reduced_power(base.name(), w.exponent(), orders);
    return base.pow(w.exponent());
  }
  case Word::Op::Product: {
    std::vector<Word> out;
    for (auto const &f : w.factors()) {
      Word s = simplify(f, orders);
      if (s.is_identity())
        continue;
      auto cur = symbol_power(s);
      while (cur && !out.empty()) {
        auto prev = symbol_power(out.back());
        if (!prev || prev->first != cur->first)
          break;
        out.pop_back();
        s = reduced_power(cur->first, prev->second + cur->second, orders);
        cur = s.is_identity() ? std::nullopt : symbol_power(s);
      }
      if (!s.is_identity())
        out.push_back(s);
    }
    return Word::product(std::move(out));
  }
  case Word::Op::Conjugate: return simplify(w.base(), orders).conj(simplify(w.by(), orders));
  case Word::Op::Commutator: return Word::commutator(simplify(w.left(), orders), simplify(w.right(), orders));
  }
  return w;
}

Word inline_definitions(Word const &w, Slp const &slp)
{
  std::map<std::string, Word> memo;
  std::function<Word(Word const &)> go = [&](Word const &x) -> Word {
    switch (x.op()) {
    case Word::Op::Identity: return x;
    case Word::Op::Symbol: {
      if (slp.is_generator(x.name()))
        return x;
      auto it = memo.find(x.name());
      if (it != memo.end())
        return it->second;
      Word expanded = go(slp.definition(x.name()));
      memo.emplace(x.name(), expanded);
      return expanded;
    }
    case Word::Op::Product: {
      std::vector<Word> fs;
      for (auto const &f : x.factors())
        fs.push_back(go(f));
      return Word::product(std::move(fs));
    }
    case Word::Op::Power: return go(x.base()).pow(x.exponent());
    case Word::Op::Conjugate: return go(x.base()).conj(go(x.by()));
    case Word::Op::Commutator: return Word::commutator(go(x.left()), go(x.right()));
    }
    return x;
  };
  return go(w);
}

namespace {

class FreeReducer {
public:
  FreeReducer(Slp const &slp, std::size_t limit) : slp_(slp), limit_(limit) {}

  std::vector<Letter> expand(Word const &w)
  {
    std::vector<Letter> out;
    switch (w.op()) {
    case Word::Op::Identity: break;
    case Word::Op::Symbol: {
      auto const &gens = slp_.generators();
      auto it = std::find(gens.begin(), gens.end(), w.name());
      if (it != gens.end())
        return {Letter{static_cast<std::size_t>(it - gens.begin()), 1}};
      auto m = memo_.find(w.name());
      if (m != memo_.end())
        return m->second;
      auto expanded = expand(slp_.definition(w.name()));
      memo_.emplace(w.name(), expanded);
      return expanded;
    }
    case Word::Op::Product:
      for (auto const &f : w.factors())
        append(out, expand(f));
      break;
    case Word::Op::Power: {
      auto unit = expand(w.base());
      if (w.exponent() < 0)
        unit = invert(unit);
      std::int64_t reps = w.exponent() < 0 ? -w.exponent() : w.exponent();
      for (std::int64_t i = 0; i < reps; ++i)
        append(out, unit);
      break;
    }
    case Word::Op::Conjugate: {
      auto by = expand(w.by());
      append(out, invert(by));
      append(out, expand(w.base()));
      append(out, by);
      break;
    }
    case Word::Op::Commutator: {
      auto x = expand(w.left());
      auto y = expand(w.right());
      append(out, invert(x));
      append(out, invert(y));
      append(out, x);
      append(out, y);
      break;
    }
    }
    return out;
  }

private:
  static std::vector<Letter> invert(std::vector<Letter> const &v)
  {
    std::vector<Letter> out(v.rbegin(), v.rend());
    for (auto &l : out)
      l.second = -l.second;
    return out;
  }

  void append(std::vector<Letter> &out, std::vector<Letter> const &more) const
  {
    for (auto const &l : more) {
      if (!out.empty() && out.back().first == l.first && out.back().second == -l.second)
        out.pop_back();
      else
        out.push_back(l);
    }
    if (out.size() > limit_)
      throw Error(ErrorKind::InvalidArgument, "free expansion exceeds " + std::to_string(limit_) + " letters");
  }

  Slp const &slp_;
  std::size_t limit_;
  std::map<std::string, std::vector<Letter>> memo_;
};

} // namespace

std::vector<Letter> free_reduce(Word const &w, Slp const &slp, std::size_t max_letters)
{
  return FreeReducer(slp, max_letters).expand(w);
}

// ----------------------------------------------------------------- formats

namespace {

struct Printer {
  bool flat = false;

  std::string word(Word const &w) const
  {
    switch (w.op()) {
    case Word::Op::Identity: return "1";
    case Word::Op::Symbol: return w.name();
    case Word::Op::Product: {
      std::string out;
      for (std::size_t i = 0; i < w.factors().size(); ++i) {
        if (i)
          out += flat ? "*" : " ";
        out += word(w.factors()[i]);
      }
      return out;
    }
    case Word::Op::Power: return atom(w.base()) + "^" + std::to_string(w.exponent());
    case Word::Op::Conjugate: return atom(w.base()) + "^" + atom(w.by());
    case Word::Op::Commutator:
      if (flat) {
        std::string x = atom(w.left()), y = atom(w.right());
        return x + "^-1*" + y + "^-1*" + x + "*" + y;
      }
      return "[" + word(w.left()) + "," + word(w.right()) + "]";
    }
    return {};
  }

  std::string atom(Word const &w) const
  {
    if (w.op() == Word::Op::Symbol || (!flat && w.op() == Word::Op::Commutator))
      return word(w);
    return "(" + word(w) + ")";
  }
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Word parse_all()
  {
    Word w = parse_product();
    skip_ws();
    if (pos_ != text_.size())
      fail("unexpected character");
    return w;
  }

private:
  [[noreturn]] void fail(std::string const &msg) const
  {
    throw Error(ErrorKind::ParseError, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws()
  {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool peek(char c)
  {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_primary()
  {
    skip_ws();
    if (pos_ >= text_.size())
      return false;
    char c = text_[pos_];
    return c == '(' || c == '[' || c == '1' || std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Word parse_product()
  {
    std::vector<Word> factors;
    for (;;) {
      if (peek('*')) {
        if (factors.empty())
          fail("dangling '*'");
        ++pos_;
        if (!starts_primary())
          fail("expected factor after '*'");
      }
      if (!starts_primary())
        break;
      factors.push_back(parse_factor());
    }
    if (factors.empty())
      fail("expected a word");
    return Word::product(std::move(factors));
  }

  Word parse_factor()
  {
    Word w = parse_primary();
    while (peek('^')) {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && (text_[pos_] == '-' || std::isdigit(static_cast<unsigned char>(text_[pos_])))) {
        std::size_t start = pos_;
        if (text_[pos_] == '-')
          ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
          ++pos_;
        std::string digits(text_.substr(start, pos_ - start));
        if (digits == "-")
          fail("expected exponent");
        std::int64_t e = std::stoll(digits);
        if (e == 0)
          fail("zero exponent");
        w = w.pow(e);
      } else {
        w = w.conj(parse_primary());
      }
    }
    return w;
  }

  Word parse_primary()
  {
    skip_ws();
    if (pos_ >= text_.size())
      fail("unexpected end");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word w = parse_product();
      if (!peek(')'))
        fail("expected ')'");
      ++pos_;
      return w;
    }
    if (c == '[') {
      ++pos_;
      Word x = parse_product();
      if (!peek(','))
        fail("expected ','");
      ++pos_;
      Word y = parse_product();
      if (!peek(']'))
        fail("expected ']'");
      ++pos_;
      return Word::commutator(x, y);
    }
    if (c == '1') {
      ++pos_;
      return Word();
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_)
      fail("expected symbol");
    return sym(std::string(text_.substr(start, pos_ - start)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s)
{
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return std::string(s.substr(b, e - b));
}

} // namespace

std::string to_text(Word const &w) { return Printer{false}.word(w); }
std::string to_flat(Word const &w) { return Printer{true}.word(w); }
Word parse_word(std::string_view text) { return Parser(text).parse_all(); }

std::string to_text(Slp const &slp)
{
  std::ostringstream os;
  os << "generators: ";
  for (std::size_t i = 0; i < slp.generators().size(); ++i)
    os << (i ? ", " : "") << slp.generators()[i];
  os << '\n';
  for (auto const &[name, word] : slp.definitions())
    os << name << " := " << to_text(word) << '\n';
  for (auto const &r : slp.relators())
    os << "relator: " << to_text(r) << '\n';
  return os.str();
}

Slp parse_slp(std::string_view text)
{
  std::optional<Slp> slp;
  std::istringstream is{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  auto fail = [&](std::string const &msg) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#')
      continue;
    if (line.rfind("generators:", 0) == 0) {
      if (slp)
        fail("duplicate generators line");
      std::vector<std::string> gens;
      std::string rest = line.substr(11);
      std::istringstream gs(rest);
      std::string g;
      while (std::getline(gs, g, ','))
        if (auto t = trim(g); !t.empty())
          gens.push_back(t);
      slp.emplace(gens);
      continue;
    }
    if (!slp)
      fail("generators line must come first");
    if (line.rfind("relator:", 0) == 0) {
      slp->add_relator(parse_word(line.substr(8)));
      continue;
    }
    auto def = line.find(":=");
    if (def == std::string::npos)
      fail("expected 'name := expr' or 'relator: expr'");
    slp->define(trim(line.substr(0, def)), parse_word(line.substr(def + 2)));
  }
  if (!slp)
    throw Error(ErrorKind::ParseError, "missing generators line");
  return *slp;
}

nlohmann::json to_json(Word const &w)
{
  using nlohmann::json;
  switch (w.op()) {
  case Word::Op::Identity: return json{{"op", "id"}};
  case Word::Op::Symbol: return json{{"op", "sym"}, {"name", w.name()}};
  case Word::Op::Product: {
    json fs = json::array();
    for (auto const &f : w.factors())
      fs.push_back(to_json(f));
    return json{{"op", "mul"}, {"factors", fs}};
  }
  case Word::Op::Power: return json{{"op", "pow"}, {"base", to_json(w.base())}, {"exp", w.exponent()}};
  case Word::Op::Conjugate: return json{{"op", "conj"}, {"base", to_json(w.base())}, {"by", to_json(w.by())}};
  case Word::Op::Commutator: return json{{"op", "comm"}, {"left", to_json(w.left())}, {"right", to_json(w.right())}};
  }
  return {};
}

Word word_from_json(nlohmann::json const &j)
{
  auto op = j.at("op").get<std::string>();
  if (op == "id")
    return Word();
  if (op == "sym")
    return sym(j.at("name").get<std::string>());
  if (op == "mul") {
    std::vector<Word> fs;
    for (auto const &f : j.at("factors"))
      fs.push_back(word_from_json(f));
    return Word::product(std::move(fs));
  }
  if (op == "pow")
    return word_from_json(j.at("base")).pow(j.at("exp").get<std::int64_t>());
  if (op == "conj")
    return word_from_json(j.at("base")).conj(word_from_json(j.at("by")));
  if (op == "comm")
    return Word::commutator(word_from_json(j.at("left")), word_from_json(j.at("right")));
  throw Error(ErrorKind::ParseError, "unknown word node '" + op + "'");
}

nlohmann::json to_json(Slp const &slp)
{
  nlohmann::json defs = nlohmann::json::array();
  for (auto const &[name, word] : slp.definitions())
    defs.push_back({{"name", name}, {"word", to_json(word)}});
  nlohmann::json rels = nlohmann::json::array();
  for (auto const &r : slp.relators())
    rels.push_back(to_json(r));
  return {{"generators", slp.generators()}, {"definitions", defs}, {"relators", rels}};
}

Slp slp_from_json(nlohmann::json const &j)
{
  Slp slp(j.at("generators").get<std::vector<std::string>>());
  for (auto const &d : j.at("definitions"))
    slp.define(d.at("name").get<std::string>(), word_from_json(d.at("word")));
  for (auto const &r : j.at("relators"))
    slp.add_relator(word_from_json(r));
  return slp;
}

} // namespace shortpres
