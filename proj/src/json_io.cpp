#include "summa/json_io.hpp"

#include <algorithm>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <utility>

#include "summa/errors.hpp"

namespace summa {

namespace {

// ---- located parsing ---------------------------------------------------------

// Character iterator that publishes how far the lexer has read.
class CountingIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  CountingIterator() = default;
  CountingIterator(const char* p, const char* base, std::size_t* consumed) : p_(p), base_(base), consumed_(consumed) {}

  reference operator*() const { return *p_; }
  CountingIterator& operator++() {
    ++p_;
    if (consumed_) *consumed_ = static_cast<std::size_t>(p_ - base_);
    return *this;
  }
  CountingIterator operator++(int) {
    CountingIterator old = *this;
    ++*this;
    return old;
  }
  friend bool operator==(const CountingIterator& a, const CountingIterator& b) { return a.p_ == b.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* consumed_ = nullptr;
};

// Builds the DOM and records, per JSON pointer, the offset just past the
// value's token.
class LocatingSax {
 public:
  LocatingSax(Json& root, const std::size_t* consumed) : dom_(root, false), consumed_(consumed) {}

  bool null() { return value(dom_.null()); }
  bool boolean(bool v) { return value(dom_.boolean(v)); }
  bool number_integer(Json::number_integer_t v) { return value(dom_.number_integer(v)); }
  bool number_unsigned(Json::number_unsigned_t v) { return value(dom_.number_unsigned(v)); }
  bool number_float(Json::number_float_t v, const Json::string_t& s) { return value(dom_.number_float(v, s)); }
  bool string(Json::string_t& v) { return value(dom_.string(v)); }
  bool binary(Json::binary_t& v) { return value(dom_.binary(v)); }

  bool start_object(std::size_t n) {
    record();
    frames_.push_back({true, {}, 0});
    return dom_.start_object(n);
  }
  bool key(Json::string_t& k) {
    frames_.back().key = k;
    return dom_.key(k);
  }
  bool end_object() {
    frames_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    record();
    frames_.push_back({false, {}, 0});
    return dom_.start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    advance();
    return dom_.end_array();
  }

  bool parse_error(std::size_t position, const std::string& /*last_token*/, const nlohmann::detail::exception& ex) {
    error_position_ = position;
    error_message_ = ex.what();
    return false;
  }

  const std::map<std::string, std::size_t>& offsets() const { return offsets_; }
  std::optional<std::size_t> error_position() const { return error_position_; }
  const std::string& error_message() const { return error_message_; }

 private:
  struct Frame {
    bool object;
    std::string key;
    std::size_t index;
  };

  static std::string escape(const std::string& token) {
    std::string out;
    for (char c : token) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  std::string current_pointer() const {
    std::string out;
    for (const Frame& f : frames_) out += "/" + (f.object ? escape(f.key) : std::to_string(f.index));
    return out;
  }

  void record() { offsets_.emplace(current_pointer(), *consumed_); }

  void advance() {
    if (!frames_.empty() && !frames_.back().object) ++frames_.back().index;
  }

  bool value(bool ok) {
    record();
    advance();
    return ok;
  }

  nlohmann::detail::json_sax_dom_parser<Json> dom_;
  const std::size_t* consumed_;
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t> offsets_;
  std::optional<std::size_t> error_position_;
  std::string error_message_;
};

std::string line_col(const std::string& text, std::size_t offset) {
  offset = std::min(offset, text.size());
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

// A JSON value together with where it came from.
class Node {
 public:
  struct Context {
    const std::string* source;
    const std::string* text;
    const std::map<std::string, std::size_t>* offsets;
  };

  Node(const Json& value, std::string pointer, const Context* ctx)
      : value_(&value), pointer_(std::move(pointer)), ctx_(ctx) {}

  const Json& json() const { return *value_; }
  const std::string& pointer() const { return pointer_; }

  std::string where() const {
    std::string loc = *ctx_->source;
    auto it = ctx_->offsets->find(pointer_);
    if (it != ctx_->offsets->end()) {
      // offsets point just past the token; step back onto it
      loc += ":" + line_col(*ctx_->text, it->second == 0 ? 0 : it->second - 1);
    }
    return loc + ": " + (pointer_.empty() ? std::string("/") : pointer_);
  }

  [[noreturn]] void schema_fail(const std::string& message) const { throw SchemaError(where() + ": " + message); }
  [[noreturn]] void parse_fail(const std::string& message) const { throw ParseError(where() + ": " + message); }

  bool has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

  Node operator[](const std::string& key) const {
    expect_object();
    auto it = value_->find(key);
    if (it == value_->end()) schema_fail("missing required field \"" + key + "\"");
    return Node(*it, pointer_ + "/" + key, ctx_);
  }

  std::optional<Node> find(const std::string& key) const {
    expect_object();
    auto it = value_->find(key);
    if (it == value_->end()) return std::nullopt;
    return Node(*it, pointer_ + "/" + key, ctx_);
  }

  std::vector<Node> items() const {
    if (!value_->is_array()) schema_fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < value_->size(); ++i) out.emplace_back((*value_)[i], pointer_ + "/" + std::to_string(i), ctx_);
    return out;
  }

  std::vector<std::pair<std::string, Node>> members() const {
    expect_object();
    std::vector<std::pair<std::string, Node>> out;
    for (auto it = value_->begin(); it != value_->end(); ++it) {
      out.emplace_back(it.key(), Node(it.value(), pointer_ + "/" + it.key(), ctx_));
    }
    return out;
  }

  void expect_object() const {
    if (!value_->is_object()) schema_fail("expected an object");
  }

  void allow_only(std::initializer_list<const char*> keys) const {
    expect_object();
    for (auto it = value_->begin(); it != value_->end(); ++it) {
      bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; });
      if (!known) Node(it.value(), pointer_ + "/" + it.key(), ctx_).schema_fail("unknown field \"" + it.key() + "\"");
    }
  }

  std::string string() const {
    if (!value_->is_string()) schema_fail("expected a string");
    return value_->get<std::string>();
  }

  std::int64_t integer(std::int64_t lo, std::int64_t hi) const {
    if (!value_->is_number_integer()) schema_fail("expected an integer");
    std::int64_t v;
    if (value_->is_number_unsigned()) {
      auto u = value_->get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) schema_fail("integer out of range");
      v = static_cast<std::int64_t>(u);
    } else {
      v = value_->get<std::int64_t>();
    }
    if (v < lo || v > hi) schema_fail("integer " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  }

  Rat rational() const {
    if (value_->is_number_integer()) {
      if (value_->is_number_unsigned()) return Rat(mpz_class(std::to_string(value_->get<std::uint64_t>())));
      return Rat(static_cast<long>(value_->get<std::int64_t>()));
    }
    if (!value_->is_string()) schema_fail("expected a rational as an integer or a \"num/den\" string");
    try {
      return Rat::parse(value_->get<std::string>());
    } catch (const std::exception& e) {
      parse_fail("bad rational literal \"" + value_->get<std::string>() + "\"");
    }
  }

  SymScalar sym_scalar() const {
    if (!value_->is_object()) return SymScalar(rational());
    SymScalar out;
    for (const auto& [name, node] : members()) {
      if (!sym::is_valid(name)) node.schema_fail("invalid symbol name \"" + name + "\"");
      Rat c = node.rational();
      out += name == sym::kUnit ? SymScalar(c) : SymScalar::symbol(name, c);
    }
    return out;
  }

  OrbitId orbit() const {
    std::string label = string();
    if (!OrbitId::is_valid_label(label)) schema_fail("invalid orbit label \"" + label + "\"");
    return OrbitId(label);
  }

 private:
  const Json* value_;
  std::string pointer_;
  const Context* ctx_;
};

class TermBudget {
 public:
  explicit TermBudget(std::size_t max) : max_(max) {}
  void take(const Node& at, std::size_t n) {
    used_ += n;
    if (used_ > max_) {
      at.schema_fail("input has more than " + std::to_string(max_) + " terms (SUMMA_MAX_TERMS)");
    }
  }

 private:
  std::size_t max_;
  std::size_t used_ = 0;
};

std::int64_t offset_of(const Node& n) { return n.integer(-kMaxAbsOffset, kMaxAbsOffset); }
int order_of(const Node& n) { return static_cast<int>(n.integer(1, kMaxOrder)); }

ZetaExpansion parse_elliptic(const Node& payload, TermBudget& budget) {
  payload.allow_only({"constant", "terms"});
  SymScalar constant;
  if (auto c = payload.find("constant")) constant = c->sym_scalar();
  TermTable terms;
  auto items = payload["terms"].items();
  budget.take(payload["terms"], items.size());
  for (const Node& item : items) {
    item.allow_only({"orbit", "n", "j", "c"});
    TermKey key{OrbitPoint{item["orbit"].orbit(), offset_of(item["n"])}, order_of(item["j"])};
    accumulate(terms, key, item["c"].sym_scalar());
  }
  try {
    return ZetaExpansion::make(std::move(constant), std::move(terms));
  } catch (const EllipticityViolation& e) {
    throw EllipticityViolation(payload.where() + ": " + e.what());
  }
}

Poly parse_coefficients(const Node& node) {
  std::vector<Rat> coeffs;
  for (const Node& c : node.items()) coeffs.push_back(c.rational());
  return Poly(std::move(coeffs));
}

RationalProblem parse_rational(const Node& payload, RatMode mode, TermBudget& budget) {
  payload.allow_only({"mode", "q", "laurent", "principal", "numerator", "denominator"});
  const char* expected_mode = mode == RatMode::Shift ? "shift" : "q";
  if (auto m = payload.find("mode"); m && m->string() != expected_mode) {
    m->schema_fail(std::string("mode must be \"") + expected_mode + "\" for this kind");
  }

  RationalProblem out;
  if (mode == RatMode::Q) {
    Node qn = payload["q"];
    Rat q = qn.rational();
    if (q.is_zero() || q.abs() == Rat(1)) qn.schema_fail("q must satisfy q != 0 and |q| != 1");
    out.ctx.emplace(q);
  } else if (payload.has("q")) {
    payload["q"].schema_fail("q is only allowed in q mode");
  }

  const bool fraction = payload.has("numerator") || payload.has("denominator");
  if (fraction) {
    if (payload.has("laurent") || payload.has("principal")) {
      payload.schema_fail("give either numerator/denominator or laurent/principal, not both");
    }
    Poly num = parse_coefficients(payload["numerator"]);
    Poly den = parse_coefficients(payload["denominator"]);
    budget.take(payload, num.coeffs().size() + den.coeffs().size());
    if (den.is_zero()) payload["denominator"].schema_fail("denominator is the zero polynomial");
    try {
      out.f = from_fraction(num, den, mode);
    } catch (const UnsplitDenominator& e) {
      throw UnsplitDenominator(payload["denominator"].where() + ": " + e.what());
    }
    return out;
  }

  LaurentPart laurent;
  if (auto l = payload.find("laurent")) {
    auto members = l->members();
    budget.take(*l, members.size());
    for (const auto& [degree, node] : members) {
      std::int64_t k;
      try {
        std::size_t used = 0;
        k = std::stoll(degree, &used);
        if (used != degree.size()) throw std::invalid_argument("trailing");
      } catch (const std::exception&) {
        node.schema_fail("Laurent degree \"" + degree + "\" is not an integer");
      }
      if (k < -kMaxOrder || k > kMaxOrder) node.schema_fail("Laurent degree out of range");
      if (mode == RatMode::Shift && k < 0) node.schema_fail("negative Laurent degree in shift mode");
      Rat c = node.rational();
      auto [it, inserted] = laurent.try_emplace(k, c);
      if (!inserted) it->second += c;
    }
  }
  PrincipalPart principal;
  if (auto p = payload.find("principal")) {
    auto items = p->items();
    budget.take(*p, items.size());
    for (const Node& item : items) {
      item.allow_only({"pole", "j", "c"});
      PoleKey key{item["pole"].rational(), order_of(item["j"])};
      Rat c = item["c"].rational();
      auto [it, inserted] = principal.try_emplace(key, c);
      if (!inserted) it->second += c;
    }
  }
  out.f = RatPF::make(mode, std::move(laurent), std::move(principal));
  return out;
}

std::vector<DivisorData> parse_divisors(const Node& payload, TermBudget& budget) {
  payload.allow_only({"divisors"});
  std::vector<DivisorData> out;
  for (const Node& divisor : payload["divisors"].items()) {
    auto entries = divisor.items();
    budget.take(divisor, entries.size());
    std::map<OrbitPoint, std::int64_t> m;
    for (const Node& e : entries) {
      e.allow_only({"orbit", "n", "m"});
      m[OrbitPoint{e["orbit"].orbit(), offset_of(e["n"])}] += e["m"].integer(-kMaxAbsOffset, kMaxAbsOffset);
    }
    DivisorData d(m);
    if (d.degree() != 0) {
      throw DegreeViolation(divisor.where() + ": multiplicities sum to " + std::to_string(d.degree()) + ", expected 0");
    }
    out.push_back(std::move(d));
  }
  return out;
}

ResidueTable parse_ledger(const Node& payload, TermBudget& budget) {
  payload.allow_only({"entries"});
  ResidueTable out;
  auto items = payload["entries"].items();
  budget.take(payload["entries"], items.size());
  for (const Node& item : items) {
    item.allow_only({"orbit", "n", "j", "c"});
    TermKey key{OrbitPoint{item["orbit"].orbit(), offset_of(item["n"])}, order_of(item["j"])};
    Rat c = item["c"].rational();
    auto [it, inserted] = out.try_emplace(key, c);
    if (!inserted) it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
  return out;
}

}  // namespace

std::string kind_name(ProblemKind kind) {
  switch (kind) {
    case ProblemKind::Elliptic: return "elliptic";
    case ProblemKind::RationalShift: return "rational-shift";
    case ProblemKind::RationalQ: return "rational-q";
    case ProblemKind::Divisors: return "divisors";
    case ProblemKind::Ledger: return "ledger";
  }
  throw std::logic_error("unknown problem kind");
}

Problem parse_problem(const std::string& text, const std::string& source, std::size_t max_terms) {
  Json root;
  std::size_t consumed = 0;
  LocatingSax sax(root, &consumed);
  const char* base = text.data();
  CountingIterator first(base, base, &consumed);
  CountingIterator last(base + text.size(), base, nullptr);
  bool ok = Json::sax_parse(first, last, &sax);
  if (!ok || sax.error_position()) {
    std::size_t at = sax.error_position().value_or(consumed);
    std::string message = sax.error_message();
    // the library message repeats the position; keep the reason only
    if (auto colon = message.rfind(": "); colon != std::string::npos) message = message.substr(colon + 2);
    throw ParseError(source + ":" + line_col(text, at == 0 ? 0 : at - 1) + ": invalid JSON: " + message);
  }

  Node::Context ctx{&source, &text, &sax.offsets()};
  Node top(root, "", &ctx);
  top.allow_only({"kind", "metadata", "payload"});

  Problem problem;
  Node kind_node = top["kind"];
  std::string kind = kind_node.string();
  if (kind == "elliptic") problem.kind = ProblemKind::Elliptic;
  else if (kind == "rational-shift") problem.kind = ProblemKind::RationalShift;
  else if (kind == "rational-q") problem.kind = ProblemKind::RationalQ;
  else if (kind == "divisors") problem.kind = ProblemKind::Divisors;
  else if (kind == "ledger") problem.kind = ProblemKind::Ledger;
  else kind_node.schema_fail("unknown kind \"" + kind + "\"");

  if (auto meta = top.find("metadata")) {
    for (const auto& [key, value] : meta->members()) problem.metadata[key] = value.string();
  }

  TermBudget budget(max_terms);
  Node payload = top["payload"];
  switch (problem.kind) {
    case ProblemKind::Elliptic: problem.payload = parse_elliptic(payload, budget); break;
    case ProblemKind::RationalShift: problem.payload = parse_rational(payload, RatMode::Shift, budget); break;
    case ProblemKind::RationalQ: problem.payload = parse_rational(payload, RatMode::Q, budget); break;
    case ProblemKind::Divisors: problem.payload = parse_divisors(payload, budget); break;
    case ProblemKind::Ledger: problem.payload = parse_ledger(payload, budget); break;
  }
  return problem;
}

Json encode(const Rat& r) { return r.str(); }

Json encode(const SymScalar& s) {
  Json out = Json::object();
  for (const auto& [name, c] : s.terms()) out[name] = c.str();
  return out;
}

Json encode(const TermTable& terms) {
  Json out = Json::array();
  for (const auto& [key, c] : terms) {
    out.push_back(Json{{"orbit", key.point.orbit.label()}, {"n", key.point.offset}, {"j", key.order}, {"c", encode(c)}});
  }
  return out;
}

Json encode(const ZetaExpansion& f) { return Json{{"constant", encode(f.constant())}, {"terms", encode(f.terms())}}; }

Json encode(const OresTable& ores) {
  Json out = Json::object();
  for (const auto& [key, value] : ores) out[key.orbit.label()][std::to_string(key.order)] = encode(value);
  return out;
}

Json encode(const RatPF& f, const std::optional<QContext>& ctx) {
  Json out;
  out["mode"] = f.mode() == RatMode::Shift ? "shift" : "q";
  if (ctx) out["q"] = encode(ctx->q());
  Json laurent = Json::object();
  for (const auto& [k, c] : f.laurent()) laurent[std::to_string(k)] = encode(c);
  out["laurent"] = std::move(laurent);
  Json principal = Json::array();
  for (const auto& [key, c] : f.principal()) {
    principal.push_back(Json{{"pole", encode(key.pole)}, {"j", key.order}, {"c", encode(c)}});
  }
  out["principal"] = std::move(principal);
  return out;
}

Json encode(const std::vector<mpz_class>& v) {
  Json out = Json::array();
  for (const mpz_class& x : v) {
    if (x.fits_slong_p()) out.push_back(x.get_si());
    else out.push_back(x.get_str());
  }
  return out;
}

}  // namespace summa
