#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "summa/algledger.hpp"
#include "summa/logdiff.hpp"
#include "summa/ratres.hpp"
#include "summa/reduce.hpp"
#include "summa/zeta_expansion.hpp"

namespace summa {

using Json = nlohmann::json;

enum class ProblemKind { Elliptic, RationalShift, RationalQ, Divisors, Ledger };

std::string kind_name(ProblemKind kind);

struct RationalProblem {
  RatPF f;
  /// Present exactly in q mode.
  std::optional<QContext> ctx;
};

using Payload = std::variant<ZetaExpansion, RationalProblem, std::vector<DivisorData>, ResidueTable>;

struct Problem {
  ProblemKind kind = ProblemKind::Elliptic;
  std::map<std::string, std::string> metadata;
  Payload payload;
};

/// Offsets and orders accepted from input files.
inline constexpr std::int64_t kMaxAbsOffset = 1000000;
inline constexpr int kMaxOrder = 1000;

/// Parses and validates a problem file. Errors carry "source:line:col" of the
/// offending value: ParseError for malformed JSON or literals, SchemaError
/// for structural mismatches, EllipticityViolation from the elliptic payload.
Problem parse_problem(const std::string& text, const std::string& source, std::size_t max_terms);

// ---- encoders ----------------------------------------------------------------
// Rationals are strings "n" or "n/d". SymScalars are objects {symbol: rational}
// with "1" for the rational part, so zero is {}.

Json encode(const Rat& r);
Json encode(const SymScalar& s);
/// [{"orbit", "n", "j", "c"}, ...] in (orbit, n, j) order.
Json encode(const TermTable& terms);
/// {"constant", "terms"}.
Json encode(const ZetaExpansion& f);
/// {orbit: {order: value}}.
Json encode(const OresTable& ores);
/// {"mode", "q"?, "laurent": {degree: c}, "principal": [{"pole", "j", "c"}]}.
Json encode(const RatPF& f, const std::optional<QContext>& ctx);
Json encode(const std::vector<mpz_class>& v);

}  // namespace summa
