#include "fqreduce/textio.hpp"

#include <charconv>
#include <limits>

namespace fqr {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

std::uint64_t parse_u64(std::string_view s, const char* what) {
  s = trim(s);
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(ErrorKind::ParseError, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return v;
}

// Consumes "<key>=" at the front of s.
std::string_view expect_key(std::string_view s, std::string_view key) {
  s = trim(s);
  if (s.substr(0, key.size()) != key) throw Error(ErrorKind::ParseError, "expected '" + std::string(key) + "='");
  s = trim(s.substr(key.size()));
  if (s.empty() || s.front() != '=') throw Error(ErrorKind::ParseError, "expected '=' after " + std::string(key));
  return s.substr(1);
}

}  // namespace

std::string format_poly(const Poly& f) {
  std::string out = "q=" + std::to_string(f.field().modulus()) + " f=";
  if (f.is_zero()) return out + "0";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(f[i]);
  }
  return out;
}

std::string format_factor(const FactorPower& fp) {
  std::string out = format_poly(fp.factor);
  if (fp.multiplicity > 1) out += "^" + std::to_string(fp.multiplicity);
  return out;
}

Poly parse_poly(std::string_view text) {
  std::string_view rest = expect_key(text, "q");
  const auto f_pos = rest.find('f');
  if (f_pos == std::string_view::npos) throw Error(ErrorKind::ParseError, "missing f=");
  const std::uint64_t q = parse_u64(rest.substr(0, f_pos), "modulus");
  if (q < 2 || q >= PrimeField::kMaxModulus || !is_prime_u64(q)) {
    throw Error(ErrorKind::ParseError, "q=" + std::to_string(q) + " is not a supported prime");
  }
  const PrimeField F(q);
  rest = expect_key(rest.substr(f_pos), "f");
  std::vector<Felt> c;
  for (;;) {
    const auto comma = rest.find(',');
    const Felt v = parse_u64(rest.substr(0, comma), "coefficient");
    if (v >= q) throw Error(ErrorKind::ParseError, "coefficient " + std::to_string(v) + " is not reduced mod q");
    c.push_back(v);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (c.back() == 0 && c.size() > 1) throw Error(ErrorKind::ParseError, "leading coefficient is zero");
  return Poly(F, std::move(c));
}

FactorPower parse_factor(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return {parse_poly(text), 1};
  const auto mult = parse_u64(text.substr(caret + 1), "multiplicity");
  if (mult < 1 || mult > static_cast<std::uint64_t>(std::numeric_limits<int>::max())) {
    throw Error(ErrorKind::ParseError, "multiplicity out of range");
  }
  return {parse_poly(text.substr(0, caret)), static_cast<int>(mult)};
}

}  // namespace fqr
