#include "ellgen/rational.hpp"

#include <cctype>

#include "ellgen/error.hpp"

namespace ellgen {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::Parse, "not a rational number: '" + std::string(text) + "'");
  }
  if (num.front() == '+') num.remove_prefix(1);
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::Parse, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string rat_string(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c.get_str(10);
}

double rat_to_double(const Rat& r) { return r.get_d(); }

bool is_integer(const Rat& r) { return r.get_den() == 1; }

Rat factorial(unsigned k) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rat(f);
}

Int binomial(long top, unsigned k) {
  Int result;
  Int t(top);
  mpz_bin_ui(result.get_mpz_t(), t.get_mpz_t(), k);
  return result;
}

}  // namespace ellgen
