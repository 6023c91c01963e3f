#include "circpack/rational.h"

#include <cctype>
#include <stdexcept>

namespace circpack {

Rational pi_lower() { return Rational(333, 106); }
Rational pi_upper() { return Rational(355, 113); }

namespace {

BigInt parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty()) throw std::invalid_argument("empty integer in '" + std::string(original) + "'");
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed rational '" + std::string(original) + "'");
    }
  }
  return BigInt(std::string(digits), 10);
}

BigInt pow10(unsigned long e) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, e);
  return result;
}

bool exact_root(const Rational& value, unsigned index, Rational& root) {
  if (value < 0) return false;
  BigInt num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), value.get_num_mpz_t(), index) == 0) return false;
  if (mpz_root(den_root.get_mpz_t(), value.get_den_mpz_t(), index) == 0) return false;
  root = Rational(num_root, den_root);
  root.canonicalize();
  return true;
}

// floor((value * 2^(bits*index))^(1/index)) and whether the root was exact.
BigInt scaled_floor_root(const Rational& value, unsigned index, unsigned bits, bool& exact) {
  Rational scaled = value;
  mpq_mul_2exp(scaled.get_mpq_t(), scaled.get_mpq_t(), static_cast<mp_bitcnt_t>(bits) * index);
  BigInt m = floor_of(scaled);
  BigInt s;
  int perfect = mpz_root(s.get_mpz_t(), m.get_mpz_t(), index);
  exact = perfect != 0 && scaled.get_den() == 1;
  return s;
}

Rational shift_down(const BigInt& s, unsigned bits) {
  Rational result(s);
  mpq_div_2exp(result.get_mpq_t(), result.get_mpq_t(), bits);
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), original);
    BigInt den = parse_integer(text.substr(slash + 1), original);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
    result = Rational(num, den);
    result.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      BigInt magnitude = parse_integer(exp_text, original);
      if (!magnitude.fits_slong_p() || abs(magnitude) > 100000) {
        throw std::invalid_argument("exponent out of range in '" + std::string(original) + "'");
      }
      exponent = magnitude.get_si();
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string_view int_part = text;
    std::string_view frac_part;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      int_part = text.substr(0, dot);
      frac_part = text.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed rational '" + std::string(original) + "'");
    }
    BigInt digits = parse_integer(std::string(int_part.empty() ? "0" : int_part) +
                                      std::string(frac_part.empty() ? "" : frac_part),
                                  original);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    if (scale >= 0) {
      result = Rational(digits, pow10(static_cast<unsigned long>(scale)));
    } else {
      result = Rational(digits * pow10(static_cast<unsigned long>(-scale)));
    }
    result.canonicalize();
  }
  if (negative) result = -result;
  return result;
}

std::string to_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

BigInt floor_of(const Rational& value) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

BigInt ceil_of(const Rational& value) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Rational pow(const Rational& base, unsigned exponent) {
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational result(num, den);
  result.canonicalize();
  return result;
}

bool exact_sqrt(const Rational& value, Rational& root) { return exact_root(value, 2, root); }

Rational root_upper(const Rational& value, unsigned index, unsigned bits) {
  if (value < 0) throw std::domain_error("root of a negative rational");
  Rational root;
  if (exact_root(value, index, root)) return root;
  bool exact = false;
  BigInt s = scaled_floor_root(value, index, bits, exact);
  if (!exact) s += 1;
  return shift_down(s, bits);
}

Rational root_lower(const Rational& value, unsigned index, unsigned bits) {
  if (value < 0) throw std::domain_error("root of a negative rational");
  Rational root;
  if (exact_root(value, index, root)) return root;
  bool exact = false;
  return shift_down(scaled_floor_root(value, index, bits, exact), bits);
}

Rational floor_to_step(const Rational& value, const Rational& step) {
  return Rational(floor_of(value / step)) * step;
}

Rational ceil_to_step(const Rational& value, const Rational& step) {
  return Rational(ceil_of(value / step)) * step;
}

Rational round_to_step(const Rational& value, const Rational& step) {
  return Rational(floor_of(value / step + Rational(1, 2))) * step;
}

Rational dyadic_step_below(const Rational& bound) {
  if (bound <= 0) throw std::invalid_argument("dyadic_step_below needs a positive bound");
  Rational step(1);
  while (step > bound) step /= 2;
  return step;
}

int sign(const Rational& value) { return sgn(value); }

}  // namespace circpack
