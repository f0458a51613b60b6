#include "longknot/integer.hpp"

#include <cctype>
#include <limits>
#include <numeric>

#include "longknot/errors.hpp"

namespace longknot {

void Integer::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = v.get_si();
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

Integer Integer::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty integer literal");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) throw ParseError("integer literal without digits");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("bad digit in integer literal '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(mpz_class(digits, 10));
}

std::string Integer::to_string() const {
  return big_ ? big_->get_str(10) : std::to_string(small_);
}

Integer Integer::operator-() const {
  if (!big_ && small_ != std::numeric_limits<std::int64_t>::min()) return Integer(-small_);
  return Integer(mpz_class(-to_mpz()));
}

Integer Integer::add_slow(const Integer& a, const Integer& b) {
  return Integer(mpz_class(a.to_mpz() + b.to_mpz()));
}

Integer Integer::sub_slow(const Integer& a, const Integer& b) {
  return Integer(mpz_class(a.to_mpz() - b.to_mpz()));
}

Integer Integer::mul_slow(const Integer& a, const Integer& b) {
  return Integer(mpz_class(a.to_mpz() * b.to_mpz()));
}

Integer Integer::divexact(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionError("integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    return Integer(a.small_ / b.small_);
  }
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(q);
}

void Integer::divmod_trunc(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  if (b.is_zero()) throw DivisionError("integer division by zero");
  if (!a.big_ && !b.big_ && !(a.small_ == std::numeric_limits<std::int64_t>::min() && b.small_ == -1)) {
    q = Integer(a.small_ / b.small_);
    r = Integer(a.small_ % b.small_);
    return;
  }
  mpz_class qq, rr;
  mpz_tdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  q = Integer(qq);
  r = Integer(rr);
}

Integer Integer::div_round(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw DivisionError("integer division by zero");
  // floor((2a + b) / 2b) with the sign of b folded into the numerator
  mpz_class num = 2 * a.to_mpz();
  mpz_class den = 2 * b.to_mpz();
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num += den / 2;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return Integer(q);
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
  if (!a.big_ && !b.big_ && a.small_ != std::numeric_limits<std::int64_t>::min() &&
      b.small_ != std::numeric_limits<std::int64_t>::min()) {
    return Integer(std::gcd(a.small_, b.small_));
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.to_mpz().get_mpz_t(), b.to_mpz().get_mpz_t());
  return Integer(g);
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
  if (a.is_zero() || b.is_zero()) return Integer(0);
  return (divexact(a, gcd(a, b)) * b).abs();
}

std::strong_ordering operator<=>(const Integer& a, const Integer& b) noexcept {
  if (!a.big_ && !b.big_) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

}  // namespace longknot
