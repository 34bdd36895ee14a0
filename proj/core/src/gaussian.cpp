#include "lieder/gaussian.hpp"

#include <cctype>

#include "lieder/error.hpp"

namespace lieder {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im.is_zero() && o.im.is_zero()) {
    re *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero Gaussian rational");
  Rational norm = re * re + im * im;
  return {re / norm, -im / norm};
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  if (im == Rational(1)) {
    imag = "i";
  } else if (im == Rational(-1)) {
    imag = "-i";
  } else {
    imag = im.str() + "*i";
  }
  if (re.is_zero()) return imag;
  return re.str() + (im.sign() > 0 ? "+" : "") + imag;
}

std::uint64_t GaussianRational::hash() const {
  return re.hash() * 1000003ULL ^ (im.hash() + 0x9e3779b97f4a7c15ULL);
}

namespace {

Rational parse_imaginary(std::string_view s, std::string_view whole) {
  // s is "i", "+i", "-i", "<rational>*i", "+<rational>*i"
  if (s.empty() || s.back() != 'i') {
    throw Error(ErrorKind::ParseError, "malformed Gaussian rational '" + std::string(whole) + "'");
  }
  std::string_view coeff = s.substr(0, s.size() - 1);
  if (coeff.empty() || coeff == "+") return Rational(1);
  if (coeff == "-") return Rational(-1);
  if (coeff.back() != '*') {
    throw Error(ErrorKind::ParseError, "malformed Gaussian rational '" + std::string(whole) + "'");
  }
  return Rational::parse(coeff.substr(0, coeff.size() - 1));
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty Gaussian rational");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size() - 1; k > 0; --k) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), parse_imaginary(s, text)};
  return {Rational::parse(std::string_view(s).substr(0, split)),
          parse_imaginary(std::string_view(s).substr(split), text)};
}

}  // namespace lieder
