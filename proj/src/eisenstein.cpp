#include "cubic/eisenstein.hpp"

#include "cubic/errors.hpp"

namespace cubic {

EisensteinRational EisensteinRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  const Rational n = norm();
  const EisensteinRational c = conj();
  return {c.x_ / n, c.y_ / n};
}

std::string EisensteinRational::to_string() const {
  if (y_.sign() < 0) return x_.to_string() + " - " + (-y_).to_string() + "*w";
  return x_.to_string() + " + " + y_.to_string() + "*w";
}

EisensteinRational& EisensteinRational::operator+=(const EisensteinRational& rhs) {
  x_ += rhs.x_;
  y_ += rhs.y_;
  return *this;
}

EisensteinRational& EisensteinRational::operator-=(const EisensteinRational& rhs) {
  x_ -= rhs.x_;
  y_ -= rhs.y_;
  return *this;
}

// (x1 + y1 w)(x2 + y2 w) = x1 x2 + (x1 y2 + x2 y1) w + y1 y2 w^2, w^2 = -1 - w.
EisensteinRational& EisensteinRational::operator*=(const EisensteinRational& rhs) {
  const Rational yy = y_ * rhs.y_;
  Rational x = x_ * rhs.x_ - yy;
  Rational y = x_ * rhs.y_ + rhs.x_ * y_ - yy;
  x_ = std::move(x);
  y_ = std::move(y);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const EisensteinRational& a) { return os << a.to_string(); }

}  // namespace cubic
