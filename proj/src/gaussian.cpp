#include "chaingeo/gaussian.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

namespace {

// Scratch values reused across calls; GMP keeps their limb storage, so the
// hot loops below do not allocate.
struct Scratch {
  Rational t, u, v;
};

Scratch& scratch() {
  thread_local Scratch s;
  return s;
}

}  // namespace

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    mpq_mul(re_.get_mpq_t(), re_.get_mpq_t(), o.re_.get_mpq_t());
    if (sgn(im_) != 0) mpq_mul(im_.get_mpq_t(), im_.get_mpq_t(), o.re_.get_mpq_t());
    return *this;
  }
  if (sgn(im_) == 0) {
    mpq_mul(im_.get_mpq_t(), re_.get_mpq_t(), o.im_.get_mpq_t());
    mpq_mul(re_.get_mpq_t(), re_.get_mpq_t(), o.re_.get_mpq_t());
    return *this;
  }
  Scratch& s = scratch();
  mpq_mul(s.t.get_mpq_t(), re_.get_mpq_t(), o.re_.get_mpq_t());
  mpq_mul(s.u.get_mpq_t(), im_.get_mpq_t(), o.im_.get_mpq_t());
  mpq_sub(s.t.get_mpq_t(), s.t.get_mpq_t(), s.u.get_mpq_t());
  mpq_mul(s.u.get_mpq_t(), re_.get_mpq_t(), o.im_.get_mpq_t());
  mpq_mul(s.v.get_mpq_t(), im_.get_mpq_t(), o.re_.get_mpq_t());
  mpq_add(im_.get_mpq_t(), s.u.get_mpq_t(), s.v.get_mpq_t());
  mpq_swap(re_.get_mpq_t(), s.t.get_mpq_t());
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) fail(ErrorKind::Singular, "division by zero Gaussian rational");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational d = o.norm();
  Rational re = (re_ * o.re_ + im_ * o.im_) / d;
  Rational im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

namespace {

using MpqOp = void (*)(mpq_ptr, mpq_srcptr, mpq_srcptr);

// acc op= a * b for rationals.
void fma_part(mpq_ptr acc, const Rational& a, const Rational& b, MpqOp op) {
  if (sgn(a) == 0 || sgn(b) == 0) return;
  Rational& t = scratch().t;
  mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  op(acc, acc, t.get_mpq_t());
}

}  // namespace

void GaussianRational::add_product(const GaussianRational& a, const GaussianRational& b) {
  // (a + bi)(c + di) = (ac - bd) + (ad + bc) i
  fma_part(re_.get_mpq_t(), a.re_, b.re_, mpq_add);
  fma_part(re_.get_mpq_t(), a.im_, b.im_, mpq_sub);
  fma_part(im_.get_mpq_t(), a.re_, b.im_, mpq_add);
  fma_part(im_.get_mpq_t(), a.im_, b.re_, mpq_add);
}

void GaussianRational::sub_product(const GaussianRational& a, const GaussianRational& b) {
  fma_part(re_.get_mpq_t(), a.re_, b.re_, mpq_sub);
  fma_part(re_.get_mpq_t(), a.im_, b.im_, mpq_add);
  fma_part(im_.get_mpq_t(), a.re_, b.im_, mpq_sub);
  fma_part(im_.get_mpq_t(), a.im_, b.re_, mpq_sub);
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string s = re_.get_str();
  s += sgn(im_) < 0 ? "-" : "+";
  s += Rational(abs(im_)).get_str();
  s += "i";
  return s;
}

std::string fraction_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_fraction(const std::string& s) {
  Rational q;
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    fail(ErrorKind::Schema, "malformed rational '" + s + "'");
  }
  q.canonicalize();
  return q;
}

}  // namespace chaingeo
