#ifndef ROOTWIND_HALFINT_HPP
#define ROOTWIND_HALFINT_HPP

#include <string>

#include "rootwind/rational.hpp"

namespace rootwind {

// Element of (1/2)Z stored as twice its value. Cauchy indices and winding
// numbers live here; is_integer() distinguishes whole winding numbers.
class HalfInt {
  public:
    HalfInt() = default;
    static HalfInt whole(long n) { return HalfInt(2 * n); }
    static HalfInt half(long n) { return HalfInt(n); }

    long twice() const { return t_; }
    bool is_integer() const { return t_ % 2 == 0; }
    long as_integer() const {
        if (!is_integer()) throw std::logic_error("half-integer is not whole: " + str());
        return t_ / 2;
    }
    Rational as_rational() const { return Rational(t_, 2); }

    HalfInt operator+(HalfInt o) const { return HalfInt(t_ + o.t_); }
    HalfInt operator-(HalfInt o) const { return HalfInt(t_ - o.t_); }
    HalfInt operator-() const { return HalfInt(-t_); }
    HalfInt& operator+=(HalfInt o) {
        t_ += o.t_;
        return *this;
    }
    HalfInt operator*(long k) const { return HalfInt(t_ * k); }
    bool operator==(HalfInt o) const { return t_ == o.t_; }
    bool operator!=(HalfInt o) const { return t_ != o.t_; }
    bool operator<(HalfInt o) const { return t_ < o.t_; }
    bool operator<=(HalfInt o) const { return t_ <= o.t_; }

    std::string str() const {
        if (t_ % 2 == 0) return std::to_string(t_ / 2);
        return std::to_string(t_) + "/2";
    }

  private:
    explicit HalfInt(long twice) : t_(twice) {}
    long t_ = 0;
};

} // namespace rootwind

#endif
