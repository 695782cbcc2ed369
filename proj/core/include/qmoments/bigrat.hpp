#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qmoments {

/// Arbitrary-precision rational in canonical form:
/// gcd(|numerator|, denominator) = 1, denominator >= 1, zero is 0/1.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}
    BigRat(long num, long den);

    /// Parses "123", "-4/7" or any base-10 mpq string.
    explicit BigRat(const std::string& s);

    static BigRat from_strings(const std::string& num, const std::string& den);

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string numerator() const { return v_.get_num().get_str(); }
    std::string denominator() const { return v_.get_den().get_str(); }

    /// "n" when integral, "n/d" otherwise.
    std::string str() const;

    BigRat operator-() const;
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o);

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }

    BigRat abs() const;
    BigRat inverse() const;

private:
    mpq_class v_;
};

} // namespace qmoments
