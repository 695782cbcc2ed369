#include "qmoments/bigrat.hpp"

namespace qmoments {

BigRat::BigRat(long num, long den) {
    if (den == 0) throw std::domain_error("BigRat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

BigRat::BigRat(const std::string& s) {
    if (v_.set_str(s, 10) != 0) throw std::invalid_argument("BigRat: cannot parse '" + s + "'");
    if (v_.get_den() == 0) throw std::domain_error("BigRat: zero denominator");
    v_.canonicalize();
}

BigRat BigRat::from_strings(const std::string& num, const std::string& den) {
    return BigRat(num + "/" + den);
}

std::string BigRat::str() const {
    return is_integer() ? numerator() : numerator() + "/" + denominator();
}

BigRat BigRat::operator-() const {
    BigRat r;
    r.v_ = -v_;
    return r;
}

BigRat& BigRat::operator/=(const BigRat& o) {
    if (o.is_zero()) throw std::domain_error("BigRat: division by zero");
    v_ /= o.v_;
    return *this;
}

BigRat BigRat::abs() const {
    BigRat r;
    r.v_ = ::abs(v_);
    return r;
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw std::domain_error("BigRat: inverse of zero");
    BigRat r;
    r.v_ = 1 / v_;
    return r;
}

} // namespace qmoments
