#ifndef LOWPROB_RATIONAL_HPP
#define LOWPROB_RATIONAL_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lowprob {

/**
 * Exact rational number backed by GMP.
 *
 * Values are kept in lowest terms with a positive denominator at all times;
 * every arithmetic operator returns a canonical result. There is no implicit
 * conversion from floating point.
 */
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}

    /// num/den, canonicalized. Throws InvalidInput when den == 0.
    Rational(long num, long den);

    /// Parses "a/b" or an integer string ("-3", "0", "12/8"). The
    /// denominator must be a positive integer; the result is canonical.
    /// Throws InvalidInput on anything else (whitespace, decimals, "1/0").
    static Rational parse(std::string_view text);

    /// Lowest-terms rendering: "1/2", "-3", "0".
    std::string str() const { return value_.get_str(); }

    /// Approximate decimal rendering, for human consumption only.
    double approx() const { return value_.get_d(); }

    std::string numerator_str() const { return value_.get_num().get_str(); }
    std::string denominator_str() const { return value_.get_den().get_str(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return cmp(lhs.value_, rhs.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
    {
        const int c = cmp(lhs.value_, rhs.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// True when numerator and denominator are coprime and den > 0.
    bool is_canonical() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

} // namespace lowprob

#endif
