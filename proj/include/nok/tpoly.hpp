#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "nok/rational.hpp"

namespace nok {

/// Exact polynomial in t_1..t_n with rational coefficients.
class TPoly {
public:
    using Exponents = std::vector<int>;

    TPoly() = default;
    explicit TPoly(int nvars) : nvars_(nvars) {}

    static TPoly constant(const Rational& c, int nvars);
    /// t_i, 1-based.
    static TPoly var(int i, int nvars);

    [[nodiscard]] int nvars() const noexcept { return nvars_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
    [[nodiscard]] Rational coeff(const Exponents& e) const;
    /// Constant term if the polynomial is constant; nullopt-like false otherwise.
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] int total_degree() const noexcept;

    TPoly& operator+=(const TPoly& o);
    TPoly& operator-=(const TPoly& o);
    TPoly& operator*=(const TPoly& o) { return *this = *this * o; }
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(const TPoly& a, const TPoly& b);
    [[nodiscard]] TPoly operator-() const;
    [[nodiscard]] TPoly scaled(const Rational& c) const;

    [[nodiscard]] Rational evaluate(std::span<const Rational> t) const;

    friend bool operator==(const TPoly& a, const TPoly& b) = default;

    /// e.g. "t1^2*t2 - 1/2"; "0" for zero.
    [[nodiscard]] std::string to_string() const;

private:
    int nvars_ = 0;
    std::map<Exponents, Rational> terms_;

    void add_term(const Exponents& e, const Rational& c);
};

/// binom(T, k) = T (T-1) ... (T-k+1) / k!
[[nodiscard]] TPoly binomial(const TPoly& T, int k);

}  // namespace nok
