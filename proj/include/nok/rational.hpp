#pragma once

#include <gmpxx.h>

#include <string>

namespace nok {

using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q" with q >= 1, including integers ("3/1").
[[nodiscard]] inline std::string to_fraction_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace nok
