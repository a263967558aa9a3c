#pragma once

#include <boost/rational.hpp>

namespace scholarnet {

// Exact fraction type for metrics whose denominators stay small
// (average tie strength, binary effectiveness).
using Rational = boost::rational<long long>;

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) /
           static_cast<double>(r.denominator());
}

}  // namespace scholarnet
