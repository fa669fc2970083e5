#ifndef M0NLAB_NUMERIC_HPP
#define M0NLAB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace m0nlab {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(int k) {
    Int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline Int binomial(int a, int b) {
    if (b < 0 || b > a) return 0;
    Int r = 1;
    for (int i = 0; i < b; ++i) { r *= (a - i); r /= (i + 1); }
    return r;
}

// Exact division; the quotient must be integral.
inline Int exact_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (q * b != a) throw std::runtime_error("exact_div: non-integral quotient");
    return q;
}

} // namespace m0nlab

#endif
