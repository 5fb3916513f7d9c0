#ifndef MOR_BIGINT_HPP
#define MOR_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace mor {

// Exponents and group orders overflow 64 bits quickly (p^d - 1); element
// values in Z_p always fit a machine word.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt bigint_from_decimal(const std::string& s) {
    return BigInt(s);
}

inline std::size_t bit_length(const BigInt& v) {
    return v == 0 ? 0 : boost::multiprecision::msb(v) + 1;
}

inline bool bit_test(const BigInt& v, std::size_t i) {
    return boost::multiprecision::bit_test(v, static_cast<unsigned>(i));
}

}  // namespace mor

#endif
