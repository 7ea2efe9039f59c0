#ifndef WILF_BIGCOUNT_HPP
#define WILF_BIGCOUNT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wilf {

// Exact nonnegative counts; these grow like n!.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_decimal(const BigCount& x) { return x.str(); }

} // namespace wilf

#endif
