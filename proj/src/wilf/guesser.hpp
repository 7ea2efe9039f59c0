#ifndef WILF_GUESSER_HPP
#define WILF_GUESSER_HPP

#include "wilf/bigcount.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wilf {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int default_guard = 5;

// sum_{j=0}^{d} p_j(n) a(n+j) = 0, with a(1) the first term. Coefficients are
// integers with no common factor and the leading coefficient of p_d positive.
class RecurrenceCandidate {
public:
  // coefficients[j][l] multiplies n^l in p_j. Throws InvalidInput if p_d is
  // identically zero or the table is empty.
  explicit RecurrenceCandidate(std::vector<std::vector<BigInt>> coefficients);

  int order() const { return static_cast<int>(coefficients_.size()) - 1; }
  int degree() const;
  const std::vector<std::vector<BigInt>>& coefficients() const { return coefficients_; }
  BigInt evaluate(int j, long n) const;

  // "(n+2)*a(n+1) - (4*n+2)*a(n) = 0"
  std::string text() const;
  // Structured form, labelled as a conjecture.
  std::string json() const;

  bool operator==(const RecurrenceCandidate&) const = default;

private:
  std::vector<std::vector<BigInt>> coefficients_;
};

// Terms needed to search up to the given bounds.
int required_terms(int max_order, int max_degree, int guard = default_guard);

// Kernel search at one (order, degree): fit on all but the last `guard`
// terms, then require the fit to hold on those too.
std::optional<RecurrenceCandidate> fit_recurrence(std::span<const BigCount> terms, int order, int degree,
                                                  int guard = default_guard);

// Tries (order, degree) by increasing order + degree, then order. Throws
// InvalidInput when fewer than required_terms() terms are supplied.
std::optional<RecurrenceCandidate> guess_recurrence(std::span<const BigCount> terms, int max_order,
                                                    int max_degree, int guard = default_guard);

bool verify_recurrence(const RecurrenceCandidate& rec, std::span<const BigCount> terms);

} // namespace wilf

#endif
