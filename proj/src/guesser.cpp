#include "wilf/guesser.hpp"

#include "wilf/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <limits>
#include <stdexcept>

namespace wilf {

using BigRational = boost::multiprecision::cpp_rational;

namespace {

void trim(std::vector<BigInt>& p) {
  while (p.size() > 1 && p.back() == 0)
    p.pop_back();
}

bool is_zero(const std::vector<BigInt>& p) {
  for (const auto& c : p)
    if (c != 0)
      return false;
  return true;
}

} // namespace

RecurrenceCandidate::RecurrenceCandidate(std::vector<std::vector<BigInt>> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || is_zero(coefficients_.back()))
    throw InvalidInput("recurrence needs a nonzero leading polynomial");
  std::size_t width = 0;
  BigInt g = 0;
  for (auto& p : coefficients_) {
    trim(p);
    width = std::max(width, p.size());
    for (const auto& c : p)
      g = gcd(g, c);
  }
  for (auto& p : coefficients_)
    p.resize(width, 0);
  const auto& lead = coefficients_.back();
  std::size_t top = width;
  while (lead[top - 1] == 0)
    --top;
  if (lead[top - 1] < 0)
    g = -g;
  for (auto& p : coefficients_)
    for (auto& c : p)
      c /= g;
}

int RecurrenceCandidate::degree() const { return static_cast<int>(coefficients_.front().size()) - 1; }

BigInt RecurrenceCandidate::evaluate(int j, long n) const {
  BigInt v = 0;
  const auto& p = coefficients_[static_cast<std::size_t>(j)];
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    v = v * n + *it;
  return v;
}

namespace {

std::string poly_text(const std::vector<BigInt>& p) {
  std::string out;
  for (std::size_t l = p.size(); l-- > 0;) {
    const BigInt& c = p[l];
    if (c == 0)
      continue;
    BigInt mag = abs(c);
    if (!out.empty())
      out += c < 0 ? "-" : "+";
    else if (c < 0)
      out += "-";
    if (l == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1)
      out += mag.str() + "*";
    out += l == 1 ? "n" : "n^" + std::to_string(l);
  }
  return out;
}

std::size_t monomials(const std::vector<BigInt>& p) {
  std::size_t c = 0;
  for (const auto& x : p)
    c += x != 0;
  return c;
}

} // namespace

std::string RecurrenceCandidate::text() const {
  std::string out;
  for (int j = order(); j >= 0; --j) {
    std::vector<BigInt> p = coefficients_[static_cast<std::size_t>(j)];
    trim(p);
    if (is_zero(p))
      continue;
    bool negative = p.back() < 0;
    if (negative)
      for (auto& c : p)
        c = -c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string term = j == 0 ? "a(n)" : "a(n+" + std::to_string(j) + ")";
    if (p.size() == 1)
      out += p[0] == 1 ? term : p[0].str() + "*" + term;
    else if (monomials(p) == 1)
      out += poly_text(p) + "*" + term;
    else
      out += "(" + poly_text(p) + ")*" + term;
  }
  return out + " = 0";
}

std::string RecurrenceCandidate::json() const {
  nlohmann::ordered_json doc;
  doc["schema_version"] = 1;
  doc["status"] = "CONJECTURE";
  doc["recurrence"] = text();
  doc["order"] = order();
  doc["degree"] = degree();
  doc["first_index"] = 1;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& p : coefficients_) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& c : p) {
      if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
        row.push_back(static_cast<long long>(c));
      else
        row.push_back(c.str());
    }
    coeffs.push_back(std::move(row));
  }
  doc["coefficients"] = std::move(coeffs);
  return doc.dump() + "\n";
}

int required_terms(int max_order, int max_degree, int guard) {
  return (max_order + 1) * (max_degree + 1) + max_order + guard;
}

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

// Row m, column j*(e+1)+l holds n^l a(n+j) at n = m + 1.
Matrix build_system(std::span<const BigCount> terms, int d, int e, int rows) {
  Matrix a(static_cast<std::size_t>(rows), std::vector<BigInt>(static_cast<std::size_t>((d + 1) * (e + 1))));
  for (int m = 0; m < rows; ++m) {
    long n = m + 1;
    for (int j = 0; j <= d; ++j) {
      BigInt power = 1;
      for (int l = 0; l <= e; ++l) {
        a[static_cast<std::size_t>(m)][static_cast<std::size_t>(j * (e + 1) + l)] =
            power * terms[static_cast<std::size_t>(m + j)];
        power *= n;
      }
    }
  }
  return a;
}

// Fraction-free (Bareiss) reduction to row echelon form. Returns the pivot
// column of each nonzero row.
std::vector<std::size_t> bareiss(Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty())
    return pivots;
  std::size_t rows = a.size();
  std::size_t cols = a.front().size();
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t p = row;
    while (p < rows && a[p][col] == 0)
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[row]);
    pivots.push_back(col);
    for (std::size_t i = row + 1; i < rows; ++i) {
      for (std::size_t j = col + 1; j < cols; ++j) {
        BigInt num = a[row][col] * a[i][j] - a[i][col] * a[row][j];
        BigInt q, r;
        divide_qr(num, prev, q, r);
        if (r != 0)
          throw std::logic_error("fraction-free elimination lost exactness");
        a[i][j] = std::move(q);
      }
      a[i][col] = 0;
    }
    prev = a[row][col];
    ++row;
  }
  return pivots;
}

// Kernel basis vector with free column `free` set to 1 and the other free
// columns 0, scaled to coprime integers.
std::vector<BigInt> kernel_vector(const Matrix& a, const std::vector<std::size_t>& pivots, std::size_t cols,
                                  std::size_t free) {
  std::vector<BigRational> x(cols, 0);
  x[free] = 1;
  for (std::size_t r = pivots.size(); r-- > 0;) {
    std::size_t pc = pivots[r];
    BigRational s = 0;
    for (std::size_t j = pc + 1; j < cols; ++j)
      if (x[j] != 0)
        s += BigRational(a[r][j]) * x[j];
    x[pc] = -s / BigRational(a[r][pc]);
  }
  BigInt l = 1;
  for (const auto& v : x)
    l = lcm(l, BigInt(denominator(v)));
  std::vector<BigInt> out(cols);
  for (std::size_t j = 0; j < cols; ++j)
    out[j] = BigInt(numerator(x[j]) * (l / denominator(x[j])));
  return out;
}

} // namespace

std::optional<RecurrenceCandidate> fit_recurrence(std::span<const BigCount> terms, int order, int degree, int guard) {
  if (order < 0 || degree < 0 || guard < 0)
    throw InvalidInput("order, degree and guard must be nonnegative");
  int total = static_cast<int>(terms.size());
  int rows = total - guard - order;
  int cols = (order + 1) * (degree + 1);
  if (rows < cols)
    throw InvalidInput("need at least " + std::to_string(required_terms(order, degree, guard)) + " terms, got " +
                       std::to_string(total));
  Matrix a = build_system(terms, order, degree, rows);
  auto pivots = bareiss(a);
  std::vector<char> is_pivot(static_cast<std::size_t>(cols), 0);
  for (auto p : pivots)
    is_pivot[p] = 1;
  for (std::size_t f = 0; f < static_cast<std::size_t>(cols); ++f) {
    if (is_pivot[f])
      continue;
    auto v = kernel_vector(a, pivots, static_cast<std::size_t>(cols), f);
    std::vector<std::vector<BigInt>> coeffs(static_cast<std::size_t>(order + 1));
    for (int j = 0; j <= order; ++j)
      coeffs[static_cast<std::size_t>(j)].assign(v.begin() + j * (degree + 1), v.begin() + (j + 1) * (degree + 1));
    if (is_zero(coeffs.back()))
      continue;
    RecurrenceCandidate rec(std::move(coeffs));
    if (verify_recurrence(rec, terms))
      return rec;
  }
  return std::nullopt;
}

std::optional<RecurrenceCandidate> guess_recurrence(std::span<const BigCount> terms, int max_order, int max_degree,
                                                    int guard) {
  if (max_order < 0 || max_degree < 0 || guard < 0)
    throw InvalidInput("bounds and guard must be nonnegative");
  int need = required_terms(max_order, max_degree, guard);
  if (static_cast<int>(terms.size()) < need)
    throw InvalidInput("need at least " + std::to_string(need) + " terms, got " + std::to_string(terms.size()));
  for (int sum = 0; sum <= max_order + max_degree; ++sum) {
    for (int d = 0; d <= std::min(sum, max_order); ++d) {
      int e = sum - d;
      if (e > max_degree)
        continue;
      if (auto rec = fit_recurrence(terms, d, e, guard))
        return rec;
    }
  }
  return std::nullopt;
}

bool verify_recurrence(const RecurrenceCandidate& rec, std::span<const BigCount> terms) {
  int d = rec.order();
  for (long n = 1; n + d <= static_cast<long>(terms.size()); ++n) {
    BigInt s = 0;
    for (int j = 0; j <= d; ++j)
      s += rec.evaluate(j, n) * terms[static_cast<std::size_t>(n - 1 + j)];
    if (s != 0)
      return false;
  }
  return true;
}

} // namespace wilf
