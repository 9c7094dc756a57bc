#include "weylfan/diagram.hpp"

#include <algorithm>
#include <stdexcept>

#include "weylfan/intersect.hpp"

namespace weylfan {

namespace {

void check_shape(const YoungDiagram& lambda, int n) {
  if (lambda.row_count() != n)
    throw std::invalid_argument("diagram must have exactly " + std::to_string(n) +
                                " rows");
  int prev = n;
  for (int r : lambda.rows) {
    if (r < 1 || r > n || r > prev)
      throw std::invalid_argument("rows must decrease weakly within the square");
    prev = r;
  }
  if (!lambda.labels.empty() &&
      static_cast<int>(lambda.labels.size()) != lambda.full_rows(n))
    throw std::invalid_argument("labels must cover exactly the full-length rows");
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("intersection number exceeds 64 bits");
  return r;
}

long long pow2(int e) {
  if (e < 0) throw std::logic_error("negative power of two in I-function");
  if (e >= 63) throw std::overflow_error("power of two exceeds 64 bits");
  return 1LL << e;
}

long long product_of_y(const std::vector<Corner>& corners, std::size_t from) {
  long long p = 1;
  for (std::size_t r = from; r < corners.size(); ++r) {
    p = checked_mul(p, binomial(corners[r].a, corners[r].c));
    p = checked_mul(p, binomial(corners[r].b, corners[r].c));
  }
  return p;
}

int sign_factor(int n, int s) { return ((n + s) % 2 == 0) ? 1 : -1; }

}  // namespace

int YoungDiagram::full_rows(int n) const {
  return static_cast<int>(std::count(rows.begin(), rows.end(), n));
}

int YoungDiagram::plus_labels() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), '+'));
}

int YoungDiagram::minus_labels() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), '-'));
}

YoungDiagram make_diagram(std::vector<int> rows, std::string labels) {
  YoungDiagram d{std::move(rows), std::move(labels)};
  for (char c : d.labels)
    if (c != '+' && c != '-')
      throw std::invalid_argument("diagram labels must be '+' or '-'");
  if (!d.empty()) check_shape(d, d.row_count());
  return d;
}

std::vector<Corner> corner_data(const YoungDiagram& lambda) {
  if (lambda.empty())
    throw std::invalid_argument("corner data of the zero diagram");
  const int n = lambda.row_count();
  check_shape(lambda, n);
  auto row = [&](int i) { return i <= n ? lambda.rows[i - 1] : 0; };
  std::vector<int> positions;
  for (int i = 1; i <= n; ++i)
    if (row(i) > row(i + 1)) positions.push_back(i);
  std::vector<Corner> corners;
  int prev = 0;
  for (std::size_t r = 0; r < positions.size(); ++r) {
    int i = positions[r];
    int next_len = r + 1 < positions.size() ? row(positions[r + 1]) : 0;
    corners.push_back(Corner{i, i - prev - 1, row(i) - next_len - 1,
                             row(i) + i - n - 1});
    prev = i;
  }
  return corners;
}

long long binomial(long long x, long long y) {
  if (y < 0 || y > x) return 0;
  y = std::min(y, x - y);
  long long result = 1;
  for (long long k = 1; k <= y; ++k)
    result = checked_mul(result, x - y + k) / k;
  return result;
}

long long I_A(const YoungDiagram& lambda) {
  if (lambda.empty()) return 0;
  auto corners = corner_data(lambda);
  return sign_factor(lambda.row_count(), static_cast<int>(corners.size())) *
         product_of_y(corners, 0);
}

long long I_B(const YoungDiagram& lambda, int n) {
  if (lambda.empty()) return 0;
  check_shape(lambda, n);
  return checked_mul(pow2(n - lambda.rows[0]), I_A(lambda));
}

long long I_C(const YoungDiagram& lambda, int n) {
  if (lambda.empty()) return 0;
  check_shape(lambda, n);
  // exponent n - lambda_1 + m - 1 with m full rows; nonnegative in both the
  // m = 0 and lambda_1 = n cases
  return checked_mul(pow2(n - lambda.rows[0] + lambda.full_rows(n) - 1),
                     I_A(lambda));
}

long long I_D(const YoungDiagram& lambda, int n) {
  if (lambda.empty()) return 0;
  check_shape(lambda, n);
  const auto corners = corner_data(lambda);
  const int m = lambda.full_rows(n);
  const int m_plus = lambda.plus_labels();
  const int m_minus = lambda.minus_labels();
  if (m > 0 && m_plus + m_minus != m)
    throw std::invalid_argument("type D diagram is missing its row labels");
  const Corner& c1 = corners.front();
  long long y1;
  if (m <= 1) {
    y1 = checked_mul(checked_mul(pow2((n - lambda.rows[0] - 1) * (1 - m)),
                                 binomial(c1.a, c1.c)),
                     binomial(c1.b, c1.c));
  } else if (m_plus > 0 && m_minus > 0) {
    y1 = -binomial(c1.b - 1, c1.c - 1);
  } else {
    y1 = checked_mul(pow2(c1.a) - c1.a - 1, binomial(c1.b, c1.c)) +
         binomial(c1.b - 1, c1.c);
  }
  return sign_factor(n, static_cast<int>(corners.size())) *
         checked_mul(y1, product_of_y(corners, 1));
}

long long I_G2(const YoungDiagram& lambda) {
  if (lambda.empty()) return 0;
  check_shape(lambda, 2);
  if (lambda.rows == std::vector<int>{2, 1}) return 1;
  if (lambda.rows == std::vector<int>{1, 1}) return -3;
  if (lambda.rows == std::vector<int>{2, 2}) return -1;
  throw std::logic_error("unreachable G2 diagram");
}

bool vanishing_predicate(const YoungDiagram& lambda) {
  for (const Corner& c : corner_data(lambda))
    if (c.c < 0 || c.c > c.b) return false;
  return true;
}

YoungDiagram build_lambda(const WeylElement& u, const WeylElement& v,
                          const WeylElement& w) {
  if (u.system != v.system || u.system != w.system)
    throw std::invalid_argument("build_lambda needs one common root system");
  if (descent_count(u) + descent_count(v) != descent_count(w))
    return YoungDiagram{};
  std::vector<SubsetLabel> labels = descent_labels(u);
  for (auto& s : descent_labels(v)) labels.push_back(std::move(s));
  for (auto& s : ascent_labels(w)) labels.push_back(std::move(s));
  // d(u) + d(v) = d(w) makes this a multiset of exactly rank-many labels
  if (!labels_form_chain(u.system, labels)) return YoungDiagram{};
  return diagram_of_chain(u.system, labels);
}

std::string format_diagram(const YoungDiagram& lambda) {
  std::string out = "[";
  for (int i = 0; i < lambda.row_count(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.rows[i]);
  }
  out += ']';
  out += lambda.labels;
  return out;
}

}  // namespace weylfan
