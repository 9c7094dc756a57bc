#include "weylfan/intersect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylfan {

namespace {

// number of common elements of two canonically sorted labels
int intersection_size(const SubsetLabel& a, const SubsetLabel& b) {
  int count = 0;
  for (int v : a.elems())
    if (b.contains(v)) ++count;
  return count;
}

bool chain_of_sorted(std::span<const SubsetLabel> sorted) {
  for (std::size_t k = 1; k < sorted.size(); ++k)
    if (!sorted[k - 1].subset_of(sorted[k])) return false;
  return true;
}

// Type D: the sorted factors must fit below a basic chain
//   u[1] ⊂ ... ⊂ u[n-2] ⊂ {u[n]_+, u[n]_-},
// so at most two distinct full-size sets, and if two then they differ in
// exactly one sign; everything smaller is nested and lies below both.
bool subchain_of_basic(int n, std::span<const SubsetLabel> sorted) {
  std::size_t first_full = sorted.size();
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (sorted[k].size() == n) {
      first_full = k;
      break;
    }
  }
  if (!chain_of_sorted(sorted.subspan(0, first_full))) return false;
  std::vector<const SubsetLabel*> fulls;
  for (std::size_t k = first_full; k < sorted.size(); ++k) {
    const SubsetLabel& s = sorted[k];
    if (fulls.empty() || *fulls.back() != s) fulls.push_back(&s);
  }
  if (fulls.size() > 2) return false;
  if (fulls.size() == 2 && intersection_size(*fulls[0], *fulls[1]) != n - 1)
    return false;
  if (first_full > 0) {
    const SubsetLabel& top_small = sorted[first_full - 1];
    for (const SubsetLabel* f : fulls)
      if (!top_small.subset_of(*f)) return false;
  }
  return true;
}

}  // namespace

TauMonomial make_monomial(const RootSystem& sys, std::vector<SubsetLabel> factors) {
  for (const SubsetLabel& s : factors) check_label(sys, s);
  std::sort(factors.begin(), factors.end());
  return TauMonomial{sys, std::move(factors)};
}

TauMonomial parse_monomial(const RootSystem& sys, std::string_view text) {
  std::vector<SubsetLabel> factors;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ';')) factors.push_back(SubsetLabel::parse(token));
  if (factors.empty()) throw std::invalid_argument("empty monomial");
  return make_monomial(sys, std::move(factors));
}

TauMonomial monomial_product(const TauMonomial& a, const TauMonomial& b) {
  if (a.system != b.system)
    throw std::invalid_argument("cannot multiply monomials of different systems");
  std::vector<SubsetLabel> factors = a.factors;
  factors.insert(factors.end(), b.factors.begin(), b.factors.end());
  return make_monomial(a.system, std::move(factors));
}

std::string TauMonomial::str() const {
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += ';';
    out += factors[k].str();
  }
  return out;
}

bool valid_label(const RootSystem& sys, const SubsetLabel& s) {
  if (s.size() == 0) return false;
  const int n = sys.rank;
  switch (sys.family) {
    case Family::A: {
      if (s.size() > n) return false;  // proper subset of [n+1]
      for (int v : s.elems())
        if (v < 1 || v > n + 1) return false;
      return true;
    }
    case Family::B:
    case Family::C:
    case Family::D: {
      if (s.size() > n) return false;
      if (sys.family == Family::D && s.size() == n - 1) return false;
      for (int v : s.elems()) {
        if (std::abs(v) < 1 || std::abs(v) > n) return false;
        if (s.contains(-v)) return false;
      }
      return true;
    }
    case Family::G2: {
      for (int v : s.elems())
        if (std::abs(v) < 1 || std::abs(v) > 3) return false;
      if (s.size() == 1) return true;
      if (s.size() != 2) return false;
      int a = s.elems()[0], b = s.elems()[1];
      // pairs have distinct absolute values and opposite signs
      return std::abs(a) != std::abs(b) && (a > 0) != (b > 0);
    }
  }
  return false;
}

void check_label(const RootSystem& sys, const SubsetLabel& s) {
  if (!valid_label(sys, s))
    throw std::invalid_argument("label '" + s.str() + "' is not a coweight of " +
                                sys.name());
}

bool labels_form_chain(const RootSystem& sys, std::span<const SubsetLabel> factors) {
  std::vector<SubsetLabel> sorted(factors.begin(), factors.end());
  std::sort(sorted.begin(), sorted.end());
  if (sys.family == Family::D) return subchain_of_basic(sys.rank, sorted);
  return chain_of_sorted(sorted);
}

bool is_chain(const TauMonomial& m) {
  return labels_form_chain(m.system, m.factors);
}

YoungDiagram diagram_of_chain(const RootSystem& sys,
                              std::span<const SubsetLabel> factors) {
  std::vector<int> rows;
  rows.reserve(factors.size());
  std::string labels;
  for (const SubsetLabel& s : factors) {
    rows.push_back(s.size());
    if (sys.family == Family::D && s.size() == sys.rank)
      labels += (s.negatives() % 2 == 0) ? '+' : '-';
  }
  std::sort(rows.begin(), rows.end(), std::greater<int>());
  std::sort(labels.begin(), labels.end());  // '+' before '-'
  return make_diagram(std::move(rows), std::move(labels));
}

const char* reason_name(IntersectionReason r) {
  switch (r) {
    case IntersectionReason::NotChain: return "not_chain";
    case IntersectionReason::DegreeMismatch: return "degree_mismatch";
    case IntersectionReason::Formula: return "formula";
  }
  return "?";
}

IntersectionResult intersection_number(const TauMonomial& m) {
  const int n = m.system.rank;
  if (m.degree() != n)
    return IntersectionResult{0, YoungDiagram{}, IntersectionReason::DegreeMismatch};
  if (!is_chain(m))
    return IntersectionResult{0, YoungDiagram{}, IntersectionReason::NotChain};
  YoungDiagram lambda = diagram_of_chain(m.system, m.factors);
  long long value = 0;
  switch (m.system.family) {
    case Family::A: value = I_A(lambda); break;
    case Family::B: value = I_B(lambda, n); break;
    case Family::C: value = I_C(lambda, n); break;
    case Family::D: value = I_D(lambda, n); break;
    case Family::G2: value = I_G2(lambda); break;
  }
  return IntersectionResult{value, std::move(lambda), IntersectionReason::Formula};
}

TauMonomial class_X(const WeylElement& u) {
  return make_monomial(u.system, descent_labels(u));
}

TauMonomial class_Y(const WeylElement& w) {
  return make_monomial(w.system, ascent_labels(w));
}

long long triple_number(const WeylElement& u, const WeylElement& v,
                        const WeylElement& w) {
  YoungDiagram lambda = build_lambda(u, v, w);
  const int n = u.system.rank;
  switch (u.system.family) {
    case Family::A: return I_A(lambda);
    case Family::B: return I_B(lambda, n);
    case Family::C: return I_C(lambda, n);
    case Family::D: return I_D(lambda, n);
    case Family::G2: return I_G2(lambda);
  }
  return 0;
}

}  // namespace weylfan
