#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylfan/diagram.hpp"
#include "weylfan/subset_label.hpp"
#include "weylfan/weyl.hpp"

namespace weylfan {

// A product of divisor classes tau_S, stored as the multiset of its factor
// labels in canonical (size, lexicographic) order.
struct TauMonomial {
  RootSystem system;
  std::vector<SubsetLabel> factors;

  int degree() const { return static_cast<int>(factors.size()); }
  std::string str() const;  // "3;1,2,3,5;1,2,3,5;3" with ';' between factors

  friend bool operator==(const TauMonomial& a, const TauMonomial& b) {
    return a.system == b.system && a.factors == b.factors;
  }
};

TauMonomial make_monomial(const RootSystem& sys, std::vector<SubsetLabel> factors);
TauMonomial parse_monomial(const RootSystem& sys, std::string_view text);
TauMonomial monomial_product(const TauMonomial& a, const TauMonomial& b);

// Validity of a single coweight name for the given system: type A wants a
// nonempty proper subset of [n+1]; B/C a nonempty subset of [±n] without
// any {i, -i} pair; D additionally forbids cardinality n-1; G2 admits the
// twelve labels of its coweight list.
bool valid_label(const RootSystem& sys, const SubsetLabel& s);
void check_label(const RootSystem& sys, const SubsetLabel& s);

// Whether the factors can be sorted into a nested chain; for type D, whether
// they form a subchain of a basic chain (at most two distinct full-size sets
// differing in a single sign, everything smaller nested below both).
bool labels_form_chain(const RootSystem& sys, std::span<const SubsetLabel> factors);
bool is_chain(const TauMonomial& m);

// The diagram of sorted cardinalities of a chain monomial, with parity
// labels on the full-size rows for type D.
YoungDiagram diagram_of_chain(const RootSystem& sys,
                              std::span<const SubsetLabel> factors);

enum class IntersectionReason { NotChain, DegreeMismatch, Formula };
const char* reason_name(IntersectionReason r);

struct IntersectionResult {
  long long value = 0;
  YoungDiagram diagram;
  IntersectionReason reason = IntersectionReason::Formula;
};

// <tau_{S_1} ... tau_{S_n}>: zero with the reason recorded unless the degree
// is exactly the rank and the factors chain, otherwise the family's
// I-function on the cardinality diagram.
IntersectionResult intersection_number(const TauMonomial& m);

// [X_u] as the product of the divisors named by the descents of u, and
// [Y^w] as the product named by the ascents of w.
TauMonomial class_X(const WeylElement& u);
TauMonomial class_Y(const WeylElement& w);

// <[Y^w][X_u][X_v]>, computed from the diagram of D(u) ⊔ D(v) ⊔ A(w).
long long triple_number(const WeylElement& u, const WeylElement& v,
                        const WeylElement& w);

}  // namespace weylfan
