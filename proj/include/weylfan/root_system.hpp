#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weylfan {

enum class Family { A, B, C, D, G2 };

// One of the five supported root systems.  The rank is the number of simple
// roots; G2 always has rank 2 and lives in a 3-dimensional ambient space.
struct RootSystem {
  Family family = Family::A;
  int rank = 1;

  std::string name() const;  // "A3", "B2", "G2", ...

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.family == b.family && a.rank == b.rank;
  }
  friend bool operator!=(const RootSystem& a, const RootSystem& b) {
    return !(a == b);
  }
};

RootSystem make_system(Family family, int rank);
RootSystem parse_system(std::string_view family_name, int rank);
std::string family_name(Family family);

// Length of the one-line notation: n+1 for A_n, n for B/C/D, 3 for G2.
int oneline_size(const RootSystem& sys);

// Order of the Weyl group: (n+1)!, 2^n n!, 2^{n-1} n!, or 12.
unsigned long long weyl_order(const RootSystem& sys);

// Exact integral model of the root system in its ambient coordinates.
// Coweights are stored scaled by a per-coweight denominator so that all
// vectors are integer: omega_i = coweight_num[i] / coweight_den[i].
// `dominant` is a positive multiple of omega_1 + ... + omega_rank; a root is
// positive exactly when its pairing with `dominant` is positive.
struct RootSystemGeometry {
  int ambient_dim = 0;
  std::vector<std::vector<long long>> simple_roots;
  std::vector<std::vector<long long>> positive_roots;
  std::vector<std::vector<long long>> coweight_num;
  std::vector<long long> coweight_den;
  std::vector<long long> dominant;
};

const RootSystemGeometry& geometry(const RootSystem& sys);

}  // namespace weylfan
