#include "weylfan/root_system.hpp"

#include <map>
#include <memory>
#include <numeric>
#include <mutex>
#include <stdexcept>

namespace weylfan {

namespace {

std::vector<long long> unit(int dim, int index, long long value = 1) {
  std::vector<long long> v(dim, 0);
  v[index] = value;
  return v;
}

// t_i - t_j in ambient coordinates (indices 0-based).
std::vector<long long> diff(int dim, int i, int j) {
  std::vector<long long> v(dim, 0);
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<long long> sum2(int dim, int i, int j) {
  std::vector<long long> v(dim, 0);
  v[i] = 1;
  v[j] = 1;
  return v;
}

RootSystemGeometry build_geometry(const RootSystem& sys) {
  RootSystemGeometry g;
  const int n = sys.rank;
  switch (sys.family) {
    case Family::A: {
      g.ambient_dim = n + 1;
      for (int i = 0; i < n; ++i) g.simple_roots.push_back(diff(n + 1, i, i + 1));
      for (int i = 0; i < n + 1; ++i)
        for (int j = i + 1; j < n + 1; ++j) g.positive_roots.push_back(diff(n + 1, i, j));
      // omega_i = e_1+...+e_i - i/(n+1) * (e_1+...+e_{n+1}), scaled by n+1.
      for (int i = 1; i <= n; ++i) {
        std::vector<long long> w(n + 1, -static_cast<long long>(i));
        for (int k = 0; k < i; ++k) w[k] += n + 1;
        g.coweight_num.push_back(std::move(w));
        g.coweight_den.push_back(n + 1);
      }
      break;
    }
    case Family::B:
    case Family::C: {
      g.ambient_dim = n;
      for (int i = 0; i < n - 1; ++i) g.simple_roots.push_back(diff(n, i, i + 1));
      g.simple_roots.push_back(unit(n, n - 1, sys.family == Family::C ? 2 : 1));
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          g.positive_roots.push_back(diff(n, i, j));
          g.positive_roots.push_back(sum2(n, i, j));
        }
      for (int i = 0; i < n; ++i)
        g.positive_roots.push_back(unit(n, i, sys.family == Family::C ? 2 : 1));
      // omega_i = e_1+...+e_i, except omega_n = (e_1+...+e_n)/2 for type C.
      for (int i = 1; i <= n; ++i) {
        std::vector<long long> w(n, 0);
        for (int k = 0; k < i; ++k) w[k] = 1;
        g.coweight_num.push_back(std::move(w));
        g.coweight_den.push_back(sys.family == Family::C && i == n ? 2 : 1);
      }
      break;
    }
    case Family::D: {
      g.ambient_dim = n;
      for (int i = 0; i < n - 2; ++i) g.simple_roots.push_back(diff(n, i, i + 1));
      g.simple_roots.push_back(sum2(n, n - 2, n - 1));   // alpha_{n-1} = t_{n-1} + t_n
      g.simple_roots.push_back(diff(n, n - 2, n - 1));   // alpha_n     = t_{n-1} - t_n
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          g.positive_roots.push_back(diff(n, i, j));
          g.positive_roots.push_back(sum2(n, i, j));
        }
      // omega_i = e_1+...+e_i for i <= n-2, omega_{n-1} and omega_n are the
      // half-sum vectors with e_n taken with sign + and - respectively.
      for (int i = 1; i <= n - 2; ++i) {
        std::vector<long long> w(n, 0);
        for (int k = 0; k < i; ++k) w[k] = 1;
        g.coweight_num.push_back(std::move(w));
        g.coweight_den.push_back(1);
      }
      {
        std::vector<long long> wp(n, 1);
        g.coweight_num.push_back(wp);
        g.coweight_den.push_back(2);
        std::vector<long long> wm(n, 1);
        wm[n - 1] = -1;
        g.coweight_num.push_back(std::move(wm));
        g.coweight_den.push_back(2);
      }
      break;
    }
    case Family::G2: {
      g.ambient_dim = 3;
      g.simple_roots.push_back({1, -1, 0});   // t_1 - t_2
      g.simple_roots.push_back({-2, 1, 1});   // -2 t_1 + t_2 + t_3
      g.positive_roots = {
          {1, -1, 0}, {-1, 0, 1}, {0, -1, 1},           // short
          {-2, 1, 1}, {1, -2, 1}, {-1, -1, 2},          // long
      };
      g.coweight_num.push_back({0, -1, 1});  // omega_1 = e_3 - e_2
      g.coweight_den.push_back(1);
      g.coweight_num.push_back({-1, -1, 2});  // omega_2 = (2 e_3 - e_1 - e_2)/3
      g.coweight_den.push_back(3);
      break;
    }
  }
  // dominant = lcm of denominators times (omega_1 + ... + omega_rank).
  long long lcm = 1;
  for (long long d : g.coweight_den) lcm = lcm / std::gcd(lcm, d) * d;
  g.dominant.assign(g.ambient_dim, 0);
  for (std::size_t i = 0; i < g.coweight_num.size(); ++i) {
    long long f = lcm / g.coweight_den[i];
    for (int k = 0; k < g.ambient_dim; ++k) g.dominant[k] += f * g.coweight_num[i][k];
  }
  return g;
}

}  // namespace

std::string family_name(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::G2: return "G2";
  }
  return "?";
}

std::string RootSystem::name() const {
  if (family == Family::G2) return "G2";
  return family_name(family) + std::to_string(rank);
}

RootSystem make_system(Family family, int rank) {
  RootSystem sys{family, rank};
  switch (family) {
    case Family::A:
    case Family::B:
    case Family::C:
      if (rank < 1) throw std::invalid_argument("rank must be at least 1");
      break;
    case Family::D:
      if (rank < 2) throw std::invalid_argument("type D requires rank >= 2");
      break;
    case Family::G2:
      if (rank != 2 && rank != 0)
        throw std::invalid_argument("G2 has no rank parameter");
      sys.rank = 2;
      break;
  }
  return sys;
}

RootSystem parse_system(std::string_view family_str, int rank) {
  if (family_str == "A") return make_system(Family::A, rank);
  if (family_str == "B") return make_system(Family::B, rank);
  if (family_str == "C") return make_system(Family::C, rank);
  if (family_str == "D") return make_system(Family::D, rank);
  if (family_str == "G2") return make_system(Family::G2, rank == 0 ? 2 : rank);
  throw std::invalid_argument("unknown root system family '" +
                              std::string(family_str) + "'");
}

int oneline_size(const RootSystem& sys) {
  switch (sys.family) {
    case Family::A: return sys.rank + 1;
    case Family::G2: return 3;
    default: return sys.rank;
  }
}

unsigned long long weyl_order(const RootSystem& sys) {
  constexpr unsigned long long kMax = ~0ULL;
  // saturating product; callers compare against size caps
  auto mul = [](unsigned long long a, unsigned long long b) {
    unsigned long long r;
    return __builtin_mul_overflow(a, b, &r) ? kMax : r;
  };
  auto factorial = [&](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f = mul(f, static_cast<unsigned long long>(i));
    return f;
  };
  switch (sys.family) {
    case Family::A: return factorial(sys.rank + 1);
    case Family::B:
    case Family::C:
      return sys.rank >= 64 ? kMax : mul(factorial(sys.rank), 1ULL << sys.rank);
    case Family::D:
      return sys.rank >= 65 ? kMax
                            : mul(factorial(sys.rank), 1ULL << (sys.rank - 1));
    case Family::G2: return 12;
  }
  return 0;
}

const RootSystemGeometry& geometry(const RootSystem& sys) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<RootSystemGeometry>> cache;
  std::scoped_lock lock(mutex);
  auto key = std::make_pair(static_cast<int>(sys.family), sys.rank);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, std::make_unique<RootSystemGeometry>(build_geometry(sys)))
             .first;
  }
  return *it->second;
}

}  // namespace weylfan
