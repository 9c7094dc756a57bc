#include "weylfan/fan_oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "weylfan/parallel.hpp"

namespace weylfan {

namespace {

long long dot(const std::vector<long long>& a, const std::vector<long long>& b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

// vec in ambient coordinates -> integer coordinates in the omega-basis,
// where coefficient j is the pairing with alpha_j; `den` divides exactly
std::vector<long long> omega_coords(const RootSystemGeometry& g,
                                    const std::vector<long long>& vec,
                                    long long den) {
  std::vector<long long> out(g.simple_roots.size());
  for (std::size_t j = 0; j < g.simple_roots.size(); ++j) {
    long long p = dot(vec, g.simple_roots[j]);
    if (p % den != 0)
      throw std::logic_error("coweight has a non-integer lattice coordinate");
    out[j] = p / den;
  }
  return out;
}

std::vector<long long> apply_ambient(const WeylElement& u,
                                     const std::vector<long long>& vec) {
  std::vector<long long> out(vec.size(), 0);
  for (std::size_t k = 0; k < u.oneline.size(); ++k) {
    int img = u.oneline[k];
    if (img > 0)
      out[static_cast<std::size_t>(img) - 1] += vec[k];
    else
      out[static_cast<std::size_t>(-img) - 1] -= vec[k];
  }
  return out;
}

// determinant and exact integer inverse of a small matrix via rational
// Gauss-Jordan; requires |det| = 1 for the inverse to be integral
long long unimodular_inverse(const std::vector<std::vector<long long>>& m,
                             std::vector<std::vector<long long>>& inv) {
  const std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = static_cast<long>(m[r][c]);
    a[r][n + r] = 1;
  }
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    mpq_class lead = a[col][col];
    for (std::size_t c = 0; c < 2 * n; ++c) a[col][c] /= lead;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  if (det != 1 && det != -1) return 0;
  inv.assign(n, std::vector<long long>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      mpq_class v = a[r][n + c];
      if (v.get_den() != 1)
        throw std::logic_error("non-integral inverse of a unimodular matrix");
      inv[r][c] = static_cast<long long>(v.get_num().get_si());
    }
  return det.get_num().get_si();
}

}  // namespace

std::size_t FanModel::ray_index(const SubsetLabel& label) const {
  auto it = ray_index_.find(label);
  if (it == ray_index_.end())
    throw std::invalid_argument("label '" + label.str() + "' is not a ray of " +
                                system_.name());
  return it->second;
}

FanModel FanModel::build(const RootSystem& sys) {
  FanModel fan;
  fan.system_ = sys;
  const auto& g = geometry(sys);
  const auto elements = enumerate_weyl(sys);
  const int n = sys.rank;

  // collect the coweights u(omega_i) with their subset names; the name and
  // the lattice vector must determine each other
  std::map<SubsetLabel, std::vector<long long>> coords_of;
  std::map<std::vector<long long>, SubsetLabel> label_of;
  for (const auto& u : elements) {
    for (int i = 1; i <= n; ++i) {
      SubsetLabel label = coweight_label(u, i);
      auto coords = omega_coords(g, apply_ambient(u, g.coweight_num[i - 1]),
                                 g.coweight_den[i - 1]);
      auto [it, inserted] = coords_of.emplace(label, coords);
      if (!inserted && it->second != coords)
        throw std::logic_error("subset name '" + label.str() +
                               "' received two distinct coweights");
      auto [jt, fresh] = label_of.emplace(coords, label);
      if (!fresh && jt->second != label)
        throw std::logic_error("coweight named twice in " + sys.name());
    }
  }
  fan.rays_.reserve(coords_of.size());
  for (auto& [label, coords] : coords_of) {
    fan.ray_index_.emplace(label, fan.rays_.size());
    fan.rays_.push_back(Ray{label, coords});
  }

  // maximal cones: one per Weyl chamber
  fan.cone_rays_.reserve(elements.size());
  fan.cone_dual_.reserve(elements.size());
  for (const auto& u : elements) {
    std::vector<std::size_t> rays(n);
    std::vector<std::vector<long long>> matrix(n, std::vector<long long>(n));
    for (int i = 1; i <= n; ++i) {
      std::size_t idx = fan.ray_index(coweight_label(u, i));
      rays[i - 1] = idx;
      for (int j = 0; j < n; ++j) matrix[j][i - 1] = fan.rays_[idx].coords[j];
    }
    std::vector<std::vector<long long>> inverse;
    long long det = unimodular_inverse(matrix, inverse);
    if (det != 1 && det != -1)
      throw std::logic_error("non-unimodular Weyl chamber in " + sys.name());
    fan.cone_rays_.push_back(std::move(rays));
    fan.cone_dual_.push_back(std::move(inverse));
    fan.cone_det_.push_back(det);
  }

  for (const auto& root : g.positive_roots) {
    std::vector<long long> coords(n);
    for (int j = 0; j < n; ++j) {
      long long num = 0;
      for (int k = 0; k < g.ambient_dim; ++k)
        num += g.coweight_num[j][k] * root[k];
      if (num % g.coweight_den[j] != 0)
        throw std::logic_error("root with non-integer simple-root coordinates");
      coords[j] = num / g.coweight_den[j];
    }
    fan.root_coords_.push_back(std::move(coords));
  }
  return fan;
}

// ---------------------------------------------------------------------------

struct LocalizationOracle::Impl {
  // per point: the value of every dual form at the point, per cone, plus the
  // fixed denominator product of each cone
  struct Point {
    std::vector<long long> coords;
    std::vector<std::vector<long long>> dual_values;  // [cone][j]
    std::vector<mpz_class> denominator;               // [cone]
  };
  Point points[2];
  // row index of each ray inside each cone, -1 when the ray is absent
  std::vector<std::vector<int>> ray_row;

  mpq_class evaluate(const FanModel& fan, const std::vector<std::size_t>& rays,
                     int which) const {
    const Point& pt = points[which];
    mpq_class total = 0;
    mpz_class numerator;
    for (std::size_t cone = 0; cone < fan.cone_count(); ++cone) {
      numerator = 1;
      bool outside = false;
      for (std::size_t r : rays) {
        int row = ray_row[cone][r];
        if (row < 0) {
          outside = true;
          break;
        }
        numerator *= static_cast<long>(pt.dual_values[cone][static_cast<std::size_t>(row)]);
      }
      if (outside) continue;
      mpq_class term(numerator, pt.denominator[cone]);
      term.canonicalize();
      total += term;
    }
    return total;
  }
};

LocalizationOracle::LocalizationOracle(const FanModel& fan, unsigned long seed,
                                       int resample_limit)
    : fan_(fan), seed_(seed), impl_(std::make_unique<Impl>()) {
  const int n = fan.rank();
  std::mt19937_64 rng(seed);
  auto draw_coord = [&rng]() {
    return static_cast<long long>(rng() % 2000001ULL) - 1000000LL;
  };

  impl_->ray_row.assign(fan.cone_count(),
                        std::vector<int>(fan.rays().size(), -1));
  for (std::size_t cone = 0; cone < fan.cone_count(); ++cone) {
    const auto& rays = fan.cone_rays(cone);
    for (std::size_t j = 0; j < rays.size(); ++j)
      impl_->ray_row[cone][rays[j]] = static_cast<int>(j);
  }

  for (int which = 0; which < 2; ++which) {
    Impl::Point& pt = impl_->points[which];
    for (int attempt = 0;; ++attempt) {
      if (attempt >= resample_limit)
        throw std::runtime_error(
            "could not find a generic evaluation point for " +
            fan.system().name());
      pt.coords.assign(static_cast<std::size_t>(n), 0);
      for (auto& c : pt.coords) c = draw_coord();
      if (which == 1 && pt.coords == impl_->points[0].coords) continue;
      pt.dual_values.assign(fan.cone_count(), {});
      pt.denominator.assign(fan.cone_count(), 1);
      bool generic = true;
      for (std::size_t cone = 0; cone < fan.cone_count() && generic; ++cone) {
        auto& values = pt.dual_values[cone];
        values.resize(static_cast<std::size_t>(n));
        mpz_class product = 1;
        for (int j = 0; j < n; ++j) {
          long long v = dot(fan.cone_dual(cone)[static_cast<std::size_t>(j)],
                            pt.coords);
          if (v == 0) {
            generic = false;
            break;
          }
          values[static_cast<std::size_t>(j)] = v;
          product *= static_cast<long>(v);
        }
        pt.denominator[cone] = std::move(product);
      }
      if (generic) break;
    }
  }

  // calibration: the transversal product of the identity chamber must
  // integrate to +1; the localization convention is fixed by this
  TauMonomial transversal{fan.system(), {}};
  {
    std::vector<SubsetLabel> factors;
    WeylElement id = identity_element(fan.system());
    for (int i = 1; i <= n; ++i) factors.push_back(coweight_label(id, i));
    transversal = make_monomial(fan.system(), std::move(factors));
  }
  if (integral(transversal) != 1)
    throw std::logic_error("localization calibration failed for " +
                           fan.system().name());
}

LocalizationOracle::~LocalizationOracle() = default;

long long LocalizationOracle::integral(const TauMonomial& m) const {
  if (m.system != fan_.system())
    throw std::invalid_argument("monomial belongs to a different system");
  if (m.degree() != fan_.rank())
    throw std::invalid_argument("oracle integrates degree-" +
                                std::to_string(fan_.rank()) + " monomials only");
  std::vector<std::size_t> rays;
  rays.reserve(m.factors.size());
  for (const SubsetLabel& s : m.factors) rays.push_back(fan_.ray_index(s));

  mpq_class first = impl_->evaluate(fan_, rays, 0);
  mpq_class second = impl_->evaluate(fan_, rays, 1);
  if (first != second)
    throw std::runtime_error("evaluation points disagree on " + m.str());
  if (first.get_den() != 1)
    throw std::runtime_error("non-integral localization sum on " + m.str());
  if (!first.get_num().fits_slong_p())
    throw std::runtime_error("localization value out of range on " + m.str());
  return first.get_num().get_si();
}

long long LocalizationOracle::ray_root_pairing(std::size_t ray,
                                               std::size_t root) const {
  return dot(fan_.rays()[ray].coords, fan_.root_coords()[root]);
}

// ---------------------------------------------------------------------------

const char* verify_mode_name(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::ExhaustiveAll: return "exhaustive";
    case VerifyMode::ExhaustiveChains: return "chains";
    case VerifyMode::SampledMonomials: return "sampled";
    case VerifyMode::SampledNonChain: return "nonchain";
  }
  return "?";
}

unsigned long long count_degree_n_multisets(const FanModel& fan) {
  // C(R + n - 1, n) for R rays
  const unsigned long long r = fan.rays().size();
  const int n = fan.rank();
  unsigned long long count = 1;
  for (int k = 1; k <= n; ++k) count = count * (r + static_cast<unsigned long long>(n - k)) / static_cast<unsigned long long>(k);
  return count;
}

namespace {

TauMonomial monomial_of_rays(const FanModel& fan,
                             const std::vector<std::size_t>& rays) {
  std::vector<SubsetLabel> factors;
  factors.reserve(rays.size());
  for (std::size_t r : rays) factors.push_back(fan.rays()[r].label);
  return make_monomial(fan.system(), std::move(factors));
}

// enumerate all non-decreasing index tuples of the given length
template <typename Fn>
void for_each_multiset(std::size_t count, int length, Fn&& fn) {
  std::vector<std::size_t> pick(static_cast<std::size_t>(length), 0);
  while (true) {
    fn(pick);
    int pos = length - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == count - 1) --pos;
    if (pos < 0) return;
    std::size_t next = pick[static_cast<std::size_t>(pos)] + 1;
    for (int k = pos; k < length; ++k) pick[static_cast<std::size_t>(k)] = next;
  }
}

// depth-first enumeration of chain monomials over rays sorted by
// (size, lex); indices never decrease, so sizes never decrease
void extend_chains(const FanModel& fan, std::vector<std::size_t>& pick,
                   std::vector<TauMonomial>& out) {
  const int n = fan.rank();
  if (static_cast<int>(pick.size()) == n) {
    out.push_back(monomial_of_rays(fan, pick));
    return;
  }
  std::size_t start = pick.empty() ? 0 : pick.back();
  std::vector<SubsetLabel> prefix;
  prefix.reserve(pick.size() + 1);
  for (std::size_t r : pick) prefix.push_back(fan.rays()[r].label);
  prefix.emplace_back();
  for (std::size_t idx = start; idx < fan.rays().size(); ++idx) {
    prefix.back() = fan.rays()[idx].label;
    if (!labels_form_chain(fan.system(), prefix)) continue;
    pick.push_back(idx);
    extend_chains(fan, pick, out);
    pick.pop_back();
  }
}

}  // namespace

std::vector<TauMonomial> enumerate_chain_monomials(const FanModel& fan) {
  std::vector<TauMonomial> out;
  std::vector<std::size_t> pick;
  extend_chains(fan, pick, out);
  return out;
}

VerifyReport verify_family(const LocalizationOracle& oracle, VerifyMode mode,
                           std::size_t sample_size, unsigned long sample_seed) {
  const FanModel& fan = oracle.fan();
  VerifyReport report;
  report.system = fan.system();
  report.mode = mode;
  report.seed = oracle.seed();

  // materialize the work list in canonical order, then evaluate in parallel
  std::vector<TauMonomial> items;
  switch (mode) {
    case VerifyMode::ExhaustiveAll: {
      for_each_multiset(fan.rays().size(), fan.rank(),
                        [&](const std::vector<std::size_t>& pick) {
                          items.push_back(monomial_of_rays(fan, pick));
                        });
      break;
    }
    case VerifyMode::ExhaustiveChains: {
      items = enumerate_chain_monomials(fan);
      break;
    }
    case VerifyMode::SampledMonomials:
    case VerifyMode::SampledNonChain: {
      std::mt19937_64 rng(sample_seed);
      std::size_t guard = 0;
      while (items.size() < sample_size) {
        if (++guard > 1000 * (sample_size + 1))
          throw std::runtime_error("sampling stalled for " +
                                   fan.system().name());
        std::vector<std::size_t> pick(static_cast<std::size_t>(fan.rank()));
        for (auto& r : pick) r = rng() % fan.rays().size();
        std::sort(pick.begin(), pick.end());
        TauMonomial m = monomial_of_rays(fan, pick);
        if (mode == VerifyMode::SampledNonChain && is_chain(m)) continue;
        items.push_back(std::move(m));
      }
      break;
    }
  }

  std::vector<std::pair<long long, long long>> values(items.size());
  parallel_for(items.size(), [&](std::size_t i) {
    values[i] = {intersection_number(items[i]).value,
                 oracle.integral(items[i])};
  });

  report.total = items.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (values[i].first != values[i].second)
      report.mismatches.push_back(
          VerifyMismatch{items[i], values[i].first, values[i].second});
  }
  return report;
}

}  // namespace weylfan
