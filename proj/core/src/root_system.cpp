#include "clustertilt/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <sstream>

#include "clustertilt/error.hpp"

namespace clustertilt {

// ---------------------------------------------------------------------------
// DynkinType

DynkinType::DynkinType(Series series, int rank) : series_(series), rank_(rank) {
  bool ok = false;
  switch (series) {
    case Series::A: ok = rank >= 1; break;
    case Series::D: ok = rank >= 4; break;
    case Series::E: ok = rank >= 6 && rank <= 8; break;
  }
  if (!ok) throw InvalidArgument("invalid rank " + std::to_string(rank) + " for series " + std::string(1, static_cast<char>(series)));
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw InvalidArgument("type must look like A3, D4 or E6: '" + std::string(text) + "'");
  const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text.front())));
  Series series;
  switch (letter) {
    case 'A': series = Series::A; break;
    case 'D': series = Series::D; break;
    case 'E': series = Series::E; break;
    default: throw InvalidArgument("unknown Dynkin series in '" + std::string(text) + "'");
  }
  int rank = 0;
  const auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size())
    throw InvalidArgument("bad rank in type '" + std::string(text) + "'");
  return DynkinType(series, rank);
}

std::string DynkinType::name() const { return std::string(1, static_cast<char>(series_)) + std::to_string(rank_); }

std::vector<std::pair<int, int>> DynkinType::edges() const {
  std::vector<std::pair<int, int>> e;
  const int n = rank_;
  switch (series_) {
    case Series::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Series::D:
      for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case Series::E:
      for (int i = 0; i + 1 < n - 1; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(2, n - 1);
      break;
  }
  return e;
}

int DynkinType::coxeter_number() const {
  switch (series_) {
    case Series::A: return rank_ + 1;
    case Series::D: return 2 * rank_ - 2;
    case Series::E: return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
  }
  return 0;
}

int DynkinType::expected_positive_roots() const {
  switch (series_) {
    case Series::A: return rank_ * (rank_ + 1) / 2;
    case Series::D: return rank_ * (rank_ - 1);
    case Series::E: return rank_ == 6 ? 36 : rank_ == 7 ? 63 : 120;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Root

Root Root::simple(int rank, int i) {
  Root r = zero(rank);
  r[i] = 1;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; }) && !is_zero();
}

std::optional<int> Root::negative_simple_index() const {
  std::optional<int> idx;
  for (int i = 0; i < rank(); ++i) {
    if (c_[static_cast<std::size_t>(i)] == 0) continue;
    if (c_[static_cast<std::size_t>(i)] != -1 || idx) return std::nullopt;
    idx = i;
  }
  return idx;
}

int Root::height() const {
  int h = 0;
  for (int x : c_) h += x;
  return h;
}

Root Root::operator+(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

Root Root::operator-(const Root& o) const {
  Root r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::string Root::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) os << (i ? "," : "") << c_[i];
  os << ')';
  return os.str();
}

std::vector<int> BipartiteSigns::vertices(Sign s) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < of_vertex.size(); ++i)
    if (of_vertex[i] == s) out.push_back(static_cast<int>(i));
  return out;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(DynkinType type) : type_(type) {
  const int n = type_.rank();
  cartan_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  neighbors_.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
  for (auto [i, j] : type_.edges()) {
    cartan_[i][j] = cartan_[j][i] = -1;
    neighbors_[i].push_back(j);
    neighbors_[j].push_back(i);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());

  // Two-colour the tree with vertex 1 a source.
  signs_.of_vertex.assign(static_cast<std::size_t>(n), Sign::Minus);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : neighbors_[v]) {
      if (seen[w]) continue;
      seen[w] = true;
      signs_.of_vertex[w] = opposite(signs_.of_vertex[v]);
      queue.push_back(w);
    }
  }

  // Reflection closure from the simple roots.
  std::set<Root> found;
  std::deque<Root> todo;
  for (int i = 0; i < n; ++i) {
    found.insert(Root::simple(n, i));
    todo.push_back(Root::simple(n, i));
  }
  while (!todo.empty()) {
    const Root g = todo.front();
    todo.pop_front();
    for (int i = 0; i < n; ++i) {
      Root r = simple_reflection(i, g);
      if (r.is_positive() && found.insert(r).second) todo.push_back(std::move(r));
    }
  }
  positives_.assign(found.begin(), found.end());
  if (static_cast<int>(positives_.size()) != type_.expected_positive_roots())
    throw InternalError("reflection closure produced " + std::to_string(positives_.size()) + " roots for " + type_.name());

  for (int i = 0; i < n; ++i) almost_positive_.push_back(-Root::simple(n, i));
  almost_positive_.insert(almost_positive_.end(), positives_.begin(), positives_.end());
  for (std::size_t k = 0; k < almost_positive_.size(); ++k) index_.emplace(almost_positive_[k], k);
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const {
  auto it = index_.find(r);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Root RootSystem::simple_reflection(int i, const Root& gamma) const {
  if (i < 0 || i >= rank()) throw InvalidArgument("simple reflection index out of range");
  int pairing = 0;
  for (int j = 0; j < rank(); ++j) pairing += cartan_[i][j] * gamma[j];
  Root r = gamma;
  r[i] -= pairing;
  return r;
}

bool RootSystem::tau_fixes(Sign s, const Root& alpha) const {
  auto idx = alpha.negative_simple_index();
  return idx && signs_.of_vertex[static_cast<std::size_t>(*idx)] == opposite(s);
}

Root RootSystem::tau(Sign s, const Root& alpha) const {
  if (tau_fixes(s, alpha)) return alpha;
  Root r = alpha;
  for (int i : signs_.vertices(s)) r = simple_reflection(i, r);
  return r;
}

Root RootSystem::tau_lattice(Sign s, const Root& gamma) const {
  Root r = gamma;
  for (int i = 0; i < rank(); ++i) {
    if (signs_.of_vertex[static_cast<std::size_t>(i)] != s) continue;
    int v = -gamma[i];
    for (int j : neighbors_[i]) v += std::max(gamma[j], 0);
    r[i] = v;
  }
  return r;
}

Root RootSystem::coxeter(const Root& gamma) const { return tau(Sign::Minus, tau(Sign::Plus, gamma)); }

Root RootSystem::coxeter_inverse(const Root& gamma) const { return tau(Sign::Plus, tau(Sign::Minus, gamma)); }

int RootSystem::orbit_period(const Root& beta, const Root& beta_prime) const {
  const int bound = type_.coxeter_number() + 2;
  Root b = beta, bp = beta_prime;
  for (int p = 1; p <= bound; ++p) {
    b = coxeter(b);
    bp = coxeter(bp);
    if (b == beta && bp == beta_prime) return p;
  }
  throw InternalError("tau orbit period exceeds h + 2 for pair " + beta.to_string() + ", " + beta_prime.to_string());
}

std::vector<Root> RootSystem::uplus_orbit_set(const Root& beta, const Root& beta_prime) const {
  if (!is_almost_positive(beta) || !is_almost_positive(beta_prime))
    throw InvalidArgument("uplus needs almost positive roots");
  const int period = orbit_period(beta, beta_prime);
  std::set<Root> out;
  for (Sign first : {Sign::Plus, Sign::Minus}) {
    std::vector<Sign> word;
    Sign s = first;
    for (int len = 0; len <= 2 * period + 1; ++len) {
      Root b = beta, bp = beta_prime;
      for (Sign t : word) {
        b = tau(t, b);
        bp = tau(t, bp);
      }
      Root sum = b + bp;
      for (auto it = word.rbegin(); it != word.rend(); ++it) sum = tau_lattice(*it, sum);
      out.insert(sum);
      word.push_back(s);
      s = opposite(s);
    }
  }
  return {out.begin(), out.end()};
}

Root RootSystem::uplus(const Root& beta, const Root& beta_prime) const {
  const auto set = uplus_orbit_set(beta, beta_prime);
  // In rank 1 both elements collapse to alpha_1 - alpha_1 = 0.
  if (rank() == 1 && set.size() == 1 && beta != beta_prime) return set.front();
  if (set.size() != 2)
    throw NotExchangeable("orbit set of " + beta.to_string() + ", " + beta_prime.to_string() + " has " +
                          std::to_string(set.size()) + " elements");
  const Root plain = beta + beta_prime;
  if (set[0] == plain) return set[1];
  if (set[1] == plain) return set[0];
  throw NotExchangeable("orbit set does not contain beta + beta'");
}

std::optional<RootSystem::WalkEnd> RootSystem::walk_to_negative_simple(Sign first, Root a, Root b,
                                                                       bool respect_fixed) const {
  const int limit = 2 * (type_.coxeter_number() + 2) + 2;
  Sign s = first;
  for (int steps = 0; steps <= limit; ++steps) {
    if (a.negative_simple_index()) return WalkEnd{steps, std::move(a), std::move(b)};
    if (respect_fixed && (tau_fixes(s, a) || tau_fixes(s, b))) return std::nullopt;
    a = tau(s, a);
    b = tau(s, b);
    s = opposite(s);
  }
  return std::nullopt;
}

std::optional<int> RootSystem::sign_eps_directed(const Root& beta, const Root& beta_prime) const {
  std::optional<int> result;
  for (Sign first : {Sign::Plus, Sign::Minus}) {
    auto end = walk_to_negative_simple(first, beta, beta_prime, true);
    if (!end) continue;
    const int j = *end->a.negative_simple_index();
    const int value = ((end->steps % 2 == 0) ? 1 : -1) * -vertex_sign(j);
    if (result && *result != value)
      throw InternalError("sign_eps reductions disagree for " + beta.to_string() + ", " + beta_prime.to_string());
    result = value;
  }
  return result;
}

int RootSystem::sign_eps(const Root& beta, const Root& beta_prime) const {
  if (!is_almost_positive(beta) || !is_almost_positive(beta_prime))
    throw InvalidArgument("sign_eps needs almost positive roots");
  if (auto v = sign_eps_directed(beta, beta_prime)) return *v;
  // Both directions blocked by a fixed second argument: reduce the swapped
  // pair and use skew-symmetry.
  if (auto v = sign_eps_directed(beta_prime, beta)) return -*v;
  throw InternalError("sign_eps reduction reached no base case for " + beta.to_string() + ", " +
                      beta_prime.to_string());
}

ClusterExpansion RootSystem::cluster_expand(const Root& gamma, const std::vector<Root>& cluster_roots) const {
  const auto n = static_cast<std::size_t>(rank());
  if (cluster_roots.size() != n) throw InvalidArgument("cluster must have rank-many roots");
  RationalMatrix m(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) m(r, c) = cluster_roots[c][static_cast<int>(r)];
  if (clustertilt::rank(m) != n) throw InvalidArgument("cluster roots are not a basis of the root lattice");
  std::vector<Rational> rhs(n);
  for (std::size_t r = 0; r < n; ++r) rhs[r] = gamma[static_cast<int>(r)];
  auto x = solve(m, rhs);
  if (!x) throw InternalError("nonsingular system without solution");
  ClusterExpansion out;
  out.coefficients = std::move(*x);
  out.nonnegative_integral = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational& c = out.coefficients[k];
    if (sgn(c) != 0) out.components.push_back(static_cast<int>(k));
    if (sgn(c) < 0 || c.get_den() != 1) out.nonnegative_integral = false;
  }
  return out;
}

int RootSystem::compatibility_degree(const Root& alpha, const Root& beta) const {
  if (!is_almost_positive(alpha) || !is_almost_positive(beta))
    throw InvalidArgument("compatibility degree needs almost positive roots");
  std::optional<int> result;
  for (Sign first : {Sign::Plus, Sign::Minus}) {
    auto end = walk_to_negative_simple(first, alpha, beta, false);
    if (!end) throw InternalError("tau orbit of " + alpha.to_string() + " contains no negative simple root");
    const int i = *end->a.negative_simple_index();
    const int value = std::max(end->b[i], 0);
    if (result && *result != value)
      throw InternalError("compatibility degree not tau-invariant at " + alpha.to_string() + ", " + beta.to_string());
    result = value;
  }
  return *result;
}

int RootSystem::euler_form(const Root& a, const Root& b) const {
  int v = 0;
  for (int i = 0; i < rank(); ++i) v += a[i] * b[i];
  for (int i = 0; i < rank(); ++i) {
    if (!signs_.is_source(i)) continue;
    for (int j : neighbors_[i]) v -= a[i] * b[j];
  }
  return v;
}

Root RootSystem::projective_dims(int i) const {
  Root r = Root::simple(rank(), i);
  if (signs_.is_source(i))
    for (int j : neighbors_[i]) r[j] = 1;
  return r;
}

Root RootSystem::injective_dims(int i) const {
  Root r = Root::simple(rank(), i);
  if (signs_.is_sink(i))
    for (int j : neighbors_[i]) r[j] = 1;
  return r;
}

}  // namespace clustertilt
