#include "clustertilt/representation.hpp"

#include <algorithm>

#include "clustertilt/error.hpp"

namespace clustertilt {

bool Representation::is_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](int d) { return d == 0; });
}

Representation reflect_at_source(const Representation& rep, Quiver& orientation, int i) {
  const int n = orientation.size();
  std::vector<int> targets;
  for (int j = 0; j < n; ++j) {
    if (orientation(j, i) > 0) throw InvalidArgument("reflection vertex is not a source");
    if (orientation(i, j) > 0) targets.push_back(j);
  }
  std::size_t total = 0;
  for (int j : targets) total += static_cast<std::size_t>(rep.dims[j]);
  const auto di = static_cast<std::size_t>(rep.dims[i]);

  RationalMatrix stacked(total, di);
  std::size_t row = 0;
  for (int j : targets) {
    const RationalMatrix& m = rep.maps.at({i, j});
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < di; ++c) stacked(row + r, c) = m(r, c);
    row += m.rows();
  }
  // Rows of the quotient map span the left kernel of the stacked map.
  const RationalMatrix quotient = nullspace(stacked.transpose()).transpose();

  Representation out;
  out.dims = rep.dims;
  out.dims[i] = static_cast<int>(quotient.rows());
  for (const auto& [arrow, m] : rep.maps)
    if (arrow.first != i) out.maps.emplace(arrow, m);
  std::size_t col = 0;
  for (int j : targets) {
    const auto dj = static_cast<std::size_t>(rep.dims[j]);
    RationalMatrix block(quotient.rows(), dj);
    for (std::size_t r = 0; r < quotient.rows(); ++r)
      for (std::size_t c = 0; c < dj; ++c) block(r, c) = quotient(r, col + c);
    out.maps.emplace(std::make_pair(j, i), std::move(block));
    col += dj;
    orientation.set_arrows(j, i, 1);
  }
  return out;
}

HomBasis hom_representations(const Quiver& q, const Representation& m, const Representation& n) {
  const int nv = q.size();
  std::vector<std::size_t> offset(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(m.dims[v]) * static_cast<std::size_t>(n.dims[v]);
  const std::size_t unknowns = offset[nv];
  HomBasis out;
  if (unknowns == 0) return out;
  // phi_v is n.dims[v] x m.dims[v], unknown (r, c) at offset[v] + r * m.dims[v] + c.
  auto var = [&](int v, std::size_t r, std::size_t c) { return offset[v] + r * static_cast<std::size_t>(m.dims[v]) + c; };

  std::size_t equations = 0;
  for (auto [a, b] : q.arrows()) equations += static_cast<std::size_t>(n.dims[b]) * static_cast<std::size_t>(m.dims[a]);
  RationalMatrix system(equations, unknowns);
  std::size_t row = 0;
  for (auto [a, b] : q.arrows()) {
    const auto ma = static_cast<std::size_t>(m.dims[a]), mb = static_cast<std::size_t>(m.dims[b]);
    const auto na = static_cast<std::size_t>(n.dims[a]), nb = static_cast<std::size_t>(n.dims[b]);
    if (ma == 0 || nb == 0) continue;
    const RationalMatrix& mab = m.maps.at({a, b});  // mb x ma
    const RationalMatrix& nab = n.maps.at({a, b});  // nb x na
    // (phi_b * M_ab - N_ab * phi_a)(r, c) = 0
    for (std::size_t r = 0; r < nb; ++r)
      for (std::size_t c = 0; c < ma; ++c, ++row) {
        for (std::size_t k = 0; k < mb; ++k)
          if (sgn(mab(k, c)) != 0) system(row, var(b, r, k)) += mab(k, c);
        for (std::size_t k = 0; k < na; ++k)
          if (sgn(nab(r, k)) != 0) system(row, var(a, k, c)) -= nab(r, k);
      }
  }
  const RationalMatrix kernel = nullspace(system);
  out.dim = kernel.cols();
  for (std::size_t k = 0; k < kernel.cols(); ++k) {
    std::vector<RationalMatrix> phi;
    for (int v = 0; v < nv; ++v) {
      RationalMatrix p(static_cast<std::size_t>(n.dims[v]), static_cast<std::size_t>(m.dims[v]));
      for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c) p(r, c) = kernel(var(v, r, c), k);
      phi.push_back(std::move(p));
    }
    out.basis.push_back(std::move(phi));
  }
  return out;
}

namespace {

Representation projective_rep(const RootSystem& rs, const Quiver& q, int x) {
  Representation p;
  p.dims = rs.projective_dims(x).coeffs();
  for (auto [a, b] : q.arrows()) {
    RationalMatrix m(static_cast<std::size_t>(p.dims[b]), static_cast<std::size_t>(p.dims[a]));
    if (a == x) m(0, 0) = 1;
    p.maps.emplace(std::make_pair(a, b), std::move(m));
  }
  return p;
}

// tau^{-1} on the alternating quiver: reflect at all sources, then at the
// original sinks (sources of the reversed quiver).
Representation coxeter_minus(const RootSystem& rs, const Representation& rep, const Quiver& q) {
  Quiver orientation = q;
  Representation cur = rep;
  for (int i : rs.signs().vertices(Sign::Minus)) cur = reflect_at_source(cur, orientation, i);
  for (int i : rs.signs().vertices(Sign::Plus)) cur = reflect_at_source(cur, orientation, i);
  if (orientation != q) throw InternalError("Coxeter functor did not restore the orientation");
  return cur;
}

}  // namespace

ModuleCategory::ModuleCategory(const RootSystem& rs) : rs_(rs) {
  quiver_ = Quiver(rs.rank());
  for (auto [a, b] : rs.type().edges()) {
    if (rs.signs().is_source(a)) quiver_.set_arrows(a, b, 1);
    else quiver_.set_arrows(b, a, 1);
  }
  const int n = rs.rank();
  const std::size_t nu = rs.positive_roots().size();
  std::vector<std::optional<Representation>> slot(nu);
  std::vector<std::optional<std::size_t>> next(nu);
  projective_.assign(static_cast<std::size_t>(n), 0);

  auto place = [&](Representation&& r) {
    const Root d = r.dimension_vector();
    auto idx = rs.index_of(d);
    if (!idx || !d.is_positive()) throw InternalError("reflection functors produced a non-root " + d.to_string());
    const std::size_t k = *idx - static_cast<std::size_t>(n);
    if (slot[k]) throw InternalError("two preprojective positions share the root " + d.to_string());
    slot[k] = std::move(r);
    return k;
  };

  for (int x = 0; x < n; ++x) {
    Representation cur = projective_rep(rs, quiver_, x);
    std::size_t k = place(Representation(cur));
    projective_[x] = k;
    while (true) {
      Representation nxt = coxeter_minus(rs, cur, quiver_);
      if (nxt.is_zero()) break;
      if (nxt.dimension_vector() != rs.coxeter_inverse(cur.dimension_vector()))
        throw InternalError("Coxeter functor disagrees with the Coxeter transformation on dimension vectors");
      const std::size_t k2 = place(Representation(nxt));
      next[k] = k2;
      k = k2;
      cur = std::move(nxt);
    }
  }
  for (std::size_t k = 0; k < nu; ++k) {
    if (!slot[k]) throw InternalError("root " + rs.positive_roots()[k].to_string() + " has no indecomposable");
    reps_.push_back(std::move(*slot[k]));
  }
  tau_inverse_ = next;
  tau_.assign(nu, std::nullopt);
  for (std::size_t k = 0; k < nu; ++k)
    if (next[k]) tau_[*next[k]] = k;

  hom_.assign(nu, std::vector<int>(nu, 0));
  ext_.assign(nu, std::vector<int>(nu, 0));
  for (std::size_t a = 0; a < nu; ++a)
    for (std::size_t b = 0; b < nu; ++b) {
      hom_[a][b] = static_cast<int>(hom_representations(quiver_, reps_[a], reps_[b]).dim);
      ext_[a][b] = hom_[a][b] - rs.euler_form(reps_[a].dimension_vector(), reps_[b].dimension_vector());
      if (ext_[a][b] < 0) throw InternalError("negative Ext dimension from the Euler form");
    }

  injective_.assign(static_cast<std::size_t>(n), 0);
  for (int x = 0; x < n; ++x) injective_[x] = index_of(rs.injective_dims(x));
  for (std::size_t k = 0; k < nu; ++k) {
    const bool inj = std::find(injective_.begin(), injective_.end(), k) != injective_.end();
    if (inj != !tau_inverse_[k]) throw InternalError("tau^{-1} chain does not end at the injectives");
  }
}

std::size_t ModuleCategory::index_of(const Root& beta) const {
  auto idx = rs_.index_of(beta);
  if (!idx || !beta.is_positive()) throw InvalidArgument(beta.to_string() + " is not a positive root");
  return *idx - static_cast<std::size_t>(rs_.rank());
}

const Representation& ModuleCategory::indecomposable(const Root& beta) const { return reps_[index_of(beta)]; }
const Representation& ModuleCategory::projective(int x) const { return reps_[projective_.at(x)]; }
const Representation& ModuleCategory::injective(int x) const { return reps_[injective_.at(x)]; }
std::size_t ModuleCategory::projective_index(int x) const { return projective_.at(x); }
std::size_t ModuleCategory::injective_index(int x) const { return injective_.at(x); }

std::size_t ModuleCategory::tau_inverse(std::size_t m) const {
  if (!tau_inverse_.at(m)) throw InvalidArgument("tau^{-1} of an injective module");
  return *tau_inverse_[m];
}

std::size_t ModuleCategory::tau(std::size_t m) const {
  if (!tau_.at(m)) throw InvalidArgument("tau of a projective module");
  return *tau_[m];
}

bool ModuleCategory::is_projective(std::size_t m) const { return !tau_.at(m); }
bool ModuleCategory::is_injective(std::size_t m) const { return !tau_inverse_.at(m); }

HomBasis ModuleCategory::hom_basis(std::size_t m, std::size_t n) const {
  return hom_representations(quiver_, reps_.at(m), reps_.at(n));
}

Representation indecomposable_rep(const ModuleCategory& mc, const Root& beta) { return mc.indecomposable(beta); }

int hom_mod(const ModuleCategory& mc, const Representation& m, const Representation& n) {
  return static_cast<int>(hom_representations(mc.quiver(), m, n).dim);
}

int ext_mod(const ModuleCategory& mc, const Representation& m, const Representation& n) {
  const int e = hom_mod(mc, m, n) - mc.roots().euler_form(m.dimension_vector(), n.dimension_vector());
  if (e < 0) throw InternalError("negative Ext dimension from the Euler form");
  return e;
}

}  // namespace clustertilt
