#include "congrep/weights.hpp"

#include <set>
#include <stdexcept>

namespace congrep {

Weight::Weight(WeightSystem system, std::vector<int> coords) : system_(system), coords_(std::move(coords)) {
  if (system == WeightSystem::none) throw std::invalid_argument("weight needs a root system");
  if (coords_.empty()) throw std::invalid_argument("weight of rank zero");
  canonicalize();
}

void Weight::canonicalize() {
  if (system_ != WeightSystem::linear) return;
  const int last = coords_.back();
  for (auto& c : coords_) c -= last;
}

Weight& Weight::operator+=(const Weight& o) {
  if (o.system_ != system_ || o.coords_.size() != coords_.size()) throw std::invalid_argument("weights of different types");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  canonicalize();
  return *this;
}

Weight operator-(const Weight& a) {
  Weight out = a;
  for (auto& c : out.coords_) c = -c;
  out.canonicalize();
  return out;
}

std::string Weight::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const int c = coords_[i];
    if (c == 0) continue;
    const std::string term = "L" + std::to_string(i + 1);
    if (out.empty()) out = (c < 0 ? "-" : "");
    else out += c < 0 ? " - " : " + ";
    const int a = c < 0 ? -c : c;
    out += (a == 1 ? "" : std::to_string(a)) + term;
  }
  return out.empty() ? "0" : out;
}

bool DominantLabel::is_dominant() const {
  for (int c : coeffs)
    if (c < 0) return false;
  return true;
}

bool DominantLabel::is_restricted(int p) const {
  for (int c : coeffs)
    if (c < 0 || c >= p) return false;
  return true;
}

std::string DominantLabel::render() const {
  std::string body;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (int k = 0; k < coeffs[i]; ++k) body += (body.empty() ? "w" : "+w") + std::to_string(i + 1);
  return "L(" + (body.empty() ? std::string("0") : body) + ")";
}

Weight fundamental_weight(WeightSystem system, int rank, int i) {
  const int max_i = system == WeightSystem::linear ? rank - 1 : rank;
  if (i < 1 || i > max_i) throw std::invalid_argument("fundamental weight index out of range");
  std::vector<int> c(static_cast<std::size_t>(rank), 0);
  for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = 1;
  return Weight(system, c);
}

Weight weight_of(WeightSystem system, int rank, const DominantLabel& label) {
  Weight w(system, std::vector<int>(static_cast<std::size_t>(rank), 0));
  for (std::size_t i = 0; i < label.coeffs.size(); ++i)
    for (int k = 0; k < label.coeffs[i]; ++k) w += fundamental_weight(system, rank, static_cast<int>(i) + 1);
  return w;
}

DominantLabel to_dominant_label(const Weight& w) {
  const auto& c = w.coords();
  const std::size_t n = c.size();
  DominantLabel out;
  if (w.system() == WeightSystem::symplectic) {
    for (std::size_t i = 0; i + 1 < n; ++i) out.coeffs.push_back(c[i] - c[i + 1]);
    out.coeffs.push_back(c[n - 1]);
  } else {
    for (std::size_t i = 0; i + 1 < n; ++i) out.coeffs.push_back(c[i] - c[i + 1]);
  }
  return out;
}

std::optional<std::vector<int>> simple_root_coordinates(const Weight& d) {
  const auto& c = d.coords();
  const std::size_t n = c.size();
  std::vector<int> out;
  if (d.system() == WeightSystem::symplectic) {
    // alpha_i = L_i - L_{i+1}, alpha_g = 2 L_g.
    int partial = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      partial += c[i];
      out.push_back(partial);
    }
    partial += c[n - 1];
    if (partial % 2 != 0) return std::nullopt;
    out.push_back(partial / 2);
    return out;
  }
  // Type A: pick the representative with coordinate sum 0.
  int sum = 0;
  for (int x : c) sum += x;
  if (sum % static_cast<int>(n) != 0) return std::nullopt;
  const int shift = -sum / static_cast<int>(n);
  int partial = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    partial += c[i] + shift;
    out.push_back(partial);
  }
  return out;
}

bool dominates(const Weight& mu, const Weight& lambda) {
  const auto coords = simple_root_coordinates(mu - lambda);
  if (!coords) return false;
  for (int x : *coords)
    if (x < 0) return false;
  return true;
}

Weight basis_weight(const LabeledModule& module, std::size_t index) {
  if (module.system == WeightSystem::none || module.labels.size() != module.dim())
    throw std::invalid_argument("module carries no weight labels");
  const auto& label = module.labels.at(index);
  std::vector<int> c(static_cast<std::size_t>(module.rank), 0);
  auto add = [&](int basis_index, int sign) {
    if (module.system == WeightSystem::symplectic) {
      // a_i = X_{2i-1} has weight L_i, b_i = X_{2i} has weight -L_i.
      const auto slot = static_cast<std::size_t>(basis_index / 2);
      c.at(slot) += (basis_index % 2 == 0 ? 1 : -1) * sign;
    } else {
      c.at(static_cast<std::size_t>(basis_index)) += sign;
    }
  };
  for (int i : label.primal) add(i, 1);
  for (int i : label.dual) add(i, -1);
  return Weight(module.system, c);
}

std::map<Weight, std::size_t> weight_multiset(const LabeledModule& module) {
  std::map<Weight, std::size_t> out;
  for (std::size_t i = 0; i < module.dim(); ++i) ++out[basis_weight(module, i)];
  return out;
}

DominantLabel highest_weight(const LabeledModule& module, const Subspace& subspace) {
  if (subspace.ambient() != module.dim()) throw std::invalid_argument("subspace of a different module");
  if (subspace.dim() == 0) throw std::domain_error("highest weight of the zero subspace");
  std::set<Weight> occurring;
  const auto& basis = subspace.basis();
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::optional<Weight> row_weight;
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      if (!basis(r, c)) continue;
      const auto w = basis_weight(module, c);
      if (row_weight && !(*row_weight == w)) throw std::domain_error("subspace row is not weight-homogeneous");
      row_weight = w;
    }
    occurring.insert(*row_weight);
  }
  for (const auto& mu : occurring) {
    bool top = true;
    for (const auto& lambda : occurring)
      if (!dominates(mu, lambda)) {
        top = false;
        break;
      }
    if (top) return to_dominant_label(mu);
  }
  throw std::domain_error("occurring weights have no unique maximum");
}

}  // namespace congrep
