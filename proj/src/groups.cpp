#include "congrep/groups.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace congrep {

namespace {

std::string key_of(const FFMatrix& v) {
  std::string k(v.cols(), '\0');
  for (std::size_t c = 0; c < v.cols(); ++c) k[c] = static_cast<char>(v(0, c));
  return k;
}

}  // namespace

FFMatrix SymplecticSpace::gram() const {
  FFMatrix q(p, dimension(), dimension());
  for (std::size_t i = 0; i < static_cast<std::size_t>(genus); ++i) {
    q.set(2 * i, 2 * i + 1, 1);
    q.set(2 * i + 1, 2 * i, p - 1);
  }
  return q;
}

std::uint32_t SymplecticSpace::pairing(const FFMatrix& u, const FFMatrix& v) const {
  return (u * gram() * v.transpose())(0, 0);
}

std::string SymplecticSpace::basis_name(std::size_t index) {
  return std::string(index % 2 ? "b" : "a") + std::to_string(index / 2 + 1);
}

void Representation::add_generator(std::string name, FFMatrix matrix) {
  if (matrix.rows() != dim_ || matrix.cols() != dim_ || matrix.prime() != p_)
    throw std::invalid_argument("Representation: generator " + name + " has the wrong shape");
  if (std::find(names_.begin(), names_.end(), name) != names_.end())
    throw std::invalid_argument("Representation: duplicate generator name " + name);
  names_.push_back(std::move(name));
  gens_.push_back(std::move(matrix));
}

bool Representation::is_valid() const {
  return std::all_of(gens_.begin(), gens_.end(), [&](const FFMatrix& g) {
    return g.rows() == dim_ && g.cols() == dim_ && rank(g) == dim_;
  });
}

Representation Representation::dual() const {
  Representation out(p_, dim_);
  for (std::size_t i = 0; i < gens_.size(); ++i) out.add_generator(names_[i], inverse(gens_[i]).transpose());
  return out;
}

Representation Representation::transposed() const {
  Representation out(p_, dim_);
  for (std::size_t i = 0; i < gens_.size(); ++i) out.add_generator(names_[i], gens_[i].transpose());
  return out;
}

Representation trivial_representation(std::uint32_t p, const std::vector<std::string>& names) {
  Representation out(p, 1);
  for (const auto& n : names) out.add_generator(n, FFMatrix::identity(p, 1));
  return out;
}

FFMatrix transvection(const SymplecticSpace& space, const FFMatrix& u) {
  const std::size_t n = space.dimension();
  if (u.rows() != 1 || u.cols() != n) throw std::invalid_argument("transvection: vector has the wrong length");
  const FFMatrix qu = space.gram() * u.transpose();
  FFMatrix t = FFMatrix::identity(space.p, n);
  for (std::size_t j = 0; j < n; ++j)
    if (const auto c = qu(j, 0)) t.add_scaled_row(j, u, 0, c);
  return t;
}

Representation burkhardt_generators(const SymplecticSpace& space) {
  const std::uint32_t p = space.p;
  const std::size_t n = space.dimension();
  const std::size_t g = static_cast<std::size_t>(space.genus);
  if (g < 1) throw std::invalid_argument("burkhardt_generators: genus must be positive");
  Representation rep(p, n);

  rep.add_generator("transvection", transvection(space, FFMatrix::unit_vector(p, n, 1)));

  FFMatrix rot = FFMatrix::identity(p, n);
  rot.set(0, 0, 0);
  rot.set(0, 1, 1);
  rot.set(1, 1, 0);
  rot.set(1, 0, p - 1);
  rep.add_generator("rotation", rot);

  if (g >= 2) {
    FFMatrix mix = FFMatrix::identity(p, n);
    mix.set(0, 3, p - 1);
    mix.set(2, 1, p - 1);
    rep.add_generator("mix", mix);
  }
  for (std::size_t i = 0; i + 1 < g; ++i) {
    FFMatrix sw(p, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t target = j;
      if (j / 2 == i) target = j + 2;
      else if (j / 2 == i + 1) target = j - 2;
      sw.set(j, target, 1);
    }
    rep.add_generator("swap" + std::to_string(i + 1), sw);
  }
  return rep;
}

bool is_symplectic(const SymplecticSpace& space, const FFMatrix& g) {
  const FFMatrix q = space.gram();
  return g * q * g.transpose() == q;
}

Representation sl_generators(int n, std::uint32_t p) {
  if (n < 2) throw std::invalid_argument("sl_generators: n must be at least 2");
  const std::size_t dim = static_cast<std::size_t>(n);
  Representation rep(p, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      if (i == j) continue;
      FFMatrix e = FFMatrix::identity(p, dim);
      e.set(j, i, 1);
      rep.add_generator("E" + std::to_string(i + 1) + "," + std::to_string(j + 1), e);
    }
  return rep;
}

std::size_t orbit_size(const Representation& rep, const FFMatrix& v) {
  std::unordered_set<std::string> seen{key_of(v)};
  std::deque<FFMatrix> queue{v};
  while (!queue.empty()) {
    const FFMatrix w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : rep.generators()) {
      FFMatrix img = w * g;
      if (seen.insert(key_of(img)).second) queue.push_back(std::move(img));
    }
  }
  return seen.size();
}

FFMatrix word_matrix(const Representation& rep, const std::vector<std::size_t>& word) {
  FFMatrix m = FFMatrix::identity(rep.prime(), rep.dim());
  for (auto i : word) m = m * rep.generator(i);
  return m;
}

}  // namespace congrep
