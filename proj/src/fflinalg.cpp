#include "congrep/fflinalg.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace congrep {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

void require_same_shape(const FFMatrix& a, const FFMatrix& b, const char* what) {
  if (a.prime() != b.prime() || a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(what) + ": shape or field mismatch");
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse_mod: zero has no inverse");
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FFMatrix::FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : FFMatrix(p, rows, cols, p == 2 ? Storage::packed : Storage::bytes) {}

FFMatrix::FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, Storage storage)
    : p_(p), rows_(rows), cols_(cols), storage_(storage) {
  if (p < 2 || p > 251 || !is_prime(p)) throw std::invalid_argument("FFMatrix: modulus must be a prime <= 251");
  if (storage == Storage::packed && p != 2) throw std::invalid_argument("FFMatrix: packed storage needs p = 2");
  if (storage_ == Storage::packed) {
    stride_ = words_for(cols);
    words_.assign(rows * stride_, 0);
  } else {
    bytes_.assign(rows * cols, 0);
  }
}

FFMatrix FFMatrix::identity(std::uint32_t p, std::size_t n) {
  FFMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FFMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("FFMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FFMatrix FFMatrix::row_vector(std::uint32_t p, std::span<const std::uint32_t> entries) {
  FFMatrix m(p, 1, entries.size());
  for (std::size_t c = 0; c < entries.size(); ++c) m.set(0, c, entries[c]);
  return m;
}

FFMatrix FFMatrix::unit_vector(std::uint32_t p, std::size_t length, std::size_t index) {
  FFMatrix m(p, 1, length);
  m.set(0, index, 1);
  return m;
}

FFMatrix FFMatrix::with_storage(Storage storage) const {
  if (storage == storage_) return *this;
  FFMatrix out(p_, rows_, cols_, storage);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.set(r, c, (*this)(r, c));
  return out;
}

std::uint32_t FFMatrix::operator()(std::size_t r, std::size_t c) const {
  if (storage_ == Storage::packed)
    return static_cast<std::uint32_t>((words_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1U);
  return bytes_[r * cols_ + c];
}

void FFMatrix::set(std::size_t r, std::size_t c, std::uint32_t value) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("FFMatrix::set");
  value %= p_;
  if (storage_ == Storage::packed) {
    auto& w = words_[r * stride_ + c / kWordBits];
    const std::uint64_t bit = std::uint64_t{1} << (c % kWordBits);
    w = value ? (w | bit) : (w & ~bit);
  } else {
    bytes_[r * cols_ + c] = static_cast<std::uint8_t>(value);
  }
}

void FFMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  if (storage_ == Storage::packed)
    std::swap_ranges(word_ptr(a), word_ptr(a) + stride_, word_ptr(b));
  else
    std::swap_ranges(byte_ptr(a), byte_ptr(a) + cols_, byte_ptr(b));
}

void FFMatrix::scale_row(std::size_t r, std::uint32_t s) {
  s %= p_;
  if (storage_ == Storage::packed) {
    if (s == 0) std::fill(word_ptr(r), word_ptr(r) + stride_, 0);
    return;
  }
  auto* row = byte_ptr(r);
  for (std::size_t c = 0; c < cols_; ++c) row[c] = static_cast<std::uint8_t>((row[c] * s) % p_);
}

void FFMatrix::add_scaled_row(std::size_t dst, const FFMatrix& src, std::size_t src_row, std::uint32_t s) {
  if (src.cols_ != cols_ || src.p_ != p_) throw std::invalid_argument("add_scaled_row: shape mismatch");
  s %= p_;
  if (s == 0) return;
  if (storage_ == Storage::packed && src.storage_ == Storage::packed) {
    auto* d = word_ptr(dst);
    const auto* q = src.words_.data() + src_row * src.stride_;
    for (std::size_t w = 0; w < stride_; ++w) d[w] ^= q[w];
    return;
  }
  if (storage_ == Storage::bytes && src.storage_ == Storage::bytes) {
    auto* d = byte_ptr(dst);
    const auto* q = src.bytes_.data() + src_row * src.cols_;
    for (std::size_t c = 0; c < cols_; ++c)
      if (q[c]) d[c] = static_cast<std::uint8_t>((d[c] + s * q[c]) % p_);
    return;
  }
  for (std::size_t c = 0; c < cols_; ++c) {
    const std::uint32_t v = src(src_row, c);
    if (v) set(dst, c, (*this)(dst, c) + s * v);
  }
}

bool FFMatrix::is_zero_row(std::size_t r) const {
  if (storage_ == Storage::packed) {
    const auto row = packed_row(r);
    return std::all_of(row.begin(), row.end(), [](std::uint64_t w) { return w == 0; });
  }
  const auto row = byte_row(r);
  return std::all_of(row.begin(), row.end(), [](std::uint8_t b) { return b == 0; });
}

bool FFMatrix::is_zero() const {
  if (storage_ == Storage::packed)
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  return std::all_of(bytes_.begin(), bytes_.end(), [](std::uint8_t b) { return b == 0; });
}

std::size_t FFMatrix::leading_column(std::size_t r) const {
  if (storage_ == Storage::packed) {
    const auto row = packed_row(r);
    for (std::size_t w = 0; w < stride_; ++w)
      if (row[w]) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(row[w]));
    return cols_;
  }
  const auto row = byte_row(r);
  for (std::size_t c = 0; c < cols_; ++c)
    if (row[c]) return c;
  return cols_;
}

FFMatrix FFMatrix::row(std::size_t r) const {
  FFMatrix out(p_, 1, cols_, storage_);
  out.set_row(0, *this, r);
  return out;
}

void FFMatrix::set_row(std::size_t r, const FFMatrix& src, std::size_t src_row) {
  if (src.cols_ != cols_ || src.p_ != p_) throw std::invalid_argument("set_row: shape mismatch");
  if (storage_ == Storage::packed && src.storage_ == Storage::packed) {
    std::copy_n(src.words_.data() + src_row * src.stride_, stride_, word_ptr(r));
  } else if (storage_ == Storage::bytes && src.storage_ == Storage::bytes) {
    std::copy_n(src.bytes_.data() + src_row * src.cols_, cols_, byte_ptr(r));
  } else {
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, src(src_row, c));
  }
}

void FFMatrix::append_rows(const FFMatrix& other) {
  if (other.rows_ == 0) return;
  if (other.cols_ != cols_ || other.p_ != p_) throw std::invalid_argument("append_rows: shape mismatch");
  const std::size_t old = rows_;
  rows_ += other.rows_;
  if (storage_ == Storage::packed)
    words_.resize(rows_ * stride_, 0);
  else
    bytes_.resize(rows_ * cols_, 0);
  for (std::size_t r = 0; r < other.rows_; ++r) set_row(old + r, other, r);
}

FFMatrix FFMatrix::select_rows(std::span<const std::size_t> indices) const {
  FFMatrix out(p_, indices.size(), cols_, storage_);
  for (std::size_t i = 0; i < indices.size(); ++i) out.set_row(i, *this, indices[i]);
  return out;
}

FFMatrix FFMatrix::block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const {
  if (r0 + nrows > rows_ || c0 + ncols > cols_) throw std::out_of_range("FFMatrix::block");
  FFMatrix out(p_, nrows, ncols, storage_);
  for (std::size_t r = 0; r < nrows; ++r)
    for (std::size_t c = 0; c < ncols; ++c)
      if (auto v = (*this)(r0 + r, c0 + c)) out.set(r, c, v);
  return out;
}

std::vector<std::uint32_t> FFMatrix::row_entries(std::size_t r) const {
  std::vector<std::uint32_t> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
  return out;
}

FFMatrix FFMatrix::transpose() const {
  FFMatrix out(p_, cols_, rows_, storage_);
  if (storage_ == Storage::packed) {
    for (std::size_t r = 0; r < rows_; ++r) {
      const auto row = packed_row(r);
      for (std::size_t w = 0; w < stride_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const std::size_t c = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          out.words_[c * out.stride_ + r / kWordBits] |= std::uint64_t{1} << (r % kWordBits);
        }
      }
    }
    return out;
  }
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.bytes_[c * rows_ + r] = bytes_[r * cols_ + c];
  return out;
}

FFMatrix& FFMatrix::operator+=(const FFMatrix& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t r = 0; r < rows_; ++r) add_scaled_row(r, other, r, 1);
  return *this;
}

FFMatrix& FFMatrix::operator-=(const FFMatrix& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t r = 0; r < rows_; ++r) add_scaled_row(r, other, r, p_ - 1);
  return *this;
}

FFMatrix& FFMatrix::operator*=(std::uint32_t s) {
  for (std::size_t r = 0; r < rows_; ++r) scale_row(r, s);
  return *this;
}

FFMatrix operator*(const FFMatrix& a, const FFMatrix& b) {
  if (a.cols_ != b.rows_ || a.p_ != b.p_) throw std::invalid_argument("matrix product: shape mismatch");
  const FFMatrix& rhs_ref = b;
  FFMatrix converted;
  const FFMatrix* rhs = &rhs_ref;
  if (b.storage_ != a.storage_) {
    converted = b.with_storage(a.storage_);
    rhs = &converted;
  }
  FFMatrix out(a.p_, a.rows_, b.cols_, a.storage_);
  if (a.storage_ == FFMatrix::Storage::packed) {
    for (std::size_t r = 0; r < a.rows_; ++r) {
      auto* dst = out.word_ptr(r);
      const auto row = a.packed_row(r);
      for (std::size_t w = 0; w < a.stride_; ++w) {
        std::uint64_t bits = row[w];
        while (bits) {
          const std::size_t k = w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          const auto* src = rhs->words_.data() + k * rhs->stride_;
          for (std::size_t x = 0; x < out.stride_; ++x) dst[x] ^= src[x];
        }
      }
    }
    return out;
  }
  std::vector<std::uint32_t> acc(b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    const auto row = a.byte_row(r);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::uint32_t s = row[k];
      if (!s) continue;
      const auto* src = rhs->bytes_.data() + k * rhs->cols_;
      for (std::size_t c = 0; c < b.cols_; ++c) acc[c] += s * src[c];
    }
    auto* dst = out.byte_ptr(r);
    for (std::size_t c = 0; c < b.cols_; ++c) dst[c] = static_cast<std::uint8_t>(acc[c] % a.p_);
  }
  return out;
}

bool operator==(const FFMatrix& a, const FFMatrix& b) {
  if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.storage_ == b.storage_) return a.storage_ == FFMatrix::Storage::packed ? a.words_ == b.words_ : a.bytes_ == b.bytes_;
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c)
      if (a(r, c) != b(r, c)) return false;
  return true;
}

std::string FFMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(const FFMatrix& m) {
  RrefResult res{m, 0, {}};
  FFMatrix& a = res.form;
  const std::uint32_t p = a.prime();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(r, piv);
    a.scale_row(r, inverse_mod(a(r, c), p));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      if (const std::uint32_t v = a(i, c)) a.add_scaled_row(i, a, r, p - v);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const FFMatrix& m) { return rref(m).rank; }

FFMatrix kernel_basis(const FFMatrix& m) {
  const auto rr = rref(m);
  const std::uint32_t p = m.prime();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : rr.pivots) is_pivot[c] = true;
  FFMatrix out(p, m.cols() - rr.rank, m.cols(), m.storage());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    out.set(k, f, 1);
    for (std::size_t i = 0; i < rr.rank; ++i)
      if (const auto v = rr.form(i, f)) out.set(k, rr.pivots[i], p - v);
    ++k;
  }
  return out;
}

FFMatrix left_kernel(const FFMatrix& m) { return kernel_basis(m.transpose()); }

FFMatrix inverse(const FFMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  const std::uint32_t p = m.prime();
  FFMatrix a = m;
  FFMatrix inv = FFMatrix::identity(p, n).with_storage(m.storage());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse: matrix is singular");
    a.swap_rows(c, piv);
    inv.swap_rows(c, piv);
    const std::uint32_t s = inverse_mod(a(c, c), p);
    a.scale_row(c, s);
    inv.scale_row(c, s);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c) continue;
      if (const std::uint32_t v = a(i, c)) {
        a.add_scaled_row(i, a, c, p - v);
        inv.add_scaled_row(i, inv, c, p - v);
      }
    }
  }
  return inv;
}

std::uint32_t determinant(const FFMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const std::size_t n = m.rows();
  const std::uint32_t p = m.prime();
  FFMatrix a = m;
  std::uint32_t det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      a.swap_rows(c, piv);
      det = (det * (p - 1)) % p;
    }
    const std::uint32_t d = a(c, c);
    det = (det * d) % p;
    const std::uint32_t inv = inverse_mod(d, p);
    for (std::size_t i = c + 1; i < n; ++i)
      if (const std::uint32_t v = a(i, c)) a.add_scaled_row(i, a, c, (p - (v * inv) % p) % p);
  }
  return det;
}

Subspace::Subspace(std::uint32_t p, std::size_t ambient) : ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::span(const FFMatrix& rows) {
  auto rr = rref(rows);
  Subspace s;
  s.ambient_ = rows.cols();
  std::vector<std::size_t> keep(rr.rank);
  for (std::size_t i = 0; i < rr.rank; ++i) keep[i] = i;
  s.basis_ = rr.form.select_rows(keep);
  s.pivots_ = std::move(rr.pivots);
  return s;
}

FFMatrix Subspace::reduce(const FFMatrix& v, std::size_t row) const {
  FFMatrix out = v.row(row);
  const std::uint32_t p = prime();
  for (std::size_t i = 0; i < pivots_.size(); ++i)
    if (const auto c = out(0, pivots_[i])) out.add_scaled_row(0, basis_, i, p - c);
  return out;
}

bool Subspace::contains(const FFMatrix& v, std::size_t row) const { return reduce(v, row).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_, i)) return false;
  return true;
}

FFMatrix Subspace::coordinates(const FFMatrix& v, std::size_t row) const {
  if (!contains(v, row)) throw std::domain_error("Subspace::coordinates: vector not in subspace");
  FFMatrix c(prime(), 1, dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c.set(0, i, v(row, pivots_[i]));
  return c;
}

Subspace Subspace::join(const Subspace& other) const {
  FFMatrix rows = basis_;
  rows.append_rows(other.basis_.with_storage(rows.storage()));
  return span(rows);
}

}  // namespace congrep
