#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace congrep {

/// Dense matrix over a prime field F_p, 2 <= p <= 251.
/// Over F_2 rows are packed into 64-bit words unless byte storage is requested.
class FFMatrix {
 public:
  enum class Storage { packed, bytes };

  FFMatrix() = default;
  FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);
  FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols, Storage storage);

  static FFMatrix identity(std::uint32_t p, std::size_t n);
  static FFMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::uint32_t>>& rows);
  static FFMatrix row_vector(std::uint32_t p, std::span<const std::uint32_t> entries);
  static FFMatrix unit_vector(std::uint32_t p, std::size_t length, std::size_t index);

  std::uint32_t prime() const noexcept { return p_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Storage storage() const noexcept { return storage_; }
  bool is_packed() const noexcept { return storage_ == Storage::packed; }
  FFMatrix with_storage(Storage storage) const;

  std::uint32_t operator()(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint32_t value);

  void swap_rows(std::size_t a, std::size_t b);
  void scale_row(std::size_t r, std::uint32_t s);
  /// row dst += s * src.row(src_row); src may alias *this.
  void add_scaled_row(std::size_t dst, const FFMatrix& src, std::size_t src_row, std::uint32_t s);
  bool is_zero_row(std::size_t r) const;
  bool is_zero() const;
  /// Column of the first nonzero entry of row r, or cols() when the row vanishes.
  std::size_t leading_column(std::size_t r) const;

  FFMatrix row(std::size_t r) const;
  void set_row(std::size_t r, const FFMatrix& src, std::size_t src_row = 0);
  void append_rows(const FFMatrix& other);
  FFMatrix select_rows(std::span<const std::size_t> indices) const;
  FFMatrix block(std::size_t r0, std::size_t c0, std::size_t nrows, std::size_t ncols) const;
  std::vector<std::uint32_t> row_entries(std::size_t r) const;

  FFMatrix transpose() const;

  FFMatrix& operator+=(const FFMatrix& other);
  FFMatrix& operator-=(const FFMatrix& other);
  FFMatrix& operator*=(std::uint32_t s);
  friend FFMatrix operator+(FFMatrix a, const FFMatrix& b) { return a += b; }
  friend FFMatrix operator-(FFMatrix a, const FFMatrix& b) { return a -= b; }
  friend FFMatrix operator*(FFMatrix a, std::uint32_t s) { return a *= s; }
  friend FFMatrix operator*(const FFMatrix& a, const FFMatrix& b);

  /// Entrywise comparison; storage mode is not observable.
  friend bool operator==(const FFMatrix& a, const FFMatrix& b);

  std::string to_string() const;

  std::span<const std::uint64_t> packed_row(std::size_t r) const {
    return {words_.data() + r * stride_, stride_};
  }
  std::span<const std::uint8_t> byte_row(std::size_t r) const {
    return {bytes_.data() + r * cols_, cols_};
  }

 private:
  std::uint64_t* word_ptr(std::size_t r) { return words_.data() + r * stride_; }
  std::uint8_t* byte_ptr(std::size_t r) { return bytes_.data() + r * cols_; }

  std::uint32_t p_{2};
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::size_t stride_{0};
  Storage storage_{Storage::packed};
  std::vector<std::uint64_t> words_;
  std::vector<std::uint8_t> bytes_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint32_t p);

struct RrefResult {
  FFMatrix form;
  std::size_t rank{0};
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FFMatrix& m);
std::size_t rank(const FFMatrix& m);
/// Rows span the right null space {x : m x^T = 0}.
FFMatrix kernel_basis(const FFMatrix& m);
/// Rows span the left null space {v : v m = 0}.
FFMatrix left_kernel(const FFMatrix& m);
FFMatrix inverse(const FFMatrix& m);
std::uint32_t determinant(const FFMatrix& m);

/// Subspace of F_p^n held as a canonical rref row basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::uint32_t p, std::size_t ambient);
  static Subspace span(const FFMatrix& rows);

  std::uint32_t prime() const noexcept { return basis_.prime(); }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return pivots_.size(); }
  const FFMatrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v with its pivot coordinates cleared against the basis.
  FFMatrix reduce(const FFMatrix& v, std::size_t row = 0) const;
  bool contains(const FFMatrix& v, std::size_t row = 0) const;
  bool contains(const Subspace& other) const;
  /// Coefficients c with v = c * basis(); requires contains(v).
  FFMatrix coordinates(const FFMatrix& v, std::size_t row = 0) const;
  Subspace join(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_{0};
  FFMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace congrep
