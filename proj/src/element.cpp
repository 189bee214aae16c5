#include "solvagraph/element.hpp"

#include <algorithm>
#include <sstream>

#include "solvagraph/errors.hpp"
#include "solvagraph/numtheory.hpp"

namespace solvagraph {

namespace {

void append_u16(std::string& s, int v) {
  s.push_back(static_cast<char>(v & 0xff));
  s.push_back(static_cast<char>((v >> 8) & 0xff));
}

void append_u32(std::string& s, int v) {
  for (int k = 0; k < 4; ++k) s.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
}

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

GroupElement::GroupElement(ElementKind kind, int p, int dim, std::vector<int> data)
    : kind_(kind), p_(p), dim_(dim), data_(std::move(data)) {
  build_key();
}

void GroupElement::build_key() {
  key_.clear();
  switch (kind_) {
    case ElementKind::Permutation:
      key_.push_back('P');
      append_u16(key_, degree());
      for (int v : data_) append_u16(key_, v);
      break;
    case ElementKind::MatrixModP:
      key_.push_back('M');
      append_u16(key_, p_);
      append_u16(key_, dim_);
      for (int v : data_) append_u16(key_, v);
      break;
    case ElementKind::TableIndex:
      key_.push_back('T');
      append_u32(key_, data_[0]);
      break;
  }
}

GroupElement GroupElement::permutation(std::vector<int> images) {
  int d = static_cast<int>(images.size());
  if (d == 0) throw BadParams("permutation degree must be positive");
  if (d > 0xffff) throw BadParams("permutation degree exceeds 65535");  // encoding width
  std::vector<char> seen(d, 0);
  for (int v : images) {
    if (v < 0 || v >= d || seen[v]) throw BadParams("permutation images are not a bijection");
    seen[v] = 1;
  }
  return GroupElement(ElementKind::Permutation, 0, 0, std::move(images));
}

GroupElement GroupElement::identity_permutation(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return permutation(std::move(img));
}

GroupElement GroupElement::matrix_mod_p(int p, int dim, std::vector<int> entries) {
  if (!is_prime(p)) throw BadParams("matrix modulus must be prime");
  if (p > 0xffff) throw BadParams("matrix modulus exceeds 65535");  // encoding width
  if (dim < 1) throw BadParams("matrix dimension must be positive");
  if (static_cast<int>(entries.size()) != dim * dim)
    throw BadParams("matrix entry count does not match dimension");
  for (int v : entries)
    if (v < 0 || v >= p) throw BadParams("matrix entries must lie in [0, p)");
  invert_matrix_mod_p(entries, p, dim);  // rejects singular input
  return GroupElement(ElementKind::MatrixModP, p, dim, std::move(entries));
}

GroupElement GroupElement::identity_matrix(int p, int dim) {
  std::vector<int> e(static_cast<std::size_t>(dim) * dim, 0);
  for (int i = 0; i < dim; ++i) e[static_cast<std::size_t>(i) * dim + i] = 1;
  return matrix_mod_p(p, dim, std::move(e));
}

GroupElement GroupElement::table_index(int idx) {
  if (idx < 0) throw BadParams("table index must be non-negative");
  return GroupElement(ElementKind::TableIndex, 0, 0, {idx});
}

bool GroupElement::is_identity() const {
  switch (kind_) {
    case ElementKind::Permutation:
      for (int i = 0; i < degree(); ++i)
        if (data_[i] != i) return false;
      return true;
    case ElementKind::MatrixModP:
      for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
          if (data_[static_cast<std::size_t>(i) * dim_ + j] != (i == j ? 1 : 0)) return false;
      return true;
    case ElementKind::TableIndex:
      return data_[0] == 0;
  }
  return false;
}

GroupElement GroupElement::compose(const GroupElement& rhs) const {
  if (kind_ != rhs.kind_) throw IncompatibleElements("cannot compose elements of different kinds");
  switch (kind_) {
    case ElementKind::Permutation: {
      if (degree() != rhs.degree())
        throw IncompatibleElements("cannot compose permutations of different degrees");
      std::vector<int> img(degree());
      for (int i = 0; i < degree(); ++i) img[i] = data_[rhs.data_[i]];
      return GroupElement(ElementKind::Permutation, 0, 0, std::move(img));
    }
    case ElementKind::MatrixModP: {
      if (p_ != rhs.p_ || dim_ != rhs.dim_)
        throw IncompatibleElements("cannot compose matrices over different fields or dimensions");
      int n = dim_;
      std::vector<int> out(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
          long long a = data_[static_cast<std::size_t>(i) * n + k];
          if (!a) continue;
          for (int j = 0; j < n; ++j)
            out[static_cast<std::size_t>(i) * n + j] =
                static_cast<int>((out[static_cast<std::size_t>(i) * n + j] +
                                  a * rhs.data_[static_cast<std::size_t>(k) * n + j]) %
                                 p_);
        }
      return GroupElement(ElementKind::MatrixModP, p_, n, std::move(out));
    }
    case ElementKind::TableIndex:
      throw IncompatibleElements("table-index elements have no intrinsic product");
  }
  throw IncompatibleElements("unknown element kind");
}

GroupElement GroupElement::inverse() const {
  switch (kind_) {
    case ElementKind::Permutation: {
      std::vector<int> img(degree());
      for (int i = 0; i < degree(); ++i) img[data_[i]] = i;
      return GroupElement(ElementKind::Permutation, 0, 0, std::move(img));
    }
    case ElementKind::MatrixModP:
      return GroupElement(ElementKind::MatrixModP, p_, dim_, invert_matrix_mod_p(data_, p_, dim_));
    case ElementKind::TableIndex:
      throw IncompatibleElements("table-index elements have no intrinsic inverse");
  }
  throw IncompatibleElements("unknown element kind");
}

std::string GroupElement::to_string() const {
  std::ostringstream out;
  switch (kind_) {
    case ElementKind::Permutation: {
      int d = degree();
      std::vector<char> done(d, 0);
      bool wrote = false;
      for (int start = 0; start < d; ++start) {
        if (done[start] || data_[start] == start) continue;
        out << '(';
        int p = start;
        bool first = true;
        while (!done[p]) {
          done[p] = 1;
          if (!first) out << ',';
          out << (p + 1);
          first = false;
          p = data_[p];
        }
        out << ')';
        wrote = true;
      }
      if (!wrote) out << "()";
      break;
    }
    case ElementKind::MatrixModP: {
      out << '[';
      for (int i = 0; i < dim_; ++i) {
        if (i) out << ',';
        out << '[';
        for (int j = 0; j < dim_; ++j) {
          if (j) out << ',';
          out << data_[static_cast<std::size_t>(i) * dim_ + j];
        }
        out << ']';
      }
      out << ']';
      break;
    }
    case ElementKind::TableIndex:
      out << '#' << data_[0];
      break;
  }
  return out.str();
}

std::vector<int> invert_matrix_mod_p(const std::vector<int>& m, int p, int n) {
  std::vector<long long> a(static_cast<std::size_t>(n) * 2 * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * 2 * n + j] = m[static_cast<std::size_t>(i) * n + j];
    a[static_cast<std::size_t>(i) * 2 * n + n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (a[static_cast<std::size_t>(r) * 2 * n + col] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw SingularMatrix("matrix is not invertible mod p");
    if (pivot != col)
      for (int j = 0; j < 2 * n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot) * 2 * n + j], a[static_cast<std::size_t>(col) * 2 * n + j]);
    long long inv = mod_pow(a[static_cast<std::size_t>(col) * 2 * n + col], p - 2, p);
    for (int j = 0; j < 2 * n; ++j)
      a[static_cast<std::size_t>(col) * 2 * n + j] = a[static_cast<std::size_t>(col) * 2 * n + j] * inv % p;
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      long long f = a[static_cast<std::size_t>(r) * 2 * n + col] % p;
      if (!f) continue;
      for (int j = 0; j < 2 * n; ++j) {
        long long v = a[static_cast<std::size_t>(r) * 2 * n + j] -
                      f * a[static_cast<std::size_t>(col) * 2 * n + j] % p;
        a[static_cast<std::size_t>(r) * 2 * n + j] = ((v % p) + p) % p;
      }
    }
  }
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      out[static_cast<std::size_t>(i) * n + j] = static_cast<int>(a[static_cast<std::size_t>(i) * 2 * n + n + j]);
  return out;
}

}  // namespace solvagraph
